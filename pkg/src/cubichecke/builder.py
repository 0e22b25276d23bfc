"""Assembly of the braid generator matrices of a regular module in its path basis.

S1 is diagonal (the eigenvalue along each path), S2 and S3 are block diagonal
with blocks reconstructed from their projection data.  The blocks fix each
generator only up to a diagonal rescaling of the basis; the braid relation
between S2 and S3 pins the remaining freedom.  The solver works with one
scalar per path: a spanning forest of the bipartite path graph (level-3
constituents versus level-2 labels) is pinned to 1, and the few remaining
cycle scalars are solved from braid-residual entries that are linear in a
single unknown, followed by full verification of every defining relation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .catalog import (
    ModuleLabel,
    delta_scalar,
    enumerate_paths,
    spec_for,
)
from .errors import GaugeInconsistent, PoleOnLocus
from .jm import AB2BlockSpec, ab2_matrix, block_spec
from .matrix import Matrix
from .ratfunc import RatFunc
from .specialize import Specialization


@dataclass
class GeneratorSet:
    label: ModuleLabel
    level: int
    basis: tuple                      # ordered Path list
    matrices: dict                    # generator index -> Matrix
    context: Specialization | None
    gauge: str
    certificate: dict = field(default_factory=dict)

    @property
    def S1(self) -> Matrix:
        return self.matrices[1]

    @property
    def S2(self) -> Matrix:
        return self.matrices[2]

    @property
    def S3(self) -> Matrix:
        return self.matrices[3]

    def generators(self):
        return [self.matrices[i] for i in sorted(self.matrices)]

    def eigenvalues(self) -> tuple:
        """Images of the three eigenvalues in the working field."""
        lams = tuple(RatFunc.var(k) for k in range(3))
        if self.context is None:
            return lams
        return tuple(self.context.apply_ratfunc(l) for l in lams)

    def delta_matrix(self) -> Matrix:
        """The half twist as the fixed word S1 S2 S3 S1 S2 S1 (level 4)."""
        if self.level == 4:
            s1, s2, s3 = self.S1, self.S2, self.S3
            return s1 * s2 * s3 * s1 * s2 * s1
        s1, s2 = self.S1, self.S2
        return s1 * s2 * s1


def _ctx_block(spec: AB2BlockSpec, ctx: Specialization | None) -> AB2BlockSpec:
    if ctx is None:
        return spec
    return AB2BlockSpec(
        tuple(ctx.apply_ratfunc(x) for x in spec.x),
        ctx.apply_ratfunc(spec.delta),
        tuple((ctx.apply_ratfunc(e), m) for (e, m) in spec.a_spectrum),
        ctx.apply_ratfunc(spec.rank1_eigenvalue),
        tuple(ctx.apply_ratfunc(e) for e in spec.pair),
        spec.paths,
    )


def _block_diag(n: int, placements) -> Matrix:
    out = Matrix.zero(n, n)
    for idx, block in placements:
        for a, i in enumerate(idx):
            for b, j in enumerate(idx):
                out.entries[i][j] = block.entries[a][b]
    return out


def _s2_groups(paths) -> list[list[int]]:
    groups: dict = {}
    for k, t in enumerate(paths):
        groups.setdefault(t.g3, []).append(k)
    return list(groups.values())


def _s3_groups(paths) -> list[list[int]]:
    groups: dict = {}
    for k, t in enumerate(paths):
        groups.setdefault(t.g2, []).append(k)
    return list(groups.values())


@lru_cache(maxsize=None)
def _generic_block(kind: str, g2: ModuleLabel | None, g4: ModuleLabel, gauge: str) -> Matrix:
    spec = block_spec(g2, g4, 2 if kind == "s2" else 3)
    return ab2_matrix(spec, spec.rank1_eigenvalue, gauge)


def _entry_order(a: RatFunc, gen) -> int | None:
    """Vanishing order of a nonzero entry along the prime generator (None = zero entry)."""
    from .laurent import divides, exact_div

    if a.is_zero():
        return None
    num, _ = a.num.shift_nonnegative()
    order = 0
    while divides(gen, num):
        num = exact_div(num, gen)
        order += 1
    for f, e in a.fac.items():
        ff = f
        while divides(gen, ff):
            ff = exact_div(ff, gen)
            order -= e
    return order


def _adapted_scalars(mats: list[Matrix], gen) -> list[int]:
    """Powers of the prime generator rescaling the path basis into the local
    ring: the difference constraints k_t - k_r <= ord(entry_rt) over every
    generator matrix, solved by shortest-path relaxation.  Infeasibility is a
    genuine pole on the locus.
    """
    n = mats[0].rows
    best: dict = {}
    for m in mats:
        for r in range(n):
            for t in range(n):
                if r == t:
                    continue
                o = _entry_order(m.entries[r][t], gen)
                if o is None:
                    continue
                if (r, t) not in best or o < best[(r, t)]:
                    best[(r, t)] = o
    if all(o >= 0 for o in best.values()):
        return [0] * n
    k = [0] * n
    for _ in range(n + 1):
        changed = False
        for (r, t), o in best.items():
            if k[r] + o < k[t]:
                k[t] = k[r] + o
                changed = True
        if not changed:
            return k
    raise PoleOnLocus("no locus-adapted diagonal gauge exists")


def _conjugate_by_powers(m: Matrix, gen, k: list[int]) -> Matrix:
    gpoly = RatFunc.from_poly(gen)
    entries = []
    for r in range(m.rows):
        row = []
        for t in range(m.cols):
            a = m.entries[r][t]
            d = k[r] - k[t]
            if d and not a.is_zero():
                a = a * gpoly ** d
            row.append(a)
        entries.append(row)
    return Matrix(entries)


@lru_cache(maxsize=None)
def assemble_generic(label: ModuleLabel, gauge: str = "row") -> GeneratorSet:
    """Generic-field assembly: blocks in canonical gauge plus the solved
    diagonal rescaling enforcing the braid relation."""
    if label.level != 4:
        raise ValueError("assemble expects a level-4 label")
    paths = enumerate_paths(label)
    n = len(paths)
    lam = [RatFunc.var(k) for k in range(3)]
    s1 = Matrix.diagonal([lam[t.eigen_index - 1] for t in paths])
    s2_placements = []
    for idx in _s2_groups(paths):
        s2_placements.append((idx, _generic_block("s2", None, paths[idx[0]].g3, "row")))
    s2 = _block_diag(n, s2_placements)
    s3_placements = []
    for idx in _s3_groups(paths):
        s3_placements.append((idx, _generic_block("s3", paths[idx[0]].g2, label, gauge)))
    s3 = _block_diag(n, s3_placements)
    s3_final, certificate = _solve_gauge(paths, s2, s3)
    certificate["gauge"] = gauge
    return GeneratorSet(label, 4, paths, {1: s1, 2: s2, 3: s3_final}, None, gauge, certificate)


def assemble(label: ModuleLabel, ctx: Specialization | None = None, gauge: str = "row") -> GeneratorSet:
    """Build the generator matrices of a level-4 regular module.

    Generic assembly happens once per label and gauge; a specialization then
    rescales the path basis into the locus-adapted gauge (powers of the ideal
    generators clearing every entry pole) and maps the entries.  The locus may
    only fail through PathBasisUnavailable (length-3 center eigenvalues
    collide inside a block, breaking the path basis) or PoleOnLocus (no
    adapted gauge exists there; callers retry with the other gauge).
    """
    base = assemble_generic(label, gauge)
    if ctx is None:
        return base
    paths = base.basis
    for idx in _s3_groups(paths):
        spec = block_spec(paths[idx[0]].g2, label, 3)
        _ctx_block(spec, ctx).check_x_distinct()
    mats = dict(base.matrices)
    adaptation = []
    for gen in ctx.generators:
        k = _adapted_scalars([mats[2], mats[3]], gen)
        if any(k):
            mats = {i: _conjugate_by_powers(m, gen, k) for i, m in mats.items()}
        adaptation.append(tuple(k))
    mats = {i: ctx.apply_matrix(m) for i, m in mats.items()}
    certificate = dict(base.certificate)
    certificate["adapted_powers"] = adaptation
    return GeneratorSet(label, 4, paths, mats, ctx, gauge, certificate)


def assemble_k3(label: ModuleLabel, ctx: Specialization | None = None) -> GeneratorSet:
    """Build the two generator matrices of a level-3 regular module."""
    if label.level != 3:
        raise ValueError("assemble_k3 expects a level-3 label")
    s2 = _generic_block("s2", None, label, "row")
    if ctx is not None:
        for gen in ctx.generators:
            k = _adapted_scalars([s2], gen)
            if any(k):
                s2 = _conjugate_by_powers(s2, gen, k)
        s2 = ctx.apply_matrix(s2)
    lam = [RatFunc.var(k) for k in range(3)]
    if ctx is not None:
        lam = [ctx.apply_ratfunc(l) for l in lam]
    paths = block_spec(None, label, 2).paths
    s1 = Matrix.diagonal([lam[t.eigen_index - 1] for t in paths])
    return GeneratorSet(label, 3, paths, {1: s1, 2: s2}, ctx, "row", {"pinned": len(paths)})


# -- gauge solving ------------------------------------------------------------------
#
# Unknowns: one scalar per path; S3 is conjugated by diag(X).  A spanning
# forest of the bipartite graph (level-3 groups | level-2 groups, one edge per
# path) is pinned to X = 1, leaving one unknown per independent cycle (at most
# three for the nine-dimensional modules).


def _gauge_unknowns(paths) -> tuple[dict, int]:
    nodes = {}
    parent: dict = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    assignment = {}
    n_unknown = 0
    for k, t in enumerate(paths):
        a = ("g3", t.g3)
        b = ("g2", t.g2)
        for node in (a, b):
            if node not in parent:
                parent[node] = node
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            assignment[k] = None          # forest edge: pinned to 1
        else:
            assignment[k] = n_unknown     # cycle edge: unknown scalar
            n_unknown += 1
    return assignment, n_unknown


def _solve_gauge(paths, s2: Matrix, s3: Matrix):
    assignment, n_unknown = _gauge_unknowns(paths)
    pinned = sum(1 for v in assignment.values() if v is None)
    if n_unknown == 0:
        return s3, {"pinned": pinned, "solved": {}}
    n = len(paths)
    zerovec = (0,) * n_unknown

    def xvec(k):
        u = assignment[k]
        if u is None:
            return zerovec
        e = [0] * n_unknown
        e[u] = 1
        return tuple(e)

    def vsub(a, b):
        return tuple(x - y for x, y in zip(a, b))

    # gauge-polynomial matrices: entry = dict exponent-vector -> RatFunc
    def lift(m: Matrix, conjugate: bool):
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                a = m.entries[i][j]
                if a.is_zero():
                    row.append({})
                else:
                    e = vsub(xvec(i), xvec(j)) if conjugate else zerovec
                    row.append({e: a})
            out.append(row)
        return out

    def gmul(A, B):
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc: dict = {}
                for k in range(n):
                    a = A[i][k]
                    if not a:
                        continue
                    b = B[k][j]
                    if not b:
                        continue
                    for ea, ca in a.items():
                        for eb, cb in b.items():
                            e = tuple(x + y for x, y in zip(ea, eb))
                            cur = acc.get(e)
                            v = ca * cb
                            if cur is None:
                                acc[e] = v
                            else:
                                s = cur + v
                                if s.is_zero():
                                    del acc[e]
                                else:
                                    acc[e] = s
                row.append(acc)
            out.append(row)
        return out

    S2g = lift(s2, conjugate=False)
    S3g = lift(s3, conjugate=True)
    M = gmul(gmul(S2g, S3g), S2g)
    N = gmul(gmul(S3g, S2g), S3g)

    equations = []
    for i in range(n):
        for j in range(n):
            eq: dict = dict(M[i][j])
            for e, c in N[i][j].items():
                cur = eq.get(e)
                if cur is None:
                    eq[e] = -c
                else:
                    s = cur - c
                    if s.is_zero():
                        del eq[e]
                    else:
                        eq[e] = s
            if eq:
                equations.append(eq)

    solution: dict[int, RatFunc] = {}

    def substitute(eq: dict) -> dict:
        out: dict = {}
        for e, c in eq.items():
            ne = list(e)
            coeff = c
            for u, val in solution.items():
                if ne[u]:
                    coeff = coeff * (val ** ne[u])
                    ne[u] = 0
            ne = tuple(ne)
            cur = out.get(ne)
            if cur is None:
                out[ne] = coeff
            else:
                s = cur + coeff
                if s.is_zero():
                    del out[ne]
                else:
                    out[ne] = s
        return out

    remaining = set(range(n_unknown))
    free_pins = 0
    while remaining:
        progress = False
        for eq in equations:
            eq2 = substitute(eq)
            if len(eq2) != 2:
                continue
            (e1, c1), (e2, c2) = eq2.items()
            diff = vsub(e1, e2)
            live = [u for u, d in enumerate(diff) if d]
            if len(live) != 1 or abs(diff[live[0]]) != 1 or live[0] not in remaining:
                continue
            u = live[0]
            # c1 * g^e1 + c2 * g^e2 = 0  =>  g_u^(+-1) = -c2/c1
            val = -(c2 / c1)
            if diff[u] == -1:
                val = val.inv()
            if val.is_zero():
                continue
            solution[u] = val.reduce()
            remaining.discard(u)
            progress = True
        if not progress:
            # no residual entry pins the remaining scalars: genuinely free
            # parameters on this locus; pin them to 1 and let the full
            # residual verification below decide
            for u in sorted(remaining):
                solution[u] = RatFunc.one(3)
                free_pins += 1
            remaining.clear()
    if free_pins:
        for eq in equations:
            eq2 = substitute(eq)
            if any(not c.is_zero() for c in eq2.values()):
                raise GaugeInconsistent(
                    "braid residual nonzero after pinning %d free scalar(s)" % free_pins
                )

    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            a = s3.entries[i][j]
            if not a.is_zero():
                e = vsub(xvec(i), xvec(j))
                for u, d in enumerate(e):
                    if d:
                        a = a * (solution[u] ** d)
            row.append(a)
        entries.append(row)
    s3_final = Matrix(entries)
    cert = {
        "pinned": pinned,
        "free_pinned": free_pins,
        "solved": {u: str(v) for u, v in solution.items()},
    }
    return s3_final, cert


# -- verification ----------------------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    passed: bool
    residual: tuple | None = None   # (i, j) of the first nonzero residual entry


@dataclass
class VerifyReport:
    label: ModuleLabel
    checks: list

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _check_zero(name: str, m: Matrix) -> CheckResult:
    loc = m.first_nonzero()
    return CheckResult(name, loc is None, loc)


def verify(g: GeneratorSet) -> VerifyReport:
    """Exact verification of every defining relation of the module.

    Checks: far commutation, both braid relations, the cubic relation of each
    generator, the central scalar of the squared half twist, and the flip
    conjugation by the half twist.  Once the braid relations have passed, the
    scalar check is evaluated through the word identity
    Delta4^2 = Delta3^2 (s3 s2 s1^2 s2 s3), which avoids squaring the dense
    half-twist matrix; if any braid check failed it falls back to the direct
    product so that corrupted inputs are reported faithfully.
    """
    lam = g.eigenvalues()
    checks = []
    gens = {i: g.matrices[i] for i in g.matrices}
    idx = sorted(gens)
    for a in idx:
        for b in idx:
            if b - a > 1:
                checks.append(
                    _check_zero("commute_S%d_S%d" % (a, b), gens[a] * gens[b] - gens[b] * gens[a])
                )
    braid_ok = True
    for a in idx:
        if a + 1 in gens:
            lhs = gens[a] * gens[a + 1] * gens[a]
            rhs = gens[a + 1] * gens[a] * gens[a + 1]
            res = _check_zero("braid_S%d_S%d" % (a, a + 1), lhs - rhs)
            braid_ok = braid_ok and res.passed
            checks.append(res)
    n = g.S1.rows
    for a in idx:
        prod = Matrix.identity(n)
        for l in lam:
            prod = prod * gens[a].add_scalar(-l)
        checks.append(_check_zero("cubic_S%d" % a, prod))
    scalar = delta_scalar(g.label)
    if g.context is not None:
        scalar = g.context.apply_ratfunc(scalar)
    if g.level == 4 and braid_ok:
        checks.append(_scalar_check_via_jm(g, scalar))
    else:
        delta = g.delta_matrix()
        checks.append(
            _check_zero("delta_sq_scalar", delta * delta - Matrix.identity(n).scale(scalar))
        )
    if g.level == 4:
        delta = g.delta_matrix()
        for a in (1, 2, 3):
            checks.append(
                _check_zero("delta_flip_S%d" % a, delta * gens[a] - gens[4 - a] * delta)
            )
    return VerifyReport(g.label, checks)


def _scalar_check_via_jm(g: GeneratorSet, scalar: RatFunc) -> CheckResult:
    s1, s2, s3 = g.S1, g.S2, g.S3
    n = s1.rows
    center3 = [delta_scalar(t.g3) for t in g.basis]
    if g.context is not None:
        center3 = [g.context.apply_ratfunc(x) for x in center3]
    d3 = s1 * s2 * s1
    res = (d3 * d3) - Matrix.diagonal(center3)
    loc = res.first_nonzero()
    if loc is not None:
        return CheckResult("delta_sq_scalar", False, loc)
    jm = s3 * (s2 * (s1 * s1) * s2) * s3
    want = Matrix.diagonal([scalar / x for x in center3])
    return _check_zero("delta_sq_scalar", jm - want)


# -- weight diagnostics (generic context) -----------------------------------------------


def scaled_projection(m: Matrix, r: int) -> Matrix:
    """P_{k r} = prod_{s != r} (S_k - l_s), the scaled weight projection."""
    lam = [RatFunc.var(k) for k in range(3)]
    out = Matrix.identity(m.rows)
    for s in (1, 2, 3):
        if s != r:
            out = out * m.add_scalar(-lam[s - 1])
    return out


def weight_operator(g: GeneratorSet, i: int, j: int) -> Matrix:
    """B(i, j) = P_{1 i} P_{3 j}; its image is the (i, j) weight space."""
    return scaled_projection(g.S1, i) * scaled_projection(g.S3, j)


@dataclass
class WeightReport:
    label: ModuleLabel
    ranks: dict                    # (i, j) -> rank of B(i, j)
    d_scalars: dict                # 6-dim module only
    expected: dict

    @property
    def ranks_match(self) -> bool:
        return self.ranks == self.expected


def weight_report(g: GeneratorSet, with_d: bool | None = None) -> WeightReport:
    """Ranks of all weight operators, plus the d(i, j) scalars for the 6-dim module."""
    if g.context is not None:
        raise ValueError("weight diagnostics are defined in the generic context")
    spec = spec_for(g.label)
    expected = spec.weight_multiset()
    ranks = {}
    ops = {}
    for (i, j) in expected:
        op = weight_operator(g, i, j)
        ops[(i, j)] = op
        ranks[(i, j)] = op.rank()
    d_scalars = {}
    if with_d is None:
        with_d = sorted(g.label.exps, reverse=True) == [3, 2, 1]
    if with_d:
        p23 = scaled_projection(g.S2, 3)
        for (i, j), op in ops.items():
            d_scalars[(i, j)] = extract_scalar(op * p23 * op, op)
    return WeightReport(g.label, ranks, d_scalars, expected)


def extract_scalar(lhs: Matrix, rhs: Matrix) -> RatFunc:
    """The scalar c with lhs = c * rhs; verified on every entry."""
    loc = rhs.first_nonzero()
    if loc is None:
        raise ValueError("cannot extract a scalar against the zero matrix")
    i, j = loc
    c = (lhs.entries[i][j] / rhs.entries[i][j]).reduce()
    diff = lhs - Matrix([[e * c for e in row] for row in rhs.entries])
    if not diff.is_zero():
        raise ValueError("matrices are not proportional")
    return c


def alpha_scalar(g: GeneratorSet, ki: tuple, lj: tuple) -> RatFunc:
    """alpha with B(k,i) S2 B(l,j) S2 B(k,i) = alpha B(k,i) (8- and 9-dim modules)."""
    b1 = weight_operator(g, *ki)
    b2 = weight_operator(g, *lj)
    return extract_scalar(b1 * g.S2 * b2 * g.S2 * b1, b1)


def delta4_weight_charpoly(g: GeneratorSet) -> list:
    """Characteristic polynomial of Delta4 P1(l1) P3(l1) with normalized projections.

    Defined for the generic module with exponent shape (4, 2, 2); the module's
    distinguished eigenvalue is the one with exponent 4.
    """
    if sorted(g.label.exps, reverse=True) != [4, 2, 2] or g.context is not None:
        raise ValueError("defined for the generic 8-dimensional modules")
    r = g.label.exps.index(4) + 1
    lam = [RatFunc.var(k) for k in range(3)]
    others = [s for s in (1, 2, 3) if s != r]
    denom = RatFunc.one(3)
    for s in others:
        denom = denom * (lam[r - 1] - lam[s - 1])
    inv = denom.inv()
    proj1 = scaled_projection(g.S1, r).scale(inv)
    proj3 = scaled_projection(g.S3, r).scale(inv)
    b = g.delta_matrix() * proj1 * proj3
    return [c.reduce() for c in b.charpoly()]
