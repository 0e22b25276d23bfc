"""Classification engine: semisimplicity, blocks, composition series, census.

The single-ideal machinery assembles a module over the ideal's parametrized
locus and reads its composition series off the lattice of invariant coordinate
subspaces; factors are identified against the catalog by dimension, central
scalar, and weight data.  The two-ideal census composes parametrizations
branch by branch and decomposes iteratively, mirroring the uniqueness key of
the catalogued simple modules; branches whose residue field needs a square
root outside Q(zeta12) are handled by an exact quadratic-extension evaluator
(vanishing tests only, never assembly).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .builder import assemble, assemble_k3
from .catalog import (
    ModuleLabel,
    PrimeIdealSpec,
    catalog_regular,
    delta_scalar,
    exceptional_catalog,
    exceptional_spec,
    ideal_catalog,
    is_exceptional,
    label3,
    module_dim,
    module_k3_content,
    module_weights,
    spec_for,
    vanishing_for_k3,
    vanishing_for_module,
)
from .cyclotomic import Cyclotomic, ONE
from .errors import (
    AmbiguousOrientation,
    CubicHeckeError,
    GaugeInconsistent,
    HypothesisViolated,
    IncompatibleIdeals,
    PathBasisUnavailable,
    PoleOnLocus,
    UnidentifiedFactor,
)
from .jm import ab2_diag, block_spec, vanishing_order
from .laurent import LaurentPoly, divides, exact_div
from .matrix import Matrix
from .ratfunc import RatFunc
from .specialize import QuadExt, QuadLocus, Specialization, Substitution


# -- semisimplicity (Theorem A) --------------------------------------------------------


@dataclass
class SemisimplicityReport:
    input_desc: str
    vanishing: tuple          # PrimeIdealSpec entries whose generator vanishes
    semisimple: bool


def classify_point(point) -> SemisimplicityReport:
    """Exact Theorem-A test at a point with pairwise distinct eigenvalues."""
    for a in range(3):
        for b in range(a + 1, 3):
            if point[a] == point[b]:
                raise ValueError("repeated eigenvalues l%d = l%d" % (a + 1, b + 1))
    vanishing = tuple(
        spec
        for spec in ideal_catalog()
        if spec.family != "diff" and spec.generator.eval_point(point).is_zero()
    )
    desc = "point(%s)" % ", ".join(str(c) for c in point)
    return SemisimplicityReport(desc, vanishing, not vanishing)


def classify_ideals(ideals) -> SemisimplicityReport:
    """Theorem-A vanishing list on the (composed) locus of the given ideals."""
    if any(p.family == "diff" for p in ideals):
        raise ValueError("the eigenvalues are assumed pairwise distinct")
    if len(ideals) == 1:
        locus = ideals[0].param
    else:
        locus = compose_pair(*ideals)[0].locus
    vanishing = tuple(
        spec
        for spec in ideal_catalog()
        if spec.family != "diff" and locus_vanishes(locus, spec.generator)
    )
    desc = "ideal(%s)" % ", ".join(p.name for p in ideals)
    return SemisimplicityReport(desc, vanishing, not vanishing)


# -- blocks (Theorem B) -------------------------------------------------------------------


@dataclass
class BlockDecomposition:
    ideal: PrimeIdealSpec
    classes: tuple               # nontrivial linked classes, each ordered
    singletons: tuple
    congruence_classes: tuple    # the raw central-character classes


def _delta_sort_key(label: ModuleLabel):
    d = delta_scalar(label)
    ((exps, _c),) = d.num.terms.items()
    return tuple(-e for e in exps), label.name


def blocks(p: PrimeIdealSpec) -> BlockDecomposition:
    """Blocks of the four-strand algebra over the quotient field of p.

    Labels are first grouped by congruent central scalar (gamma ~ gamma' iff
    the specialized scalars agree); a congruence group is then refined by
    linkage, keeping together exactly the members that share a composition
    factor.  A congruence group can strictly contain its linked classes: two
    non-isomorphic modules that stay simple may accidentally share a central
    character, and then they are separate blocks.

    Classes are ordered by descending lexicographic order on the exponent
    vector of the central-scalar monomial (the 'alphabetical order' of those
    monomials, fixed up to overall reversal by transpose freedom).
    """
    if p.family == "diff":
        raise ValueError("blocks are not defined over li - lj")
    groups: list[list] = []
    for spec in catalog_regular(4):
        image = p.param.apply_ratfunc(spec.delta_sq)
        for g in groups:
            if g[0][1] == image:
                g.append((spec.label, image))
                break
        else:
            groups.append([(spec.label, image)])
    congruence = []
    classes = []
    singletons = []
    for g in groups:
        labels = sorted((lbl for lbl, _ in g), key=_delta_sort_key)
        congruence.append(tuple(labels))
        if len(labels) == 1:
            singletons.append(labels[0])
            continue
        for part in _linkage_refinement(labels, p):
            if len(part) == 1:
                singletons.append(part[0])
            else:
                classes.append(tuple(sorted(part, key=_delta_sort_key)))
    classes.sort(key=lambda c: tuple(l.name for l in c))
    congruence.sort(key=lambda c: tuple(l.name for l in c))
    return BlockDecomposition(
        p,
        tuple(classes),
        tuple(sorted(singletons, key=_delta_sort_key)),
        tuple(congruence),
    )


def _linkage_refinement(labels, p: PrimeIdealSpec):
    facs = {lbl: set(f.name for f in single_ideal_factors(lbl, p)) for lbl in labels}
    parent = {lbl: lbl for lbl in labels}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in labels:
        for b in labels:
            if a.name < b.name and facs[a] & facs[b]:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
    out: dict = {}
    for lbl in labels:
        out.setdefault(find(lbl), []).append(lbl)
    return list(out.values())


# -- composition series ------------------------------------------------------------------


@dataclass
class CompositionFactor:
    label: ModuleLabel
    dim: int
    indices: tuple | None      # path indices spanning the factor (assembly route)
    weights: dict | None


@dataclass
class CompositionSeries:
    parent: ModuleLabel
    ideal: PrimeIdealSpec | None
    orientation: str
    factors: tuple             # ordered submodule first
    route: str                 # "trivial" | "assembly" | "d-product"
    certificate: dict = field(default_factory=dict)

    @property
    def factor_labels(self) -> tuple:
        return tuple(f.label for f in self.factors)


def _digraph_sccs(mats: list[Matrix]) -> list[list[int]]:
    """Strongly connected components of the nonzero pattern, listed so that
    every prefix spans an invariant coordinate subspace (sinks first)."""
    n = mats[0].rows
    adj = [set() for _ in range(n)]
    for m in mats:
        for s in range(n):
            for t in range(n):
                if s != t and not m.entries[t][s].is_zero():
                    adj[s].add(t)  # v_s maps into v_t
    # Tarjan
    index = [None] * n
    low = [0] * n
    onstack = [False] * n
    stack: list[int] = []
    out: list[list[int]] = []
    counter = [0]

    def strongconnect(v):
        work = [(v, iter(sorted(adj[v])))]
        index[v] = low[v] = counter[0]
        counter[0] += 1
        stack.append(v)
        onstack[v] = True
        while work:
            node, it = work[-1]
            advanced = False
            for w in it:
                if index[w] is None:
                    index[w] = low[w] = counter[0]
                    counter[0] += 1
                    stack.append(w)
                    onstack[w] = True
                    work.append((w, iter(sorted(adj[w]))))
                    advanced = True
                    break
                elif onstack[w]:
                    low[node] = min(low[node], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                low[work[-1][0]] = min(low[work[-1][0]], low[node])
            if low[node] == index[node]:
                comp = []
                while True:
                    w = stack.pop()
                    onstack[w] = False
                    comp.append(w)
                    if w == node:
                        break
                out.append(sorted(comp))

    for v in range(n):
        if index[v] is None:
            strongconnect(v)
    # Tarjan emits components in reverse topological order of the condensation
    # (successors first), which is exactly "sinks first": each prefix is closed.
    return out


def _factor_weights(mats: dict, idx: list[int], lams) -> dict:
    s1 = mats[1].submatrix(idx)
    s3 = mats[3].submatrix(idx) if 3 in mats else mats[1].submatrix(idx)
    out = {}
    for i in (1, 2, 3):
        p1 = Matrix.identity(len(idx))
        for s in (1, 2, 3):
            if s != i:
                p1 = p1 * s1.add_scalar(-lams[s - 1])
        if p1.is_zero():
            continue
        for j in (1, 2, 3):
            p3 = Matrix.identity(len(idx))
            for s in (1, 2, 3):
                if s != j:
                    p3 = p3 * s3.add_scalar(-lams[s - 1])
            if p3.is_zero():
                continue
            r = (p1 * p3).rank()
            if r:
                out[(i, j)] = r
    return out


def _identify_factor(parent: ModuleLabel, p: PrimeIdealSpec, dim: int, weights: dict) -> ModuleLabel:
    target_delta = p.param.apply_ratfunc(delta_scalar(parent))
    matches = []
    for label in _candidate_pool():
        if module_dim(label) != dim:
            continue
        if module_weights(label) != weights:
            continue
        if is_exceptional(label):
            if not p.param.vanishes(exceptional_spec(label).defining):
                continue
        if p.param.apply_ratfunc(delta_scalar(label)) == target_delta:
            matches.append(label)
    if len(matches) == 1:
        return matches[0]
    if not matches:
        raise UnidentifiedFactor(
            "no catalogued simple matches dim=%d weights=%s inside %s mod %s"
            % (dim, sorted(weights.items()), parent, p.name)
        )
    raise UnidentifiedFactor(
        "ambiguous factor identification inside %s mod %s: %s"
        % (parent, p.name, matches)
    )


@lru_cache(maxsize=None)
def _candidate_pool() -> tuple:
    pool = [spec.label for spec in catalog_regular(4)]
    pool.extend(spec.label for spec in exceptional_catalog())
    return tuple(pool)


def composition_series(
    g4: ModuleLabel, p: PrimeIdealSpec, orientation: str = "as-given"
) -> CompositionSeries:
    """Composition series of a regular module over the quotient field of p.

    Primary route: assemble over the parametrized locus and read the maximal
    chain of invariant coordinate subspaces.  Fallback (when assembly is
    refused): equivalence classes of nonvanishing products of projection
    diagonals, oriented by first-order vanishing.
    """
    if orientation not in ("as-given", "transpose"):
        raise ValueError("orientation must be 'as-given' or 'transpose'")
    if p.family == "diff":
        raise ValueError("composition series are not defined over li - lj")
    if p not in vanishing_for_module(g4):
        spec = spec_for(g4)
        factor = CompositionFactor(g4, spec.dim, tuple(range(spec.dim)), spec.weight_multiset())
        return CompositionSeries(g4, p, orientation, (factor,), "trivial")
    try:
        return _series_by_assembly(g4, p, orientation)
    except (PathBasisUnavailable, HypothesisViolated, GaugeInconsistent, PoleOnLocus) as exc:
        return _series_by_dproducts(g4, p, orientation, refused=str(exc))


def _series_by_assembly(g4: ModuleLabel, p: PrimeIdealSpec, orientation: str) -> CompositionSeries:
    errors = []
    g = None
    for gauge in ("row", "column"):
        try:
            g = assemble(g4, p.param, gauge)
            break
        except PoleOnLocus as exc:
            errors.append(exc)
    if g is None:
        raise errors[-1]
    mats = dict(g.matrices)
    if orientation == "transpose":
        mats = {k: m.transpose() for k, m in mats.items()}
    gens = [mats[i] for i in sorted(mats)]
    sccs = _digraph_sccs(gens)
    lams = [p.param.apply_ratfunc(RatFunc.var(k)) for k in range(3)]
    factors = []
    prefix: list[int] = []
    for comp in sccs:
        for m in gens:
            for s in prefix + comp:
                for t in range(m.rows):
                    if t in prefix or t in comp:
                        continue
                    if not m.entries[t][s].is_zero():
                        raise CubicHeckeError("invariant-subspace certificate failed")
        prefix.extend(comp)
        weights = _factor_weights(mats, comp, lams)
        label = _identify_factor(g4, p, len(comp), weights)
        factors.append(CompositionFactor(label, len(comp), tuple(comp), weights))
    return CompositionSeries(
        g4, p, orientation, tuple(factors), "assembly",
        {"gauge": g.gauge, "chain": [f.indices for f in factors]},
    )


def _series_by_dproducts(g4: ModuleLabel, p: PrimeIdealSpec, orientation: str, refused: str) -> CompositionSeries:
    from .catalog import enumerate_paths

    paths = enumerate_paths(g4)
    n = len(paths)
    gen = p.generator

    def in_ideal(f: RatFunc) -> bool:
        num, _ = f.reduce().num.shift_nonnegative()
        return divides(gen, num)

    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    quotient_side: set[int] = set()
    groups = []
    g3_groups: dict = {}
    g2_groups: dict = {}
    for k, t in enumerate(paths):
        g3_groups.setdefault(t.g3, []).append(k)
        g2_groups.setdefault(t.g2, []).append(k)
    for idx in g3_groups.values():
        groups.append((block_spec(None, paths[idx[0]].g3, 2), idx))
    for idx in g2_groups.values():
        groups.append((block_spec(paths[idx[0]].g2, g4, 3), idx))
    for spec, idx in groups:
        for mu, mult in spec.a_spectrum:
            if mult != 1:
                continue
            try:
                diag = ab2_diag(spec, mu)
            except HypothesisViolated:
                continue
            if not _block_hypotheses_hold_mod(spec, mu, p):
                continue
            vanish = [k for k, dv in enumerate(diag.d) if in_ideal(dv)]
            for a in range(len(idx)):
                if a in vanish:
                    continue
                for b in range(a + 1, len(idx)):
                    if b not in vanish:
                        union(idx[a], idx[b])
            for k in vanish:
                order = vanishing_order(diag.d[k], p)
                if order >= 2:
                    raise AmbiguousOrientation(
                        "d-vanishing of order %d in block of %s" % (order, g4)
                    )
                # row gauge: the row of the projection through this path dies,
                # so the path spans a quotient line of its block
                quotient_side.add(idx[k])
    comps: dict = {}
    for k in range(n):
        comps.setdefault(find(k), []).append(k)
    classes = sorted(comps.values(), key=min)
    if len(classes) > 2:
        raise UnidentifiedFactor("more than two d-product classes in %s mod %s" % (g4, p.name))
    if len(classes) == 2 and quotient_side:
        q = classes[1] if quotient_side & set(classes[1]) else classes[0]
        s = classes[0] if q is classes[1] else classes[1]
        ordered = [s, q]
    else:
        ordered = classes
    if orientation == "transpose":
        ordered = list(reversed(ordered))
    factors = []
    for comp in ordered:
        label = _identify_factor_pathdata(g4, p, comp, paths)
        factors.append(CompositionFactor(label, len(comp), tuple(comp), None))
    return CompositionSeries(
        g4, p, orientation, tuple(factors), "d-product", {"assembly_refused": refused}
    )


def _block_hypotheses_hold_mod(spec, mu: RatFunc, p: PrimeIdealSpec) -> bool:
    """Theorem hypotheses of the block formula checked modulo the ideal."""
    from .jm import _pair_for

    l1, l2 = _pair_for(spec, mu)
    param = p.param

    def dies(f: RatFunc) -> bool:
        return param.vanishes(f.reduce().num)

    for r, xr in enumerate(spec.x):
        for s, xs in enumerate(spec.x):
            if r < s and dies(xr - xs):
                return False
            if spec.size > 2 and dies(spec.delta + l1 * l2 * xr * xs):
                return False
    if dies((l1 - mu) * (l2 - mu)):
        return False
    return True


def _identify_factor_pathdata(g4, p, comp, paths) -> ModuleLabel:
    """Identification by (dim, central scalar, sigma1 spectrum, K3 content mod p)."""
    dim = len(comp)
    target_delta = p.param.apply_ratfunc(delta_scalar(g4))
    sigma1: dict = {}
    for k in comp:
        i = paths[k].eigen_index
        sigma1[i] = sigma1.get(i, 0) + 1
    k3_multi = sorted(
        sum((list(k3_factors_mod(p.param, g3)) for g3 in _dedup_g3(comp, paths)), []),
        key=lambda l: l.name,
    )
    matches = []
    for label in _candidate_pool():
        if module_dim(label) != dim:
            continue
        w = module_weights(label)
        spect: dict = {}
        for (i, _j), m in w.items():
            spect[i] = spect.get(i, 0) + m
        if spect != sigma1:
            continue
        if is_exceptional(label) and not p.param.vanishes(exceptional_spec(label).defining):
            continue
        if p.param.apply_ratfunc(delta_scalar(label)) != target_delta:
            continue
        cand_k3 = sorted(
            sum((list(k3_factors_mod(p.param, g3)) for g3 in module_k3_content(label)), []),
            key=lambda l: l.name,
        )
        if cand_k3 != k3_multi:
            continue
        matches.append(label)
    if len(matches) != 1:
        raise UnidentifiedFactor(
            "path-data identification found %d matches in %s mod %s"
            % (len(matches), g4, p.name)
        )
    return matches[0]


def _dedup_g3(comp, paths):
    """Level-3 content of a factor from its path multiset: each constituent
    must be met by a full set of paths (its dimension's worth)."""
    from collections import Counter

    out = []
    cnt = Counter(paths[k].g3 for k in comp)
    for g3, c in sorted(cnt.items(), key=lambda kv: kv[0].name):
        d = sum(g3.exps)
        if c % d:
            raise UnidentifiedFactor("factor cuts through a level-3 constituent")
        out.extend([g3] * (c // d))
    return out


def k3_factors_mod(locus, g3: ModuleLabel) -> tuple:
    """Multiset of simple level-3 composition factors of a generic level-3
    module over the locus."""
    n = sum(g3.exps)
    if n == 1:
        return (g3,)
    if n == 2:
        i, j = [k + 1 for k, e in enumerate(g3.exps) if e]
        for spec in vanishing_for_k3(g3):
            if locus_vanishes(locus, spec.generator):
                ei = [0, 0, 0]
                ei[i - 1] = 1
                ej = [0, 0, 0]
                ej[j - 1] = 1
                return (label3(tuple(ei)), label3(tuple(ej)))
        return (g3,)
    for i in (1, 2, 3):
        j, k = [x for x in (1, 2, 3) if x != i]
        gen = _sq_plus_poly(i, j, k)
        if locus_vanishes(locus, gen):
            sub = [0, 0, 0]
            sub[j - 1] = sub[k - 1] = 1
            one = [0, 0, 0]
            one[i - 1] = 1
            return tuple(
                sorted(
                    k3_factors_mod(locus, label3(tuple(sub))) + (label3(tuple(one)),),
                    key=lambda l: l.name,
                )
            )
    return (g3,)


def _sq_plus_poly(i, j, k) -> LaurentPoly:
    e1 = [0, 0, 0]
    e1[i - 1] = 2
    e2 = [0, 0, 0]
    e2[j - 1] = 1
    e2[k - 1] = 1
    return LaurentPoly.monomial(tuple(e1)) + LaurentPoly.monomial(tuple(e2))


def locus_vanishes(locus, poly: LaurentPoly) -> bool:
    if isinstance(locus, Specialization):
        return locus.vanishes(poly)
    return locus.vanishes(poly)


# -- exact sequences ---------------------------------------------------------------------


@dataclass
class ExactSequence:
    ideal: PrimeIdealSpec
    labels: tuple                  # ordered module labels
    factor_chain: tuple            # factor labels K_0 .. K_r with V_i = K_{i-1} + K_i

    def __str__(self):
        return "0 -> " + " -> ".join(l.name for l in self.labels) + " -> 0"


def exact_sequence(p: PrimeIdealSpec, class_labels) -> ExactSequence:
    """The exact sequence carried by one block class, with factor matching.

    Every module's series is computed mod p; per-module transpose freedom is
    resolved so that the submodule of each term equals the quotient of its
    predecessor.  Raises on inconsistent factor matching.
    """
    if len(class_labels) == 1:
        lbl = class_labels[0]
        return ExactSequence(p, (lbl,), (lbl,))
    series = {lbl: composition_series(lbl, p).factor_labels for lbl in class_labels}
    for direction in (tuple(class_labels), tuple(reversed(class_labels))):
        chain = _match_chain(direction, series)
        if chain is not None:
            return ExactSequence(p, direction, chain)
    raise CubicHeckeError(
        "no consistent exact sequence for class %s mod %s"
        % ([l.name for l in class_labels], p.name)
    )


def _match_chain(order, series) -> tuple | None:
    chain: list[ModuleLabel] = []
    first = series[order[0]]
    if len(first) != 1:
        return None
    chain.append(first[0])
    for lbl in order[1:]:
        fac = series[lbl]
        if len(fac) == 1:
            if fac[0] != chain[-1]:
                return None
        elif len(fac) == 2:
            a, b = fac
            if a == chain[-1]:
                chain.append(b)
            elif b == chain[-1]:
                chain.append(a)
            else:
                return None
        else:
            return None
    if series[order[-1]] != (chain[-1],) and len(series[order[-1]]) != 1:
        return None
    alt = 0
    for k, lbl in enumerate(order):
        alt += (1 if k % 2 == 0 else -1) * module_dim(lbl)
    if alt != 0:
        return None
    return tuple(chain)


# -- census (Theorems B and C) --------------------------------------------------------------


@dataclass
class CensusEntry:
    label: ModuleLabel
    dim: int
    weights: dict
    delta_sq: RatFunc


@dataclass
class Census:
    context: str
    entries: tuple
    branch: str = ""

    @property
    def sum_dim_sq(self) -> int:
        return sum(e.dim * e.dim for e in self.entries)


def census_generic() -> Census:
    entries = tuple(
        CensusEntry(s.label, s.dim, s.weight_multiset(), s.delta_sq)
        for s in catalog_regular(4)
    )
    return Census("generic", entries)


def census_single(p: PrimeIdealSpec) -> Census:
    found: dict = {}
    for spec in catalog_regular(4):
        if p in vanishing_for_module(spec.label):
            for lbl in composition_series(spec.label, p).factor_labels:
                found.setdefault(lbl.name, lbl)
        else:
            found.setdefault(spec.label.name, spec.label)
    entries = tuple(
        CensusEntry(lbl, module_dim(lbl), module_weights(lbl), delta_scalar(lbl))
        for lbl in sorted(found.values(), key=lambda l: (-module_dim(l), l.name))
    )
    return Census("ideal(%s)" % p.name, entries)


# -- two-ideal loci ----------------------------------------------------------------------------


@dataclass
class Branch:
    kind: str                      # "monomial" | "quadratic"
    locus: object                  # Specialization | QuadLocus
    selector: LaurentPoly          # extra polynomial condition picking this branch
    description: str


def compose_pair(p1: PrimeIdealSpec, p2: PrimeIdealSpec) -> list[Branch]:
    """All branches of the combined locus of two Theorem-A ideals.

    A branch forcing two eigenvalues to coincide is rejected; when all
    branches are rejected, the pair is incompatible and the error carries the
    eigenvalue-difference witnesses.
    """
    if p1.family == "diff" or p2.family == "diff":
        raise ValueError("li - lj ideals are excluded")
    if p1.name == p2.name:
        raise ValueError("the two ideals must be distinct")
    base = p1.param
    residual = base.apply_poly(p2.generator)
    if residual.is_zero():
        raise ValueError("ideal %s contains %s on its locus" % (p1.name, p2.name))
    shifted, _ = residual.shift_nonnegative()
    branches = []
    witnesses = []
    free = [v for v in base.free_vars()]
    for factor, kind in _factor_residual(shifted, free):
        if kind == "linear":
            sub = _linear_substitution(factor, free)
            try:
                spec = base.compose_sub(sub, (p2.generator,))
            except ValueError:
                continue
            witness = _distinct_witness_monomial(spec)
            if witness is not None:
                witnesses.append(witness)
                continue
            branches.append(
                Branch("monomial", spec, factor, "%s, %s" % (spec, factor))
            )
        else:
            locus = _quad_locus(base, factor, free)
            if locus is None:
                continue
            witness = _distinct_witness_quad(locus)
            if witness is not None:
                witnesses.append(witness)
                continue
            branches.append(
                Branch("quadratic", locus, factor, "quadratic branch %s" % factor)
            )
    if not branches:
        raise IncompatibleIdeals(sorted(set(witnesses)))
    return branches


def _roots_of_unity():
    from .cyclotomic import ZETA

    out = []
    z = ONE
    for _ in range(12):
        out.append(z)
        z = z * ZETA
    return out


def _factor_residual(poly: LaurentPoly, free) -> list:
    """Factor a two-variable residual into linear and quadratic binomial parts.

    The residuals arising from composing catalog parametrizations are, after
    stripping monomial content, products of factors x^k - c y^k with c a root
    of unity; linear and quadratic pieces cover every case the catalog needs.
    """
    out = []
    work = poly
    if len(free) == 1:
        # residual in one variable: only a monomial could remain; a nonzero
        # non-monomial one-variable residual has no locus points off the axes
        if work.is_monomial():
            return []
        raise CubicHeckeError("unsupported one-variable residual %s" % poly)
    x, y = free  # variable indices, x < y
    units = _roots_of_unity()
    for degree in (1, 2):
        ex = [0, 0, 0]
        ex[x] = degree
        ey = [0, 0, 0]
        ey[y] = degree
        for u in units:
            factor = LaurentPoly.monomial(tuple(ex)) - LaurentPoly.monomial(tuple(ey), u)
            changed = True
            while changed:
                changed = False
                try:
                    work = exact_div(work, factor)
                except ValueError:
                    break
                out.append((factor, "linear" if degree == 1 else "quadratic"))
                changed = True
        if work.is_monomial():
            break
    if not work.is_monomial():
        raise CubicHeckeError("residual %s does not split into catalog branches" % poly)
    # deduplicate repeated factors; multiplicity does not change the locus
    seen = []
    uniq = []
    for f, kind in out:
        key = frozenset(f.terms.items())
        if key not in seen:
            seen.append(key)
            uniq.append((f, kind))
    return uniq


def _linear_substitution(factor: LaurentPoly, free) -> Substitution:
    """factor = l_x - u l_y (x < y): eliminate the higher variable l_y."""
    x, y = free
    items = dict(factor.terms)
    ex = tuple(1 if k == x else 0 for k in range(3))
    ey = tuple(1 if k == y else 0 for k in range(3))
    cx = items[ex]
    cy = items[ey]
    # l_y := -(cx/cy) l_x
    coeff = -(cx / cy)
    return Substitution(y, coeff, ex)


def _quad_locus(base: Specialization, factor: LaurentPoly, free):
    """Build the quadratic-extension locus for factor = l_x^2 - w l_y^2."""
    x, y = free
    items = dict(factor.terms)
    ex = tuple(2 if k == x else 0 for k in range(3))
    ey = tuple(2 if k == y else 0 for k in range(3))
    w = -(items[ey] / items[ex])  # l_x^2 = w l_y^2
    zero = Cyclotomic()
    coeffs = [None, None, None]
    exps = [0, 0, 0]
    # parameter t = l_y; l_x = u t with u^2 = w
    coeffs[y] = QuadExt(ONE, zero, w)
    exps[y] = 1
    coeffs[x] = QuadExt(zero, ONE, w)
    exps[x] = 1
    # eliminated variables from the base specialization, innermost last
    for sub in reversed(base.subs):
        acc = QuadExt(sub.coeff, zero, w)
        deg = 0
        for k, e in enumerate(sub.exps):
            if e:
                acc = acc * (coeffs[k] ** e)
                deg += e * exps[k]
        coeffs[sub.var] = acc
        exps[sub.var] = deg
    return QuadLocus(w, tuple(coeffs), tuple(exps))


def _distinct_witness_monomial(spec: Specialization):
    for a in range(3):
        for b in range(a + 1, 3):
            diff = LaurentPoly.var(a) - LaurentPoly.var(b)
            if spec.vanishes(diff):
                return "l%d-l%d" % (a + 1, b + 1)
    return None


def _distinct_witness_quad(locus: QuadLocus):
    if locus.coordinates_distinct():
        return None
    for a in range(3):
        for b in range(a + 1, 3):
            if locus.vanishes(LaurentPoly.var(a) - LaurentPoly.var(b)):
                return "l%d-l%d" % (a + 1, b + 1)
    return None


# -- iterated decomposition over a combined locus ------------------------------------------------


def _delta_congruent(locus, r1: RatFunc, r2: RatFunc) -> bool:
    diff = r1.num * r2.den - r2.num * r1.den
    return locus_vanishes(locus, diff)


def _valid_on(locus, label: ModuleLabel) -> bool:
    if not is_exceptional(label):
        return True
    return locus_vanishes(locus, exceptional_spec(label).defining)


def _regular_dead(locus, label: ModuleLabel):
    return [
        q for q in vanishing_for_module(label) if locus_vanishes(locus, q.generator)
    ]


def _simple_on(locus, label: ModuleLabel) -> bool:
    if not is_exceptional(label):
        return not _regular_dead(locus, label)
    if not _valid_on(locus, label):
        return False
    return _finest_cover(locus, label) is None


def _k3_content_mod(locus, label: ModuleLabel):
    return tuple(
        sorted(
            sum((list(k3_factors_mod(locus, g3)) for g3 in module_k3_content(label)), []),
            key=lambda l: l.name,
        )
    )


def _finest_cover(locus, label: ModuleLabel):
    """The unique partition of the label's weights into smaller valid simple
    candidates with matching central scalar and K3 content, or None."""
    weights = module_weights(label)
    delta = delta_scalar(label)
    candidates = []
    for cand in _candidate_pool():
        if module_dim(cand) >= module_dim(label):
            continue
        if not _valid_on(locus, cand):
            continue
        cw = module_weights(cand)
        if any(cw.get(k, 0) > weights.get(k, 0) for k in cw):
            continue
        if not _delta_congruent(locus, delta_scalar(cand), delta):
            continue
        if not _simple_on(locus, cand):
            continue
        candidates.append(cand)
    solutions: list = []
    target_k3 = _k3_content_mod(locus, label)

    def rec(remaining: dict, chosen: list):
        if len(solutions) > 1:
            return
        if not any(remaining.values()):
            k3 = sorted(
                sum((list(_k3_content_mod(locus, c)) for c in chosen), []),
                key=lambda l: l.name,
            )
            if k3 == list(target_k3):
                sol = sorted(chosen, key=lambda l: l.name)
                if sol not in solutions:
                    solutions.append(sol)
            return
        pivot = min(k for k, v in remaining.items() if v)
        for k, cand in enumerate(candidates):
            cw = module_weights(cand)
            if cw.get(pivot, 0) == 0:
                continue
            if any(cw.get(w, 0) > remaining.get(w, 0) for w in cw):
                continue
            nxt = dict(remaining)
            for w, m in cw.items():
                nxt[w] -= m
            chosen.append(cand)
            rec(nxt, chosen)
            chosen.pop()

    rec(dict(weights), [])
    if not solutions:
        return None
    if len(solutions) > 1:
        raise UnidentifiedFactor(
            "ambiguous decomposition of %s on the combined locus" % label
        )
    return tuple(solutions[0])


_SINGLE_SERIES_CACHE: dict = {}


def single_ideal_factors(label: ModuleLabel, p: PrimeIdealSpec) -> tuple:
    key = (label, p.name)
    if key not in _SINGLE_SERIES_CACHE:
        _SINGLE_SERIES_CACHE[key] = composition_series(label, p).factor_labels
    return _SINGLE_SERIES_CACHE[key]


def split_on_locus(locus, label: ModuleLabel) -> tuple:
    """Multiset of simple factor labels of a catalogued module on the locus."""
    if not is_exceptional(label):
        dead = _regular_dead(locus, label)
        if not dead:
            return (label,)
        if isinstance(locus, Specialization) and len(locus.subs) == 1:
            first = dead[0]
        else:
            first = dead[0]
        out: list = []
        for f in single_ideal_factors(label, first):
            out.extend(split_on_locus(locus, f))
        return tuple(sorted(out, key=lambda l: l.name))
    if not _valid_on(locus, label):
        raise UnidentifiedFactor("label %s is not defined on the locus" % label)
    cover = _finest_cover(locus, label)
    if cover is None:
        return (label,)
    out = []
    for c in cover:
        out.append(c)
    return tuple(sorted(out, key=lambda l: l.name))


def census_pair(p1: PrimeIdealSpec, p2: PrimeIdealSpec) -> list[Census]:
    """Census over every branch of a compatible ideal pair (Table-4 engine)."""
    out = []
    for branch in compose_pair(p1, p2):
        found: dict = {}
        for spec in catalog_regular(4):
            for lbl in split_on_locus(branch.locus, spec.label):
                found.setdefault(lbl.name, lbl)
        entries = tuple(
            CensusEntry(lbl, module_dim(lbl), module_weights(lbl), delta_scalar(lbl))
            for lbl in sorted(found.values(), key=lambda l: (-module_dim(l), l.name))
        )
        out.append(
            Census(
                "ideals(%s, %s)" % (p1.name, p2.name), entries, branch.description
            )
        )
    return out


# -- the level-3 algebra ------------------------------------------------------------------------


@dataclass
class K3Report:
    context: str
    entries: tuple                # census of simple level-3 labels
    sequences: tuple              # ExactSequence-like tuples of level-3 labels

    @property
    def sum_dim_sq(self) -> int:
        return sum(sum(l.exps) ** 2 for l in self.entries)


class PointLocus:
    """Adapter exposing a point as a vanishing-test locus."""

    def __init__(self, point):
        self.point = point

    def vanishes(self, poly: LaurentPoly) -> bool:
        return poly.eval_point(self.point).is_zero()


def k3_structure(p: PrimeIdealSpec | None = None, point=None) -> K3Report:
    """Blocks, sequences and census of the three-strand algebra."""
    if point is not None:
        for a in range(3):
            for b in range(a + 1, 3):
                if point[a] == point[b]:
                    raise ValueError("repeated eigenvalues")
        locus = PointLocus(point)
        found: dict = {}
        for s in catalog_regular(3):
            for lbl in k3_factors_mod(locus, s.label):
                found.setdefault(lbl.name, lbl)
        entries = tuple(sorted(found.values(), key=lambda l: (-sum(l.exps), l.name)))
        return K3Report("point", entries, ())
    if p is None:
        return K3Report("generic", tuple(s.label for s in catalog_regular(3)), ())
    if p.family == "diff":
        raise ValueError("distinct eigenvalues are assumed")
    found: dict = {}
    sequences = []
    for s in catalog_regular(3):
        if p in vanishing_for_k3(s.label):
            series = _k3_series(s.label, p)
            for lbl in series:
                found.setdefault(lbl.name, lbl)
            sequences.append((s.label, series))
        else:
            found.setdefault(s.label.name, s.label)
    entries = tuple(
        sorted(found.values(), key=lambda l: (-sum(l.exps), l.name))
    )
    return K3Report("ideal(%s)" % p.name, entries, tuple(sequences))


def _k3_series(g3: ModuleLabel, p: PrimeIdealSpec) -> tuple:
    g = assemble_k3(g3, p.param)
    gens = [g.matrices[i] for i in sorted(g.matrices)]
    sccs = _digraph_sccs(gens)
    lams = [p.param.apply_ratfunc(RatFunc.var(k)) for k in range(3)]
    labels = []
    for comp in sccs:
        spectrum: dict = {}
        for k in comp:
            i = g.basis[k].eigen_index
            spectrum[i] = spectrum.get(i, 0) + 1
        target = p.param.apply_ratfunc(delta_scalar(g3))
        matches = [
            s.label
            for s in catalog_regular(3)
            if s.dim == len(comp)
            and {i: m for (i, _j, m) in s.weights} == spectrum
            and p.param.apply_ratfunc(delta_scalar(s.label)) == target
        ]
        if len(matches) != 1:
            raise UnidentifiedFactor("level-3 factor not identified in %s" % g3)
        labels.append(matches[0])
    return tuple(labels)
