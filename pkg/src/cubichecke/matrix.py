"""Dense exact matrices over the rational function field.

Everything here is exact; there is no floating point anywhere in the package.
The characteristic polynomial first splits the matrix into connected blocks of
its nonzero pattern (the braid generator matrices are block diagonal in a path
basis), expands small blocks directly and uses the division-controlled
Faddeev-LeVerrier recursion for anything larger.
"""

from __future__ import annotations

from itertools import permutations as _perms

from .cyclotomic import Cyclotomic, ONE
from .ratfunc import RatFunc, rat_sum


class Matrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: list[list[RatFunc]]):
        self.entries = entries
        self.rows = len(entries)
        self.cols = len(entries[0]) if entries else 0

    # -- constructors -----------------------------------------------------

    @classmethod
    def identity(cls, n: int, nvars: int = 3) -> "Matrix":
        one = RatFunc.one(nvars)
        zero = RatFunc.zero(nvars)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int, nvars: int = 3) -> "Matrix":
        z = RatFunc.zero(nvars)
        return cls([[z for _ in range(cols)] for _ in range(rows)])

    @classmethod
    def diagonal(cls, values: list[RatFunc]) -> "Matrix":
        n = len(values)
        nv = values[0].num.nvars
        z = RatFunc.zero(nv)
        return cls([[values[i] if i == j else z for j in range(n)] for i in range(n)])

    def copy(self) -> "Matrix":
        return Matrix([row[:] for row in self.entries])

    @property
    def nvars(self) -> int:
        return self.entries[0][0].num.nvars

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]

    # -- algebra -----------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in row] for row in self.entries])

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        bt = list(zip(*other.entries))
        out = []
        zero = RatFunc.zero(self.nvars)
        for row in self.entries:
            nz = [(k, a) for k, a in enumerate(row) if not a.is_zero()]
            new_row = []
            for col in bt:
                terms = []
                for k, a in nz:
                    b = col[k]
                    if not b.is_zero():
                        terms.append(a * b)
                new_row.append(rat_sum(terms) if terms else zero)
            out.append(new_row)
        return Matrix(out)

    def scale(self, s: RatFunc) -> "Matrix":
        return Matrix([[a * s for a in row] for row in self.entries])

    def transpose(self) -> "Matrix":
        return Matrix([list(r) for r in zip(*self.entries)])

    def add_scalar(self, s: RatFunc) -> "Matrix":
        """self + s*I."""
        out = self.copy()
        for i in range(self.rows):
            out.entries[i][i] = out.entries[i][i] + s
        return out

    def trace(self) -> RatFunc:
        t = RatFunc.zero(self.nvars)
        for i in range(self.rows):
            t = t + self.entries[i][i]
        return t

    def is_zero(self) -> bool:
        return all(a.is_zero() for row in self.entries for a in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.rows != other.rows or self.cols != other.cols:
            return False
        return all(
            a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb)
        )

    def __hash__(self):
        raise TypeError("matrices are unhashable")

    def first_nonzero(self):
        """(i, j) of the first nonzero entry in row-major order, or None."""
        for i, row in enumerate(self.entries):
            for j, a in enumerate(row):
                if not a.is_zero():
                    return (i, j)
        return None

    def map(self, fn) -> "Matrix":
        return Matrix([[fn(a) for a in row] for row in self.entries])

    def reduce(self) -> "Matrix":
        return self.map(lambda a: a.reduce())

    def submatrix(self, idx: list[int]) -> "Matrix":
        return Matrix([[self.entries[i][j] for j in idx] for i in idx])

    # -- rank ----------------------------------------------------------------

    def rank(self) -> int:
        work = [row[:] for row in self.entries]
        m, n = self.rows, self.cols
        rank = 0
        row = 0
        for col in range(n):
            pivot = None
            best = None
            for i in range(row, m):
                a = work[i][col]
                if not a.is_zero():
                    size = len(a.num.terms) + len(a.den.terms)
                    if best is None or size < best:
                        best = size
                        pivot = i
            if pivot is None:
                continue
            work[row], work[pivot] = work[pivot], work[row]
            inv = RatFunc(work[row][col].den, work[row][col].num)
            for i in range(row + 1, m):
                a = work[i][col]
                if a.is_zero():
                    continue
                factor = (a * inv).reduce()
                work[i] = [
                    (x - factor * y).reduce() if not y.is_zero() else x
                    for x, y in zip(work[i], work[row])
                ]
            row += 1
            rank += 1
            if row == m:
                break
        return rank

    # -- spectral helpers ------------------------------------------------------

    def eigenprojection(self, mu: RatFunc, spectrum: list[tuple[RatFunc, int]]) -> "Matrix":
        """Normalized spectral projection onto the mu-eigenspace.

        ``spectrum`` lists (eigenvalue, multiplicity) with pairwise distinct
        eigenvalues; the matrix must be diagonalizable with that spectrum.
        Raises ValueError when the residual (M - mu) P is nonzero.
        """
        n = self.rows
        proj = Matrix.identity(n, self.nvars)
        mult = None
        for nu, m in spectrum:
            if nu == mu:
                mult = m
                continue
            factor = self.add_scalar(-nu)
            denom = mu - nu
            if denom.is_zero():
                raise ValueError("spectrum contains mu twice")
            proj = (proj * factor).scale(RatFunc(denom.den, denom.num))
        if mult is None:
            raise ValueError("mu not in spectrum")
        if not ((self.add_scalar(-mu)) * proj).is_zero():
            raise ValueError("spectrum mismatch: (M - mu)P != 0")
        return proj

    def scaled_eigenprojection(self, index: int, eigenvalues: list[RatFunc]) -> "Matrix":
        """The product form prod_{s != index} (M - eigenvalue_s), no normalization."""
        n = self.rows
        out = Matrix.identity(n, self.nvars)
        for s, nu in enumerate(eigenvalues):
            if s == index:
                continue
            out = out * self.add_scalar(-nu)
        return out

    # -- characteristic polynomial ------------------------------------------------

    def charpoly(self) -> list[RatFunc]:
        """Coefficients [c0, c1, ..., cn] of det(x I - M), cn = 1, exact."""
        if self.rows != self.cols:
            raise ValueError("charpoly needs a square matrix")
        n = self.rows
        if n == 0:
            return [RatFunc.one(3)]
        blocks = self._components()
        nv = self.nvars
        out = [RatFunc.one(nv)]
        for idx in blocks:
            out = _poly_mul_coeffs(out, _block_charpoly(self.submatrix(idx)))
        return out

    def _components(self) -> list[list[int]]:
        """Connected components of the symmetrized nonzero pattern."""
        n = self.rows
        adj = [set() for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if i != j and not self.entries[i][j].is_zero():
                    adj[i].add(j)
                    adj[j].add(i)
        seen = [False] * n
        comps = []
        for s in range(n):
            if seen[s]:
                continue
            stack, comp = [s], []
            seen[s] = True
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def det(self) -> RatFunc:
        cp = self.charpoly()
        d = cp[0]
        return -d if self.rows % 2 else d


def _poly_mul_coeffs(a: list[RatFunc], b: list[RatFunc]) -> list[RatFunc]:
    nv = a[0].num.nvars
    out = [RatFunc.zero(nv) for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            if y.is_zero():
                continue
            out[i + j] = out[i + j] + x * y
    return out


def _block_charpoly(m: Matrix) -> list[RatFunc]:
    n = m.rows
    nv = m.nvars
    if n == 1:
        return [-m.entries[0][0], RatFunc.one(nv)]
    if n <= 4:
        # direct expansion of det(xI - M): elementary symmetric sums of
        # principal minors, each minor a signed permutation expansion
        coeffs = [RatFunc.zero(nv) for _ in range(n + 1)]
        coeffs[n] = RatFunc.one(nv)
        from itertools import combinations

        for k in range(1, n + 1):
            acc = RatFunc.zero(nv)
            for idx in combinations(range(n), k):
                acc = acc + _det_leibniz(m, idx)
            sign = -1 if k % 2 else 1
            coeffs[n - k] = acc if sign == 1 else -acc
        return coeffs
    return _faddeev_leverrier(m)


def _det_leibniz(m: Matrix, idx) -> RatFunc:
    nv = m.nvars
    acc = RatFunc.zero(nv)
    for perm in _perms(range(len(idx))):
        term = None
        for r, c in enumerate(perm):
            a = m.entries[idx[r]][idx[c]]
            if a.is_zero():
                term = None
                break
            term = a if term is None else term * a
        if term is None:
            continue
        if _perm_sign(perm) < 0:
            term = -term
        acc = acc + term
    return acc.reduce()


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for s in range(len(perm)):
        if seen[s]:
            continue
        length = 0
        j = s
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _faddeev_leverrier(m: Matrix) -> list[RatFunc]:
    n = m.rows
    nv = m.nvars
    coeffs = [RatFunc.zero(nv) for _ in range(n + 1)]
    coeffs[n] = RatFunc.one(nv)
    work = m.copy()
    for k in range(1, n + 1):
        t = work.trace().reduce()
        ck = t.scale(Cyclotomic.from_rational(-1) / Cyclotomic.from_rational(k)).reduce()
        coeffs[n - k] = ck
        if k < n:
            work = (m * work.add_scalar(ck)).map(
                lambda a: a.reduce() if len(a.num.terms) + len(a.den.terms) > 120 else a
            )
    return coeffs


def matrices_equal(a: Matrix, b: Matrix) -> bool:
    return a == b


def eval_matrix(m: Matrix, values) -> list[list[Cyclotomic]]:
    """Exact evaluation of every entry at a point in Q(zeta12)^3."""
    return [[a.eval_point(values) for a in row] for row in m.entries]


# -- numeric (Cyclotomic-valued) helpers for the random-point oracles -----------------


def num_mat_mul(a, b):
    n, m, p = len(a), len(b[0]), len(b)
    return [
        [sum_cyc(a[i][k] * b[k][j] for k in range(p)) for j in range(m)]
        for i in range(n)
    ]


def sum_cyc(items):
    total = Cyclotomic()
    for x in items:
        total = total + x
    return total


def num_mat_sub_scalar(a, s: Cyclotomic):
    out = [row[:] for row in a]
    for i in range(len(a)):
        out[i][i] = out[i][i] - s
    return out


def num_eigenprojection(a, mu: Cyclotomic, others: list[Cyclotomic]):
    """Normalized eigenprojection of an exactly-evaluated matrix."""
    n = len(a)
    proj = [[ONE if i == j else Cyclotomic() for j in range(n)] for i in range(n)]
    for nu in others:
        proj = num_mat_mul(proj, num_mat_sub_scalar(a, nu))
        inv = (mu - nu).inverse()
        proj = [[x * inv for x in row] for row in proj]
    return proj
