"""Specializations: passage to the vanishing locus of a prime ideal.

A :class:`Specialization` is an ordered, triangular list of substitutions
``l_k := c * l_i^a * l_j^b``; applying it in order is a ring homomorphism
whose kernel contains the originating ideal generators.  It realizes the
quotient field of the coordinate ring modulo the ideal as a rational function
field in the surviving variables.

:class:`QuadLocus` covers the handful of double loci whose residue field
needs a square root that Q(zeta12) does not contain; it only supports exact
evaluation (vanishing tests), never matrix assembly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import Cyclotomic, ONE
from .errors import PoleOnLocus
from .laurent import LaurentPoly
from .ratfunc import RatFunc


@dataclass(frozen=True)
class Substitution:
    var: int                 # variable being eliminated
    coeff: Cyclotomic        # nonzero
    exps: tuple              # monomial in the other variables (exps[var] == 0)

    def __str__(self):
        names = ("l1", "l2", "l3")
        mono = "*".join(
            "%s^%d" % (names[k], e) if e != 1 else names[k]
            for k, e in enumerate(self.exps)
            if e
        )
        c = str(self.coeff)
        if not mono:
            return "%s := %s" % (names[self.var], c)
        if self.coeff.is_one():
            return "%s := %s" % (names[self.var], mono)
        return "%s := (%s)*%s" % (names[self.var], c, mono)


class Specialization:
    """Ordered triangular substitutions plus the ideal generators they kill."""

    def __init__(self, subs: tuple[Substitution, ...], generators: tuple[LaurentPoly, ...]):
        self.subs = tuple(subs)
        self.generators = tuple(generators)
        self._check()

    def _check(self):
        eliminated: list[int] = []
        for s in self.subs:
            if s.coeff.is_zero():
                raise ValueError("zero coefficient in substitution")
            if s.exps[s.var] != 0:
                raise ValueError("substitution uses its own variable")
            eliminated.append(s.var)
        for pos, s in enumerate(self.subs):
            for later in self.subs[pos + 1 :]:
                if later.exps[s.var] != 0:
                    raise ValueError("substitutions are not triangular")
        if len(set(eliminated)) != len(eliminated):
            raise ValueError("variable eliminated twice")
        self.eliminated = tuple(eliminated)
        for g in self.generators:
            if not self.apply_poly(g).is_zero():
                raise ValueError("specialization does not kill generator %s" % g)

    def apply_poly(self, p: LaurentPoly) -> LaurentPoly:
        for s in self.subs:
            p = p.substitute(s.var, s.coeff, s.exps)
        return p

    def apply_ratfunc(self, f: RatFunc) -> RatFunc:
        fac: dict[LaurentPoly, int] = {}
        dead = False
        for fact, e in f.fac.items():
            img = self.apply_poly(fact)
            if img.is_zero():
                dead = True
                break
            fac[img] = fac.get(img, 0) + e
        if not dead:
            out = RatFunc(self.apply_poly(f.num))
            for img, e in fac.items():
                out = out * RatFunc(LaurentPoly.one(3), img) ** e
            return out
        # a denominator factor contains the locus: cancel via full reduction
        r = f.reduce()
        den = self.apply_poly(r.den)
        if den.is_zero():
            raise PoleOnLocus(f)
        return RatFunc(self.apply_poly(r.num), den)

    def apply_matrix(self, m):
        from .matrix import Matrix

        out = []
        for row in m.entries:
            new_row = []
            for a in row:
                try:
                    new_row.append(self.apply_ratfunc(a))
                except PoleOnLocus:
                    raise PoleOnLocus(a)
            out.append(new_row)
        return Matrix(out)

    def apply(self, x):
        from .matrix import Matrix

        if isinstance(x, LaurentPoly):
            return self.apply_poly(x)
        if isinstance(x, RatFunc):
            return self.apply_ratfunc(x)
        if isinstance(x, Matrix):
            return self.apply_matrix(x)
        raise TypeError("cannot specialize %r" % type(x))

    def vanishes(self, p: LaurentPoly) -> bool:
        return self.apply_poly(p).is_zero()

    def free_vars(self) -> tuple[int, ...]:
        return tuple(v for v in range(3) if v not in self.eliminated)

    def compose_sub(self, sub: Substitution, extra_gens: tuple[LaurentPoly, ...]) -> "Specialization":
        """Append one more substitution (applied after the existing ones)."""
        return Specialization(self.subs + (sub,), self.generators + extra_gens)

    def point(self, values: dict[int, Cyclotomic]) -> tuple[Cyclotomic, Cyclotomic, Cyclotomic]:
        """A point on the locus from nonzero values for the free variables."""
        vals: dict[int, Cyclotomic] = dict(values)
        for s in reversed(self.subs):
            acc = s.coeff
            for k, e in enumerate(s.exps):
                if e:
                    acc = acc * (vals[k] ** e)
            vals[s.var] = acc
        return (vals[0], vals[1], vals[2])

    def random_point(self, rng) -> tuple[Cyclotomic, Cyclotomic, Cyclotomic]:
        """A random rational point on the locus with pairwise distinct coordinates."""
        for _ in range(200):
            values = {
                v: Cyclotomic.from_rational(Fraction(rng.randint(2, 400), rng.randint(1, 7)))
                for v in self.free_vars()
            }
            pt = self.point(values)
            if not any(pt[a] == pt[b] for a in range(3) for b in range(a + 1, 3)):
                return pt
        raise RuntimeError("could not sample a point with distinct eigenvalues")

    def __str__(self):
        return "{" + "; ".join(str(s) for s in self.subs) + "}"

    __repr__ = __str__

    def __eq__(self, other):
        return (
            isinstance(other, Specialization)
            and self.subs == other.subs
            and self.generators == other.generators
        )

    def __hash__(self):
        return hash(self.subs)


GENERIC = None  # generic context marker used throughout


class QuadExt:
    """a + b*u with u^2 = w, coefficients in Q(zeta12); enough for vanishing tests."""

    __slots__ = ("a", "b", "w")

    def __init__(self, a: Cyclotomic, b: Cyclotomic, w: Cyclotomic):
        self.a = a
        self.b = b
        self.w = w

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def __add__(self, other: "QuadExt") -> "QuadExt":
        return QuadExt(self.a + other.a, self.b + other.b, self.w)

    def __mul__(self, other: "QuadExt") -> "QuadExt":
        return QuadExt(
            self.a * other.a + self.b * other.b * self.w,
            self.a * other.b + self.b * other.a,
            self.w,
        )

    def inverse(self) -> "QuadExt":
        # (a + bu)(a - bu) = a^2 - b^2 w, nonzero as u is irrational over the base
        norm = self.a * self.a - self.b * self.b * self.w
        inv = norm.inverse()
        return QuadExt(self.a * inv, -(self.b * inv), self.w)

    def __pow__(self, n: int) -> "QuadExt":
        if n < 0:
            return self.inverse() ** (-n)
        out = QuadExt(ONE, Cyclotomic(), self.w)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        return isinstance(other, QuadExt) and self.a == other.a and self.b == other.b and self.w == other.w

    def __str__(self):
        return "(%s)+(%s)*u" % (self.a, self.b)


class QuadLocus:
    """A one-parameter locus l_k = c_k * t^{e_k} with coefficients in Q(zeta12)[u]/(u^2-w).

    Supports exact vanishing tests of Laurent polynomials on the locus; used
    only by the double-locus census where the residue field leaves Q(zeta12).
    """

    def __init__(self, w: Cyclotomic, coeffs: tuple[QuadExt, QuadExt, QuadExt], exps: tuple[int, int, int]):
        self.w = w
        self.coeffs = coeffs
        self.exps = exps

    def eval_poly(self, p: LaurentPoly) -> dict[int, QuadExt]:
        """Image of p as a Laurent polynomial in t over the quadratic extension."""
        out: dict[int, QuadExt] = {}
        for e, c in p.terms.items():
            texp = sum(x * y for x, y in zip(e, self.exps))
            val = QuadExt(c, Cyclotomic(), self.w)
            for k, x in enumerate(e):
                if x:
                    val = val * (self.coeffs[k] ** x)
            cur = out.get(texp)
            s = val if cur is None else cur + val
            if s.is_zero():
                out.pop(texp, None)
            else:
                out[texp] = s
        return out

    def vanishes(self, p: LaurentPoly) -> bool:
        return not self.eval_poly(p)

    def coordinates_distinct(self) -> bool:
        l1 = LaurentPoly.var(0)
        l2 = LaurentPoly.var(1)
        l3 = LaurentPoly.var(2)
        return not (
            self.vanishes(l1 - l2) or self.vanishes(l1 - l3) or self.vanishes(l2 - l3)
        )
