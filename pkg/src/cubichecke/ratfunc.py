"""The universal scalar field: rational functions in l1, l2, l3 over Q(zeta12).

Denominators are kept as multisets of small monic polynomial factors; the
variables are invertible, so monomial denominators live inside the numerator
as negative exponents.  Cancellation then amounts to exact-division tests
against individual factors, which keeps the nine-dimensional symbolic
assemblies tractable; a full multivariate GCD pass is reserved for the
explicit ``reduce`` normalization.

Equality is always semantic (difference has zero numerator), independent of
the representative, and ``reduce`` is idempotent.
"""

from __future__ import annotations

from .cyclotomic import Cyclotomic, ONE
from .laurent import LaurentPoly, exact_div, poly_gcd

# try factor cancellation once a numerator grows past this many terms
_AUTO_CANCEL_SIZE = 120


def _norm_factor(p: LaurentPoly):
    """Split p into (laurent monomial with unit, monic ordinary core).

    Returns (mono_exps, unit_coeff, core) with p = unit * l^mono * core and
    core monic with zero minimum exponents, or core None when p is a monomial.
    """
    shifted, mins = p.shift_nonnegative()
    _, lc = shifted.leading()
    if shifted.is_monomial():
        return mins, lc, None
    if lc.is_one():
        return mins, lc, shifted
    return mins, lc, shifted.scale(lc.inverse())


class RatFunc:
    __slots__ = ("num", "fac", "_den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None, fac: dict | None = None):
        """``den`` may be any nonzero polynomial; it is normalized into factors."""
        self.num = num
        self._den = None
        if fac is not None:
            self.fac = {} if num.is_zero() else fac
            return
        if den is None or den.is_one():
            self.fac = {}
            return
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        mins, unit, core = _norm_factor(den)
        if not unit.is_one():
            num = num.scale(unit.inverse())
        if any(mins):
            num = num.mul_monomial(tuple(-m for m in mins))
        self.num = num
        self.fac = {core: 1} if (core is not None and not num.is_zero()) else {}

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int = 3) -> "RatFunc":
        return cls(LaurentPoly.zero(nvars))

    @classmethod
    def one(cls, nvars: int = 3) -> "RatFunc":
        return cls(LaurentPoly.one(nvars))

    @classmethod
    def const(cls, c: Cyclotomic, nvars: int = 3) -> "RatFunc":
        return cls(LaurentPoly.const(c, nvars))

    @classmethod
    def var(cls, index: int, nvars: int = 3) -> "RatFunc":
        return cls(LaurentPoly.var(index, nvars))

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RatFunc":
        return cls(p)

    @classmethod
    def monomial(cls, exps, coeff: Cyclotomic = ONE, nvars: int = 3) -> "RatFunc":
        return cls(LaurentPoly.monomial(exps, coeff, nvars))

    @property
    def den(self) -> LaurentPoly:
        """The denominator as one polynomial (product of the stored factors)."""
        if self._den is None:
            out = LaurentPoly.one(self.num.nvars)
            for f, e in self.fac.items():
                for _ in range(e):
                    out = out * f
            self._den = out
        return self._den

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return not self.fac and self.num.is_one() or (self - RatFunc.one(self.num.nvars)).is_zero()

    def is_poly(self) -> bool:
        return not self.fac

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other: "RatFunc") -> "RatFunc":
        return self._addsub(other, False)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self._addsub(other, True)

    def _addsub(self, other: "RatFunc", negate: bool) -> "RatFunc":
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return -other if negate else other
        n1, n2 = self.num, other.num
        if self.fac == other.fac:
            n = n1 - n2 if negate else n1 + n2
            return RatFunc(n, fac=dict(self.fac))._auto()
        merged: dict = dict(self.fac)
        for f, e in other.fac.items():
            cur = merged.get(f, 0)
            if e > cur:
                merged[f] = e
        for f, e in merged.items():
            d1 = e - self.fac.get(f, 0)
            d2 = e - other.fac.get(f, 0)
            for _ in range(d1):
                n1 = n1 * f
            for _ in range(d2):
                n2 = n2 * f
        n = n1 - n2 if negate else n1 + n2
        return RatFunc(n, fac=merged)._auto()

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, fac=dict(self.fac))

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        if self.num.is_zero() or other.num.is_zero():
            return RatFunc.zero(self.num.nvars)
        fac = dict(self.fac)
        for f, e in other.fac.items():
            fac[f] = fac.get(f, 0) + e
        return RatFunc(self.num * other.num, fac=fac)._auto()

    def inv(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        num = LaurentPoly.one(self.num.nvars)
        for f, e in self.fac.items():
            for _ in range(e):
                num = num * f
        mins, unit, core = _norm_factor(self.num)
        num = num.mul_monomial(tuple(-m for m in mins), unit.inverse())
        return RatFunc(num, fac={} if core is None else {core: 1})

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        return self * other.inv()

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return self.inv() ** (-n)
        out = RatFunc.one(self.num.nvars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c: Cyclotomic) -> "RatFunc":
        if c.is_zero():
            return RatFunc.zero(self.num.nvars)
        return RatFunc(self.num.scale(c), fac=dict(self.fac))

    # -- cancellation and normalization ----------------------------------------------

    def _auto(self) -> "RatFunc":
        if self.fac and len(self.num.terms) > _AUTO_CANCEL_SIZE:
            return self.cancel()
        return self

    def cancel(self) -> "RatFunc":
        """Cancel denominator factors that divide the numerator exactly.

        Opportunistic: division attempts carry a step budget, so a missed
        cancellation only leaves a larger (still correct) representative.
        """
        if not self.fac or self.num.is_zero():
            return RatFunc(self.num) if self.fac else self
        num = self.num
        shifted, mins = num.shift_nonnegative()
        budget = 2 * len(shifted.terms) + 48
        fac = {}
        changed = False
        for f, e in self.fac.items():
            while e > 0:
                try:
                    shifted = exact_div(shifted, f, budget=budget)
                except ValueError:
                    break
                e -= 1
                changed = True
            if e:
                fac[f] = e
        if not changed:
            return self
        return RatFunc(shifted.mul_monomial(mins), fac=fac)

    def reduce(self) -> "RatFunc":
        """Fully reduced, canonically normalized representative.

        Common polynomial factors of numerator and denominator are removed and
        the denominator's leading coefficient in the canonical term order is 1.
        Idempotent.
        """
        r = self.cancel()
        if not r.fac:
            return r
        num, den = r.num, r.den
        nshift, nmin = num.shift_nonnegative()
        g = poly_gcd(nshift, den)
        if not g.is_one():
            nshift = exact_div(nshift, g)
            den = exact_div(den, g)
        _, lc = den.leading()
        if not lc.is_one():
            inv = lc.inverse()
            nshift = nshift.scale(inv)
            den = den.scale(inv)
        num = nshift.mul_monomial(nmin)
        dmin, dunit, dcore = _norm_factor(den)
        if not dunit.is_one():
            num = num.scale(dunit.inverse())
        if any(dmin):
            num = num.mul_monomial(tuple(-m for m in dmin))
        return RatFunc(num, fac={} if dcore is None else {dcore: 1})

    # -- semantic equality ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.num.is_zero():
            return other.num.is_zero()
        if other.num.is_zero():
            return False
        if self.fac == other.fac:
            return self.num == other.num
        return self._addsub(other, True).num.is_zero()

    def __hash__(self):
        r = self.reduce()
        return hash((frozenset(r.num.terms.items()), frozenset(r.den.terms.items())))

    # -- maps --------------------------------------------------------------------------

    def eval_point(self, values) -> Cyclotomic:
        d = ONE
        for f, e in self.fac.items():
            v = f.eval_point(values)
            if v.is_zero():
                r = self.reduce()
                dv = r.den.eval_point(values)
                if dv.is_zero():
                    raise ZeroDivisionError("pole at evaluation point")
                return r.num.eval_point(values) / dv
            d = d * (v ** e)
        return self.num.eval_point(values) / d

    def __str__(self):
        if not self.fac:
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)

    __repr__ = __str__


def ratfunc_eq(a: RatFunc, b: RatFunc) -> bool:
    """Semantic equality by cross multiplication."""
    return a == b


def rat_sum(items) -> RatFunc:
    """Sum of rational functions over one common denominator.

    Materializes the factor-wise least common denominator once, which is much
    cheaper than folding pairwise additions inside matrix products.
    """
    items = [r for r in items if not r.num.is_zero()]
    if not items:
        return RatFunc.zero(3)
    if len(items) == 1:
        return items[0]
    lcd: dict = {}
    for r in items:
        for f, e in r.fac.items():
            if e > lcd.get(f, 0):
                lcd[f] = e
    total = None
    for r in items:
        num = r.num
        for f, e in lcd.items():
            need = e - r.fac.get(f, 0)
            for _ in range(need):
                num = num * f
        total = num if total is None else total + num
    return RatFunc(total, fac=lcd)._auto()
