"""Exact arithmetic in the cyclotomic field Q(z) with z a primitive 12th root of unity.

Elements are stored as c0 + c1*z + c2*z^2 + c3*z^3 with rational ci, reduced
modulo the minimal polynomial z^4 = z^2 - 1.  The field contains

    theta = z^4 = z^2 - 1   (a primitive third root of unity), and
    i     = z^3             (a primitive fourth root of unity),

which is all the root-of-unity content the Hecke-algebra data ever needs.
"""

from __future__ import annotations

from fractions import Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Cyclotomic:
    """An element of Q(z), z^4 = z^2 - 1, as an immutable 4-tuple of rationals."""

    __slots__ = ("c",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        self.c = (Fraction(c0), Fraction(c1), Fraction(c2), Fraction(c3))

    @classmethod
    def _raw(cls, tup) -> "Cyclotomic":
        obj = object.__new__(cls)
        obj.c = tup
        return obj

    @classmethod
    def from_rational(cls, q) -> "Cyclotomic":
        return cls._raw((Fraction(q), _ZERO, _ZERO, _ZERO))

    # -- basic predicates ------------------------------------------------

    def is_zero(self) -> bool:
        c = self.c
        return not (c[0] or c[1] or c[2] or c[3])

    def is_one(self) -> bool:
        c = self.c
        return c[0] == 1 and not (c[1] or c[2] or c[3])

    def is_rational(self) -> bool:
        c = self.c
        return not (c[1] or c[2] or c[3])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational element: %r" % (self,))
        return self.c[0]

    # -- ring operations -------------------------------------------------

    def __add__(self, other: "Cyclotomic") -> "Cyclotomic":
        a, b = self.c, other.c
        if not (a[1] or a[2] or a[3] or b[1] or b[2] or b[3]):
            return Cyclotomic._raw((a[0] + b[0], _ZERO, _ZERO, _ZERO))
        return Cyclotomic._raw((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]))

    def __sub__(self, other: "Cyclotomic") -> "Cyclotomic":
        a, b = self.c, other.c
        if not (a[1] or a[2] or a[3] or b[1] or b[2] or b[3]):
            return Cyclotomic._raw((a[0] - b[0], _ZERO, _ZERO, _ZERO))
        return Cyclotomic._raw((a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]))

    def __neg__(self) -> "Cyclotomic":
        a = self.c
        return Cyclotomic._raw((-a[0], -a[1], -a[2], -a[3]))

    def __mul__(self, other: "Cyclotomic") -> "Cyclotomic":
        a, b = self.c, other.c
        # rational fast paths dominate in practice
        if not (b[1] or b[2] or b[3]):
            q = b[0]
            if q == 1:
                return self
            if not (a[1] or a[2] or a[3]):
                return Cyclotomic._raw((a[0] * q, _ZERO, _ZERO, _ZERO))
            return Cyclotomic._raw((a[0] * q, a[1] * q, a[2] * q, a[3] * q))
        if not (a[1] or a[2] or a[3]):
            q = a[0]
            if q == 1:
                return other
            return Cyclotomic._raw((b[0] * q, b[1] * q, b[2] * q, b[3] * q))
        t0 = a[0] * b[0]
        t1 = a[0] * b[1] + a[1] * b[0]
        t2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0]
        t3 = a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0]
        t4 = a[1] * b[3] + a[2] * b[2] + a[3] * b[1]
        t5 = a[2] * b[3] + a[3] * b[2]
        t6 = a[3] * b[3]
        # z^4 = z^2 - 1,  z^5 = z^3 - z,  z^6 = -1
        return Cyclotomic._raw((t0 - t4 - t6, t1 - t5, t2 + t4, t3 + t5))

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(zeta12)")
        c = self.c
        if not (c[1] or c[2] or c[3]):
            return Cyclotomic._raw((1 / c[0], _ZERO, _ZERO, _ZERO))
        # extended Euclid of self against the minimal polynomial x^4 - x^2 + 1
        a = [_ONE, _ZERO, -_ONE, _ZERO, _ONE]  # x^4 - x^2 + 1, low to high
        b = list(c)
        s_prev, s = [], [_ONE]  # Bezout coefficient of b only
        while True:
            while b and not b[-1]:
                b.pop()
            if len(b) == 1:
                inv = 1 / b[0]
                out = [x * inv for x in s]
                out += [_ZERO] * (4 - len(out))
                return Cyclotomic._raw(tuple(out[:4]))
            q, r = _poly_divmod(a, b)
            s_new = _poly_sub(s_prev, _poly_mul(q, s))
            a, b = b, r
            s_prev, s = s, s_new

    def __truediv__(self, other: "Cyclotomic") -> "Cyclotomic":
        return self * other.inverse()

    def __pow__(self, n: int) -> "Cyclotomic":
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparisons -----------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Cyclotomic) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return "Cyclotomic(%s)" % (self,)

    def __str__(self):
        parts = []
        for k, coeff in enumerate(self.c):
            if not coeff:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else "z^%d" % k)
            if k == 0:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(mono)
            elif coeff == -1:
                parts.append("-" + mono)
            else:
                parts.append("%s*%s" % (coeff, mono))
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += ("+" + p) if not p.startswith("-") else p
        return out


def _poly_divmod(a, b):
    """Division with remainder for rational coefficient lists (low to high)."""
    a = list(a)
    q = [_ZERO] * max(1, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    for k in range(len(a) - len(b), -1, -1):
        coeff = a[k + len(b) - 1] * inv_lead
        q[k] = coeff
        if coeff:
            for j, bj in enumerate(b):
                a[k + j] -= coeff * bj
    while len(a) > 1 and not a[-1]:
        a.pop()
    return q, a


def _poly_mul(a, b):
    out = [_ZERO] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_sub(a, b):
    out = list(a) + [_ZERO] * (len(b) - len(a))
    for j, bj in enumerate(b):
        out[j] -= bj
    return out


ZERO = Cyclotomic()
ONE = Cyclotomic(1)
MINUS_ONE = Cyclotomic(-1)
ZETA = Cyclotomic(0, 1)
THETA = Cyclotomic(-1, 0, 1)        # z^2 - 1, a primitive cube root of unity
THETA2 = Cyclotomic(0, 0, -1)       # theta^2 = -z^2
I_UNIT = Cyclotomic(0, 0, 0, 1)     # z^3, a primitive fourth root of unity


def rat(p, q=1) -> Cyclotomic:
    """Rational shorthand used all over the test-suites."""
    return Cyclotomic.from_rational(Fraction(p, q))


def theta_power(e: int) -> Cyclotomic:
    """theta^e for e mod 3 (e = 0 gives 1)."""
    e %= 3
    if e == 0:
        return ONE
    return THETA if e == 1 else THETA2
