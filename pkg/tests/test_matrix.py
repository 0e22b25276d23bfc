from fractions import Fraction
import random

from cubichecke.cyclotomic import Cyclotomic
from cubichecke.matrix import Matrix, eval_matrix, num_eigenprojection
from cubichecke.ratfunc import RatFunc

L1 = RatFunc.var(0)
L2 = RatFunc.var(1)
L3 = RatFunc.var(2)
ONE = RatFunc.one()
ZERO = RatFunc.zero()


def test_charpoly_identity():
    cp = Matrix.identity(2).charpoly()
    # (x-1)^2 = 1 - 2x + x^2
    assert cp[0] == ONE and cp[1] == -(ONE + ONE) and cp[2] == ONE


def test_charpoly_diagonal():
    cp = Matrix.diagonal([L1, L2]).charpoly()
    assert cp[0] == L1 * L2
    assert cp[1] == -(L1 + L2)
    assert cp[2] == ONE


def test_charpoly_block_structure():
    m = Matrix.zero(4, 4)
    m.entries[0][0] = L1
    m.entries[0][1] = ONE
    m.entries[1][0] = L2
    m.entries[1][1] = L1
    m.entries[2][2] = L3
    m.entries[3][3] = L2
    cp = m.charpoly()
    # det(xI - M) evaluated at x = l3 vanishes
    total = ZERO
    power = ONE
    for c in cp:
        total = total + c * power
        power = power * L3
    assert total.is_zero()


def test_charpoly_matches_sympy_on_random_rationals():
    import sympy

    rng = random.Random(11)
    n = 5
    entries = [[Fraction(rng.randint(-4, 4)) for _ in range(n)] for _ in range(n)]
    m = Matrix([[RatFunc.const(Cyclotomic.from_rational(q)) for q in row] for row in entries])
    cp = m.charpoly()
    sm = sympy.Matrix(n, n, lambda i, j: sympy.Rational(entries[i][j]))
    x = sympy.symbols("x")
    want = sympy.Poly(sm.charpoly(x).as_expr(), x).all_coeffs()[::-1]
    for ours, theirs in zip(cp, want):
        assert ours.num.const_value().rational_value() == Fraction(theirs)


def test_cayley_hamilton_exact():
    m = Matrix(
        [
            [L1, L2, ZERO],
            [ONE, L3, L1 / (L1 - L2)],
            [ZERO, L2, L1 + L3],
        ]
    )
    cp = m.charpoly()
    total = Matrix.zero(3, 3)
    power = Matrix.identity(3)
    for c in cp:
        total = total + power.scale(c)
        power = power * m
    assert total.is_zero()


def test_eigenprojection_diag():
    m = Matrix.diagonal([L1, L2])
    p = m.eigenprojection(L1, [(L1, 1), (L2, 1)])
    assert p.entries[0][0] == ONE
    assert p.entries[1][1].is_zero()
    assert p.trace() == ONE
    # resolution of identity
    q = m.eigenprojection(L2, [(L1, 1), (L2, 1)])
    assert (p + q) == Matrix.identity(2)
    assert (p * q).is_zero()
    # spectral reconstruction
    assert (p.scale(L1) + q.scale(L2)) == m


def test_eigenprojection_trace_is_multiplicity():
    m = Matrix.diagonal([L1, L1, L2])
    p = m.eigenprojection(L1, [(L1, 2), (L2, 1)])
    assert p.trace() == ONE + ONE


def test_eigenprojection_spectrum_mismatch():
    import pytest

    m = Matrix.diagonal([L1, L2])
    with pytest.raises(ValueError):
        m.eigenprojection(L1, [(L1, 1), (L3, 1)])


def test_rank():
    m = Matrix([[L1, L2], [L1 * L3, L2 * L3]])
    assert m.rank() == 1
    assert Matrix.identity(3).rank() == 3
    assert Matrix.zero(2, 2).rank() == 0


def test_eval_and_numeric_projection():
    m = Matrix.diagonal([L1, L2])
    pt = (Cyclotomic(2), Cyclotomic(5), Cyclotomic(7))
    nm = eval_matrix(m, pt)
    proj = num_eigenprojection(nm, Cyclotomic(2), [Cyclotomic(5)])
    assert proj[0][0] == Cyclotomic(1)
    assert proj[1][1] == Cyclotomic(0)


def test_evaluation_commutes_with_product():
    import random

    from cubichecke.cyclotomic import ONE as C_ONE
    from cubichecke.matrix import num_mat_mul

    rng = random.Random(17)

    def rand_entry():
        num = LaurentPoly_rand(rng)
        den = LaurentPoly_rand(rng, nonzero=True)
        return RatFunc(num, den)

    def LaurentPoly_rand(rng, nonzero=False):
        from cubichecke.laurent import LaurentPoly

        out = LaurentPoly.zero(3)
        for _ in range(rng.randint(0 if not nonzero else 1, 3)):
            exps = tuple(rng.randint(0, 2) for _ in range(3))
            out = out + LaurentPoly.monomial(exps, Cyclotomic(rng.randint(-3, 3)))
        if nonzero and out.is_zero():
            out = LaurentPoly.one(3)
        return out

    a = Matrix([[rand_entry() for _ in range(2)] for _ in range(2)])
    b = Matrix([[rand_entry() for _ in range(2)] for _ in range(2)])
    pt = (Cyclotomic(3), Cyclotomic(5), Cyclotomic(11))
    lhs = eval_matrix(a * b, pt)
    rhs = num_mat_mul(eval_matrix(a, pt), eval_matrix(b, pt))
    assert lhs == rhs


def test_cayley_hamilton_on_assembled_generators():
    from cubichecke.builder import assemble
    from cubichecke.catalog import label4

    cases = [
        (label4((3, 2, 1)), (2, 3)),   # both six-dimensional generators
        (label4((3, 3, 3), 1), (2,)),  # the size-9 block-diagonal generator
    ]
    for label, indices in cases:
        g = assemble(label)
        for idx in indices:
            m = g.matrices[idx]
            cp = m.charpoly()
            total = Matrix.zero(m.rows, m.rows)
            power = Matrix.identity(m.rows)
            for k, c in enumerate(cp):
                if not c.is_zero():
                    total = total + power.scale(c)
                if k < len(cp) - 1:
                    power = power * m
            assert total.is_zero()
