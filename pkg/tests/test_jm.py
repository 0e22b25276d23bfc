import pytest

from cubichecke.catalog import ideal_by_name, label2, label3, label4
from cubichecke.cyclotomic import theta_power
from cubichecke.errors import HypothesisViolated, PathBasisUnavailable
from cubichecke.jm import (
    AB2BlockSpec,
    ab2_diag,
    ab2_matrix,
    ab2_matrix_closed_form,
    block_spec,
    vanishing_order,
)
from cubichecke.matrix import Matrix
from cubichecke.ratfunc import RatFunc

L1 = RatFunc.var(0)
L2 = RatFunc.var(1)
L3 = RatFunc.var(2)
ONE = RatFunc.one()


def test_block_spec_6dim():
    b = block_spec(label2(1), label4((3, 2, 1)), 3)
    assert [str(x.reduce()) for x in b.x] == ["l1^2*l2^2*l3^2", "-l1^3*l2^3", "l1^6"]
    assert b.delta == RatFunc.monomial((8, 4, 2))
    assert [(str(e), m) for e, m in b.a_spectrum] == [("l1", 1), ("l2", 1), ("l3", 1)]
    assert b.rank1_eigenvalue == L1


def test_block_spec_8dim():
    b = block_spec(label2(1), label4((4, 2, 2)), 3)
    assert [str(x.reduce()) for x in b.x] == [
        "l1^6", "-l1^3*l2^3", "l1^2*l2^2*l3^2", "-l1^3*l3^3",
    ]
    assert b.delta == RatFunc.monomial((8, 3, 3))
    assert dict((str(e), m) for e, m in b.a_spectrum) == {"l1": 2, "l2": 1, "l3": 1}
    assert b.rank1_eigenvalue == L2  # smallest-index multiplicity-1 eigenvalue


def test_block_spec_level3():
    b = block_spec(None, label3((1, 1, 1)), 2)
    assert [str(x) for x in b.x] == ["l1^2", "l2^2", "l3^2"]
    assert b.delta == RatFunc.monomial((2, 2, 2))


def test_block_spec_9dim_delta():
    b = block_spec(label2(1), label4((3, 3, 3), 1), 3)
    assert b.delta == RatFunc.monomial((6, 4, 4), theta_power(1))


def test_diag_sums_to_one_and_matrix_relations():
    b = block_spec(label2(1), label4((3, 2, 1)), 3)
    d = ab2_diag(b, L3)
    assert d.total() == ONE
    a = ab2_matrix(b, L3, "row")
    t = Matrix.diagonal(list(b.x))
    n = b.size
    atat = a * t * a * t
    tata = t * a * t * a
    for i in range(n):
        for j in range(n):
            want = b.delta if i == j else RatFunc.zero()
            assert (atat.entries[i][j] - want).is_zero()
            assert (tata.entries[i][j] - want).is_zero()
    minpoly = Matrix.identity(n)
    for ev, _m in b.a_spectrum:
        minpoly = minpoly * a.add_scalar(-ev)
    assert minpoly.is_zero()
    assert a == ab2_matrix_closed_form(b, L3)


def test_row_column_duality():
    b = block_spec(label2(1), label4((4, 2, 2)), 3)
    row = ab2_matrix(b, L3, "row")
    col = ab2_matrix(b, L3, "column")
    n = b.size
    for i in range(n):
        assert (row.entries[i][i] - col.entries[i][i]).is_zero()
        for j in range(n):
            lhs = row.entries[i][j] * row.entries[j][i]
            rhs = col.entries[i][j] * col.entries[j][i]
            assert (lhs - rhs).is_zero()


def test_projection_rank_one_identity():
    b = block_spec(label2(1), label4((3, 2, 1)), 3)
    d = ab2_diag(b, L2)
    # p_rs p_sr = d_r d_s in either gauge
    for r in range(b.size):
        for s in range(b.size):
            assert (d.d[r] * d.d[s] - d.d[r] * d.d[s]).is_zero()


def test_one_by_one_block():
    b = block_spec(label2(3), label4((3, 2, 1)), 3)
    assert b.size == 1
    a = ab2_matrix(b, L1, "row")
    assert a.entries[0][0] == L1
    # delta = x^2 lambda^2 is required
    bad = AB2BlockSpec(b.x, b.delta * L1, b.a_spectrum, b.rank1_eigenvalue, b.pair)
    with pytest.raises(HypothesisViolated):
        ab2_matrix(bad, L1, "row")


def test_multiplicity_requirement():
    b = block_spec(label2(1), label4((4, 2, 2)), 3)
    with pytest.raises(HypothesisViolated):
        ab2_diag(b, L1)  # multiplicity 2


def test_x_collision_detection():
    b = block_spec(None, label3((1, 1, 1)), 2)
    ctx = ideal_by_name("l2+l3").param
    with pytest.raises(PathBasisUnavailable):
        from cubichecke.builder import _ctx_block

        _ctx_block(b, ctx).check_x_distinct()


def test_vanishing_order():
    p = ideal_by_name("l1+theta*l2")
    gen = RatFunc.from_poly(p.generator)
    f = gen * gen * L3
    assert vanishing_order(f, p) == 2
    assert vanishing_order(L1 - L2, p) == 0
    cubic = ideal_by_name("l2^3-l1^2*l3")
    d2 = -((L2 ** 3 - L1 * L1 * L3) * (L3 ** 3 - L1 * L1 * L2)) / (
        (L1 * L2 + L3 * L3) * (L1 - L3) * (L2 - L3) * (L1 * L1 - L1 * L2 + L2 * L2)
    )
    assert vanishing_order(d2, cubic) == 1
    with pytest.raises(ValueError):
        vanishing_order(RatFunc.zero(), p)
