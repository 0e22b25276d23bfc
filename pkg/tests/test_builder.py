import pytest

from cubichecke.builder import (
    alpha_scalar,
    assemble,
    assemble_k3,
    delta4_weight_charpoly,
    scaled_projection,
    verify,
    weight_operator,
    weight_report,
)
from cubichecke.catalog import catalog_regular, ideal_by_name, label3, label4, spec_for
from cubichecke.matrix import Matrix
from cubichecke.ratfunc import RatFunc

L1 = RatFunc.var(0)
L2 = RatFunc.var(1)
L3 = RatFunc.var(2)


def test_small_generic_assemblies_verify():
    for exps, theta in (((1, 0, 0), 0), ((1, 1, 0), 0), ((2, 1, 0), 0), ((1, 1, 1), 0)):
        g = assemble(label4(exps, theta))
        rep = verify(g)
        assert rep.all_passed, [c.name for c in rep.checks if not c.passed]


def test_six_dim_generic():
    g = assemble(label4((3, 2, 1)))
    rep = verify(g)
    assert rep.all_passed
    assert g.S1.entries[0][0] == L1
    # S2, S3 are block diagonal over the path groupings
    for k, t in enumerate(g.basis):
        for j, s in enumerate(g.basis):
            if t.g3 != s.g3:
                assert g.S2.entries[k][j].is_zero()
            if t.g2 != s.g2:
                assert g.S3.entries[k][j].is_zero()


def test_three_dim_s3_copies_s1():
    g = assemble(label4((1, 1, 1)))
    assert g.S3 == g.S1


def test_k3_assembly():
    for exps in ((1, 0, 0), (1, 1, 0), (1, 1, 1)):
        g = assemble_k3(label3(exps))
        rep = verify(g)
        assert rep.all_passed
    ctx = ideal_by_name("l1^2+l2*l3").param
    g = assemble_k3(label3((1, 1, 1)), ctx)
    assert verify(g).all_passed


def test_specialized_assembly_verifies():
    six = label4((3, 2, 1))
    for name in ("l1+l3", "l1^3-l2^2*l3"):
        g = assemble(six, ideal_by_name(name).param)
        rep = verify(g)
        assert rep.all_passed, name


def test_specialized_assembly_charpoly_matches_generic():
    six = label4((3, 2, 1))
    p = ideal_by_name("l1^3-l2^2*l3")
    generic = assemble(six)
    special = assemble(six, p.param)
    cp_generic = [p.param.apply_ratfunc(c) for c in generic.S2.charpoly()]
    cp_special = special.S2.charpoly()
    assert all((a - b).is_zero() for a, b in zip(cp_generic, cp_special))


def test_gauge_certificate_reports_pins():
    g = assemble(label4((4, 2, 2)))
    assert g.certificate["pinned"] == 6
    assert set(g.certificate["solved"]) == {0, 1}


def test_weight_ranks_match_catalog():
    for exps, theta in (((3, 2, 1), 0), ((4, 2, 2), 0), ((3, 3, 3), 1), ((2, 3, 1), 0)):
        g = assemble(label4(exps, theta))
        wr = weight_report(g, with_d=False)
        assert wr.ranks_match


def test_weight_flip_conjugation():
    g = assemble(label4((3, 2, 1)))
    delta = g.delta_matrix()
    b12 = weight_operator(g, 1, 2)
    b21 = weight_operator(g, 2, 1)
    # Delta4 B(1,2) = B(2,1) Delta4
    assert (delta * b12 - b21 * delta).is_zero()


def test_corrupted_module_fails_with_location():
    g = assemble(label4((2, 1, 0)))
    bad = Matrix([row[:] for row in g.S2.entries])
    bad.entries[0][1] = bad.entries[0][1] + RatFunc.one()
    g.matrices[2] = bad
    rep = verify(g)
    assert not rep.all_passed
    failed = [c for c in rep.checks if not c.passed]
    assert failed and all(c.residual is not None for c in failed)


def test_delta4_weight_charpoly_wrong_label():
    g = assemble(label4((3, 2, 1)))
    with pytest.raises(ValueError):
        delta4_weight_charpoly(g)


def test_rank1_weight_charpoly_shape():
    # for a multiplicity-1 weight the analogous product has charpoly
    # x^(n-1) (x - s)
    g = assemble(label4((2, 1, 0)))
    lam = [L1, L2, L3]
    r = 1
    denom = RatFunc.one()
    for s in (2, 3):
        denom = denom * (lam[r - 1] - lam[s - 1])
    p1 = scaled_projection(g.S1, r).scale(denom.inv())
    p3 = scaled_projection(g.S3, r).scale(denom.inv())
    b = g.delta_matrix() * p1 * p3
    cp = b.charpoly()
    assert cp[0].is_zero() and cp[1].is_zero()
    # x^2 (x - s): the single eigenvalue is the trace
    s_val = b.trace()
    assert (cp[2] + s_val).is_zero() or (cp[2] - s_val).is_zero()
