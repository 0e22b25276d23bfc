import pytest

from cubichecke.catalog import ideal_by_name, label2, label4
from cubichecke.cyclotomic import Cyclotomic, ONE, THETA, theta_power
from cubichecke.errors import IncompatibleIdeals, UnidentifiedFactor
from cubichecke.structure import (
    _series_by_dproducts,
    blocks,
    census_generic,
    census_pair,
    census_single,
    classify_ideals,
    classify_point,
    compose_pair,
    composition_series,
    exact_sequence,
    k3_structure,
    split_on_locus,
)


def test_classify_generic_point():
    report = classify_point((Cyclotomic(2), Cyclotomic(3), Cyclotomic(5)))
    assert report.semisimple and not report.vanishing


def test_classify_rejects_repeated():
    with pytest.raises(ValueError):
        classify_point((ONE, ONE, Cyclotomic(2)))


def test_classify_double_locus_point():
    # (1, -theta^2, theta): l1 + theta l2 = 0 and l2 + theta l3 = 0
    pt = (ONE, -theta_power(2), THETA)
    report = classify_point(pt)
    names = {v.name for v in report.vanishing}
    assert "l1+theta*l2" in names and "l2+theta*l3" in names
    assert not report.semisimple


def test_classify_on_parametrized_locus():
    import random

    rng = random.Random(3)
    spec = ideal_by_name("l1^3-l2^2*l3")
    for _ in range(5):
        pt = spec.param.random_point(rng)
        report = classify_point(pt)
        assert "l1^3-l2^2*l3" in {v.name for v in report.vanishing}


def test_classify_ideal():
    report = classify_ideals([ideal_by_name("l1+theta*l2")])
    assert not report.semisimple
    assert [v.name for v in report.vanishing] == ["l1+theta*l2"]


def test_blocks_spec_examples():
    b = blocks(ideal_by_name("l1+theta*l2"))
    classes = [set(l.name for l in c) for c in b.classes]
    assert {"l1", "l1*l2", "l2"} in classes
    assert {"l1^2*l3", "l1^3*l2^3*l3^3:theta", "l1*l2^3*l3^2"} in classes
    assert {"l2^2*l3", "l1^3*l2^3*l3^3:theta2", "l1^3*l2*l3^2"} in classes
    assert len(b.classes) == 3

    b5 = blocks(ideal_by_name("l1^2-theta*l2*l3"))
    assert [set(l.name for l in c) for c in b5.classes] == [
        {"l2*l3", "l1^3*l2^3*l3^3:theta", "l1^4*l2^2*l3^2", "l1"}
    ]


def test_blocks_reject_diff():
    with pytest.raises(ValueError):
        blocks(ideal_by_name("l1-l2"))


def test_series_9dim_theta_sum():
    cs = composition_series(label4((3, 3, 3), 1), ideal_by_name("l1+theta*l2"))
    dims = sorted(f.dim for f in cs.factors)
    assert dims == [3, 6]
    by_dim = {f.dim: f for f in cs.factors}
    assert by_dim[3].label.name == "l1^2*l3"
    assert by_dim[3].weights == {(1, 1): 1, (1, 3): 1, (3, 1): 1}
    assert by_dim[6].label.name == "l1*l2^3*l3^2"


def test_series_8dim_theta_quadratic():
    cs = composition_series(label4((4, 2, 2)), ideal_by_name("l1^2-theta*l2*l3"))
    dims = sorted(f.dim for f in cs.factors)
    assert dims == [1, 7]
    seven = [f for f in cs.factors if f.dim == 7][0]
    assert seven.label.name == "{l1^3*l2^2*l3^2}:theta"
    assert seven.weights == {
        (1, 1): 1, (1, 2): 1, (2, 1): 1, (1, 3): 1, (3, 1): 1, (2, 3): 1, (3, 2): 1,
    }


def test_series_8dim_simple_cases():
    for name in ("l2+l3",):
        p = ideal_by_name(name)
        cs = composition_series(label4((4, 2, 2)), p)
        assert cs.route == "trivial"
        assert len(cs.factors) == 1


def test_series_8dim_invariant_subset():
    # the submodule spanned by the first, seventh and eighth path of the
    # lemma's ordering appears as the top factor of the as-given series
    cs = composition_series(label4((4, 2, 2)), ideal_by_name("l2^3-l1^2*l3"), "transpose")
    assert cs.factors[0].indices == (0, 6, 7)
    assert cs.factors[0].label.name == "l1^2*l3"


def test_series_orientation_duality():
    p = ideal_by_name("l1^3-l2^2*l3")
    fwd = composition_series(label4((3, 2, 1)), p, "as-given")
    bwd = composition_series(label4((3, 2, 1)), p, "transpose")
    assert [f.label for f in fwd.factors] == [f.label for f in reversed(bwd.factors)]


def test_dproduct_fallback_agrees_with_assembly():
    p = ideal_by_name("l1^2-theta*l2*l3")
    lbl = label4((4, 2, 2))
    assembly = composition_series(lbl, p)
    fallback = _series_by_dproducts(lbl, p, "as-given", refused="forced")
    assert sorted(f.label.name for f in assembly.factors) == sorted(
        f.label.name for f in fallback.factors
    )
    assert fallback.route == "d-product"


def test_exact_sequence_cubic():
    p = ideal_by_name("l1^3-l2^2*l3")
    b = blocks(p)
    seq = exact_sequence(p, b.classes[0])
    names = [l.name for l in seq.labels]
    expected = ["l2^2*l3", "l1^2*l2^4*l3^2", "l1^3*l2^2*l3", "l1"]
    assert names == expected or names == expected[::-1]


def test_census_single_dedup():
    c = census_single(ideal_by_name("l1+i*l2"))
    names = [e.label.name for e in c.entries]
    assert "{l1*l2}*" in names
    assert len(names) == len(set(names))
    # the two 3-dim Hecke modules of the block are gone, the star module appears
    assert "l1^2*l2" not in names and "l1*l2^2" not in names


def test_census_generic_totals():
    c = census_generic()
    assert c.sum_dim_sq == 648


def test_census_pair_table4_last_row():
    pair = census_pair(ideal_by_name("l1+theta*l2"), ideal_by_name("l2+theta*l3"))
    assert len(pair) == 1
    names = {e.label.name for e in pair[0].entries}
    assert {"l1^2*l3", "l1*l2^2", "l2*l3^2"} <= names


def test_incompatible_pair():
    with pytest.raises(IncompatibleIdeals) as err:
        compose_pair(ideal_by_name("l1^2-theta*l2*l3"), ideal_by_name("l2^2-theta*l1*l3"))
    assert set(err.value.witness) & {"l1-l3", "l2-l3"}


def test_k3_generic():
    rep = k3_structure()
    assert len(rep.entries) == 7
    assert rep.sum_dim_sq == 24


def test_k3_sequences():
    rep = k3_structure(ideal_by_name("l1^2+l2*l3"))
    seqs = {g3.name: sorted(l.name for l in seq) for g3, seq in rep.sequences}
    assert seqs == {"l1*l2*l3": ["l1", "l2*l3"]}


def test_split_on_locus_regular_stays():
    p = ideal_by_name("l1+theta*l2")
    assert split_on_locus(p.param, label4((4, 2, 2))) == (label4((4, 2, 2)),)


def test_k3_point_census():
    from cubichecke.cyclotomic import Cyclotomic

    rep = k3_structure(point=(Cyclotomic(2), Cyclotomic(3), Cyclotomic(5)))
    assert len(rep.entries) == 7
    # the coincidence locus: l1 = -theta l2, l2 = -theta l3 leaves 1-dims
    # and the one surviving 2-dim module
    pt = (ONE, -theta_power(2), THETA)
    rep = k3_structure(point=pt)
    dims = sorted(sum(l.exps) for l in rep.entries)
    assert dims == [1, 1, 1, 2]
    assert any(l.name == "l1*l3" for l in rep.entries)


def test_exact_sequence_singleton_is_trivial():
    p = ideal_by_name("l1+theta*l2")
    b = blocks(p)
    seq = exact_sequence(p, (b.singletons[0],))
    assert seq.labels == (b.singletons[0],)
    assert seq.factor_chain == (b.singletons[0],)
