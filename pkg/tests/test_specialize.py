import random

import pytest

from cubichecke.catalog import ideal_by_name
from cubichecke.cyclotomic import Cyclotomic, ONE, THETA, theta_power
from cubichecke.errors import PoleOnLocus
from cubichecke.laurent import LaurentPoly
from cubichecke.ratfunc import RatFunc
from cubichecke.specialize import QuadExt, QuadLocus, Specialization, Substitution

L1 = LaurentPoly.var(0)
L2 = LaurentPoly.var(1)
L3 = LaurentPoly.var(2)


def test_generator_maps_to_zero():
    s = Specialization((Substitution(0, -THETA, (0, 1, 0)),), (L1 + L2.scale(THETA),))
    assert s.apply_poly(L1 + L2.scale(THETA)).is_zero()


def test_monomial_substitution_kills_quadratic_generator():
    gen = LaurentPoly.monomial((2, 0, 0)) - LaurentPoly.monomial((0, 1, 1), THETA)
    s = Specialization(
        (Substitution(2, theta_power(2), (2, -1, 0)),), (gen,)
    )
    assert s.apply_poly(gen).is_zero()
    assert s.apply_poly(LaurentPoly.monomial((3, 0, 0)) - LaurentPoly.monomial((0, 2, 1))).is_zero() is False


def test_cubic_substitution():
    gen = LaurentPoly.monomial((3, 0, 0)) - LaurentPoly.monomial((0, 2, 1))
    s = Specialization((Substitution(2, ONE, (3, -2, 0)),), (gen,))
    assert s.apply_poly(gen).is_zero()


def test_triangularity_enforced():
    with pytest.raises(ValueError):
        Specialization(
            (
                Substitution(1, -THETA, (0, 0, 1)),
                Substitution(0, -THETA, (0, 1, 0)),  # uses the eliminated l2
            ),
            (),
        )
    with pytest.raises(ValueError):
        Specialization((Substitution(0, ONE, (1, 0, 0)),), ())


def test_bad_generator_rejected():
    with pytest.raises(ValueError):
        Specialization((Substitution(0, -THETA, (0, 1, 0)),), (L1 + L2,))


def test_specialize_is_a_homomorphism():
    rng = random.Random(5)
    s = ideal_by_name("l1^3-l2^2*l3").param
    for _ in range(20):
        def rand_poly():
            out = LaurentPoly.zero(3)
            for _ in range(3):
                exps = tuple(rng.randint(-2, 2) for _ in range(3))
                out = out + LaurentPoly.monomial(exps, Cyclotomic(rng.randint(-3, 3)))
            return out
        f, g = rand_poly(), rand_poly()
        assert s.apply_poly(f * g) == s.apply_poly(f) * s.apply_poly(g)
        assert s.apply_poly(f + g) == s.apply_poly(f) + s.apply_poly(g)


def test_ratfunc_pole_detection():
    s = ideal_by_name("l1+l2").param
    f = RatFunc(LaurentPoly.one(3), L1 + L2)
    with pytest.raises(PoleOnLocus):
        s.apply_ratfunc(f)
    # a removable pole specializes fine
    g = RatFunc((L1 + L2) * L3, L1 + L2)
    assert s.apply_ratfunc(g) == s.apply_ratfunc(RatFunc.var(2))


def test_random_point_lies_on_locus():
    rng = random.Random(9)
    for name in ("l1+theta*l2", "l2^3-l1^2*l3", "l1^2+l2*l3"):
        spec = ideal_by_name(name)
        pt = spec.param.random_point(rng)
        assert spec.generator.eval_point(pt).is_zero()
        assert len({str(c) for c in pt}) == 3


def test_quad_locus_evaluation():
    # l1 = u t with u^2 = -i, l2 = i t, l3 = t  (a double locus needing zeta8)
    i_unit = Cyclotomic(0, 0, 0, 1)
    w = -i_unit
    zero = Cyclotomic()
    locus = QuadLocus(
        w,
        (QuadExt(zero, ONE, w), QuadExt(i_unit, zero, w), QuadExt(ONE, zero, w)),
        (1, 1, 1),
    )
    gen1 = LaurentPoly.monomial((0, 3, 0)) - LaurentPoly.monomial((2, 0, 1))
    gen2 = LaurentPoly.monomial((0, 0, 3)) - LaurentPoly.monomial((2, 1, 0))
    sq = LaurentPoly.monomial((0, 2, 0)) + LaurentPoly.monomial((0, 0, 2))
    assert locus.vanishes(gen1)
    assert locus.vanishes(gen2)
    assert locus.vanishes(sq)
    assert not locus.vanishes(L2 + L3)
    assert locus.coordinates_distinct()
