"""Acceptance suite: the eleven exit criteria.

Every criterion is exact (tolerance: equality of rational functions or
integers); each test prints one pass/fail line.  The underlying checks live
in cubichecke.verifyall so the CLI's full verification level runs the same
code.  Four printed scalars carry documented errata (a sign on one projection
entry, a sign on one weight scalar, one factor and the cube-root labeling of
the two sandwich scalars); the corrected values are pinned by identities the
source itself imposes, and those identities are part of the checks here.
"""

import pytest

from cubichecke.catalog import catalog_regular
from cubichecke.verifyall import FULL_CHECKS


def _run(criterion: str, names):
    details = []
    ok_all = True
    for name in names:
        ok, detail = FULL_CHECKS[name]()
        ok_all = ok_all and ok
        details.append("%s%s" % (name, "" if ok else " <- FAIL: %s" % detail))
    print("[%s] %s: %s" % (criterion, "PASS" if ok_all else "FAIL", "; ".join(details)))
    assert ok_all, details


def test_criterion_01_two_dim_blocks():
    """Section 3.6 table: all 8 printed entries, exact."""
    _run("criterion 1", ["jm_two_blocks"])


def test_criterion_02_three_dim_examples():
    """Section 3.7 examples (1)-(3): all 27 entries, exact."""
    _run("criterion 2", ["jm_k3_example", "jm_6dim_example", "jm_9dim_example"])


def test_criterion_03_four_dim_example():
    """Section 3.8: the four projection entries and the congruence pattern."""
    _run("criterion 3", ["jm_8dim_example", "jm_8dim_remark"])


@pytest.mark.parametrize(
    "label_name", [spec.label.name for spec in catalog_regular(4)]
)
def test_criterion_04_generic_assembly(label_name):
    """All 24 labels: braid, far commutation, cubic, central scalar, flip."""
    _run("criterion 4 (%s)" % label_name, ["assembly_%s" % label_name])


def test_criterion_05_weight_scalars():
    """Weight-basis scalars of the 6-dim module and both sandwich scalars."""
    _run("criterion 5", ["weights_6dim", "alpha_8dim", "alpha_9dim"])


def test_criterion_06_charpoly():
    """The half twist on the doubled weight space: x^6 (x^2 - l1^6 l2^3 l3^3)."""
    _run("criterion 6", ["charpoly_8dim"])


def test_criterion_07_dimension_identities():
    """Generic census: 648 on four strands, 24 on three."""
    _run("criterion 7", ["census_generic"])


def test_criterion_08_classifier():
    """50 random points per locus, 500 generic points, no misclassification."""
    _run("criterion 8", ["classifier"])


def test_criterion_09_blocks_sequences_factors():
    """Blocks lists, the seven exact sequences, the exceptional-module table,
    the 6-dim quotient data, and the three-strand structure."""
    _run(
        "criterion 9",
        ["blocks_45", "sequences_46", "table3", "corollary_6dimquot", "k3"],
    )


def test_criterion_10_double_loci():
    """All ten double-locus rows and the incompatible-pair rejection."""
    _run("criterion 10", ["table4"])


def test_criterion_11_property_suites():
    """Projection traces, gauge invariance, transpose duality, equivariance,
    and the random-point eigenprojection oracle."""
    _run(
        "criterion 11",
        [
            "projection_traces",
            "gauge_invariance",
            "transpose_duality",
            "equivariance",
            "numeric_oracle",
        ],
    )
