"""
Tests for the cohomology table, E_2 page and filtration audit
"""

import pytest

from dihedral_kring.ahss import (
    FiltrationStatus,
    audit_filtrations,
    cohomology,
    cohomology_summands,
    cohomology_table,
    e2_page,
    filtration_report,
)
from dihedral_kring.errors import InvalidParameterError
from dihedral_kring.exactalg import AbelianGroup
from dihedral_kring.kring import Grading


# =============================================================================
# COHOMOLOGY
# =============================================================================

def test_cohomology_odd_examples():
    assert cohomology(5, 0).invariant_factors == (0,)
    assert cohomology(5, 2).invariant_factors == (2,)
    assert cohomology(5, 4).invariant_factors == (10,)
    assert cohomology(5, 1).is_trivial()
    assert cohomology(5, 3).is_trivial()


def test_cohomology_odd_vanishes_in_odd_degrees():
    for n in range(3, 40, 2):
        for p in range(1, 24, 2):
            assert cohomology(n, p).is_trivial(), (n, p)


def test_cohomology_odd_period_four():
    for n in (3, 7, 15):
        for p in range(1, 20):
            assert cohomology(n, p + 4) == cohomology(n, p)


def test_cohomology_even_examples():
    assert cohomology_summands(4, 2) == (2, 2)
    assert cohomology_summands(4, 3) == (2,)
    assert cohomology_summands(4, 4) == (4, 2, 2)
    assert cohomology_summands(4, 6) == (2, 2, 2, 2)
    assert cohomology(6, 4) == AbelianGroup.from_summands((6, 2, 2))


def test_cohomology_even_two_rank_grows():
    for n in (4, 6, 8, 12):
        for s in range(0, 5):
            base = 4 * s
            assert len(cohomology_summands(n, base + 1)) == 2 * s
            assert len(cohomology_summands(n, base + 2)) == 2 * s + 2
            assert len(cohomology_summands(n, base + 3)) == 2 * s + 1
            assert cohomology_summands(n, base + 4)[0] == n


def test_cohomology_rejects_bad_input():
    with pytest.raises(InvalidParameterError):
        cohomology(2, 4)
    with pytest.raises(InvalidParameterError):
        cohomology(5, -1)
    with pytest.raises(InvalidParameterError):
        cohomology_table(5, -1)


def test_cohomology_table():
    table = cohomology_table(3, 8)
    assert [e.p for e in table.entries] == list(range(9))
    assert [e.describe() for e in table.entries] == [
        "Z", "0", "Z_2", "0", "Z_3⊕Z_2", "0", "Z_2", "0", "Z_3⊕Z_2",
    ]
    assert table.entries[4].group.order == 6


def test_e2_page():
    assert e2_page(5, 4, 0) == cohomology(5, 4)
    assert e2_page(5, 4, -2) == cohomology(5, 4)
    assert e2_page(5, 4, -1).is_trivial()
    with pytest.raises(InvalidParameterError):
        e2_page(5, 4, 1)


# =============================================================================
# FILTRATIONS
# =============================================================================

def test_odd_filtration_entries():
    report = filtration_report(5, 8)
    assert [e.degree for e in report.entries] == [2, 4, 6, 8]
    assert all(e.status is FiltrationStatus.COLLAPSED for e in report.entries)
    assert report.entries[0].generators == ("v",)
    assert report.entries[1].generators == ("v^2", "(phi-v)")
    assert report.entries[3].generators == ("v^4", "(phi-v)^2")
    assert [e.claimed_order for e in report.entries] == [2, 10, 2, 10]
    assert report.entries[1].note


def test_k2_filtration_entries():
    entries = filtration_report(4, 6).entries
    assert entries[0].claimed == (2, 2)
    assert entries[0].generators == ("v1", "v2")
    assert entries[1].claimed == (4, 2, 2)
    assert entries[1].generators == ("phi", "v1*v3", "v2*v3")
    assert entries[2].claimed == (2, 2, 2)
    assert entries[2].generators == ("v1*v3^2", "v2*v3^2", "v1*v2")
    assert entries[2].e2 == (2, 2, 2, 2)
    assert "does not survive" in entries[2].note


def test_k2_z4_generator_is_phi_in_every_degree():
    entries = filtration_report(4, 12).entries
    assert entries[3].generators == ("phi", "v1*v3^3", "v2*v3^3")
    assert entries[5].generators == ("phi", "v1*v3^5", "v2*v3^5")


def test_general_even_filtration_is_unverified():
    for entry in filtration_report(6, 6).entries:
        assert entry.status is FiltrationStatus.UNVERIFIED
        assert entry.claimed is None
        assert entry.claimed_order is None


def test_filtration_report_rejects_small_degree():
    with pytest.raises(InvalidParameterError):
        filtration_report(5, 1)


# =============================================================================
# AUDIT
# =============================================================================

def test_audit_odd_examples():
    audit = audit_filtrations(3, 3)
    assert [row.graded_order for row in audit.rows] == [2, 6, 2]
    assert audit.passed
    audit = audit_filtrations(7, 2)
    assert [row.graded_order for row in audit.rows] == [2, 14]
    assert audit.passed


def test_audit_k2():
    audit = audit_filtrations(4, 3)
    assert [row.graded_order for row in audit.rows] == [4, 16, 8]
    assert [row.expected_order for row in audit.rows] == [4, 16, 8]
    assert audit.passed
    assert audit_filtrations(5, 2).passed


def test_audit_odd_sweep():
    for n in (3, 5, 7, 9, 15):
        audit = audit_filtrations(n, 6)
        assert audit.passed, n
        assert all(row.match for row in audit.rows)


def test_audit_unverified_rows_do_not_fail():
    audit = audit_filtrations(6, 2)
    assert all(row.match is None for row in audit.rows)
    assert audit.passed


def test_audit_total_grading_differs():
    audit = audit_filtrations(3, 1, Grading.TOTAL)
    assert audit.grading is Grading.TOTAL
    assert audit.rows[0].graded_order == 6
    assert not audit.passed


def test_audit_rejects_bad_depth():
    with pytest.raises(InvalidParameterError):
        audit_filtrations(5, 0)
