"""
Tests for the named polynomial families
"""

import pytest
import sympy

from dihedral_kring.errors import InexactDivisionError, InvalidParameterError
from dihedral_kring.exactalg import IntPoly, poly_compose
from dihedral_kring.polyzoo import (
    MINUS2_PATTERN,
    adams_psi,
    chebyshev_sqrt_defect,
    eisenstein_check,
    f_at_minus2,
    f_min,
    g_poly,
    named_poly,
    shifted_chebyshev,
    wf_identity_defect,
)

ODD_NS = range(3, 200, 2)


# =============================================================================
# ADAMS AND CHEBYSHEV
# =============================================================================

def test_adams_psi_examples():
    assert adams_psi(1) == IntPoly((0, 1))
    assert adams_psi(2) == IntPoly((0, 4, 1))
    assert adams_psi(3) == IntPoly((0, 9, 6, 1))
    assert adams_psi(4) == IntPoly((0, 16, 20, 8, 1))


def test_adams_psi_shape():
    for i in (1, 5, 17, 40):
        p = adams_psi(i)
        assert p.degree == i
        assert p.coeff(0) == 0
        assert p.is_monic()


def test_shifted_chebyshev_examples():
    assert shifted_chebyshev(1) == IntPoly((0, 1))
    assert shifted_chebyshev(2) == IntPoly((0, 4, 1))
    assert shifted_chebyshev(3) == IntPoly((0, 9, 6, 1))


def test_psi_equals_shifted_chebyshev():
    for i in range(1, 201):
        assert adams_psi(i) == shifted_chebyshev(i), i


def test_shifted_chebyshev_against_sympy():
    w = sympy.Symbol("w")
    for i in range(1, 16):
        expr = sympy.expand(2 * sympy.chebyshevt(i, (w + 2) / 2) - 2)
        coeffs = tuple(int(c) for c in reversed(sympy.Poly(expr, w).all_coeffs()))
        assert shifted_chebyshev(i) == IntPoly(coeffs)


def test_psi_composition_law():
    for a in range(1, 13):
        for b in range(1, 13):
            assert poly_compose(adams_psi(a), adams_psi(b)) == adams_psi(a * b), (a, b)


def test_index_must_be_positive():
    with pytest.raises(InvalidParameterError):
        adams_psi(0)
    with pytest.raises(InvalidParameterError):
        shifted_chebyshev(0)


def test_inexact_division_is_an_arithmetic_error():
    assert issubclass(InexactDivisionError, ArithmeticError)


# =============================================================================
# MINIMAL POLYNOMIAL f_n
# =============================================================================

def test_f_min_examples():
    assert f_min(3) == IntPoly((3, 1))
    assert f_min(5) == IntPoly((5, 5, 1))
    assert f_min(7) == IntPoly((7, 14, 7, 1))
    assert f_min(9) == IntPoly((9, 30, 27, 9, 1))


def test_f_min_shape():
    for n in ODD_NS:
        f = f_min(n)
        assert f.is_monic()
        assert f.degree == (n - 1) // 2
        assert f.coeff(0) == n


@pytest.mark.parametrize("n", [1, 2, 4, 10, -3])
def test_f_min_rejects_bad_n(n):
    with pytest.raises(InvalidParameterError):
        f_min(n)


def test_wf_identity_examples():
    for n in (3, 5, 7):
        assert wf_identity_defect(n).is_zero()
        assert chebyshev_sqrt_defect(n).is_zero()


def test_wf_and_sqrt_identities_sweep():
    for n in ODD_NS:
        assert wf_identity_defect(n).is_zero(), n
        assert chebyshev_sqrt_defect(n).is_zero(), n


def test_f_at_minus2_examples():
    assert f_at_minus2(3) == 1
    assert f_at_minus2(5) == -1
    assert f_at_minus2(9) == 1


def test_f_at_minus2_pattern():
    for n in ODD_NS:
        k = (n - 1) // 2
        assert f_at_minus2(n) == MINUS2_PATTERN[k % 4], n


# =============================================================================
# g_2k AND EISENSTEIN
# =============================================================================

def test_g_poly_examples():
    assert g_poly(2) == IntPoly((0, 8, 6, 1))
    assert g_poly(3) == IntPoly((0, 12, 19, 8, 1))
    for k in range(2, 30):
        assert g_poly(k).coeff(0) == 0
        assert g_poly(k).degree == k + 1
    with pytest.raises(InvalidParameterError):
        g_poly(1)


def test_eisenstein_examples():
    assert eisenstein_check(f_min(5), 5)
    assert eisenstein_check(f_min(7), 7)
    assert not eisenstein_check(IntPoly((4, 1)), 2)


def test_eisenstein_rejects_bad_input():
    with pytest.raises(InvalidParameterError):
        eisenstein_check(IntPoly((5, 2)), 5)
    with pytest.raises(InvalidParameterError):
        eisenstein_check(f_min(9), 9)


def test_eisenstein_for_odd_primes():
    for p in sympy.primerange(3, 200):
        assert eisenstein_check(f_min(int(p)), int(p)), p


def test_named_poly_lookup():
    assert named_poly("psi", 2) == adams_psi(2)
    assert named_poly("fmin", 7) == f_min(7)
    with pytest.raises(InvalidParameterError):
        named_poly("bessel", 2)
