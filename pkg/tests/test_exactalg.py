"""
Tests for the exact algebra core: polynomials, SNF, lattices
"""

import pytest

from dihedral_kring.errors import InvalidParameterError
from dihedral_kring.exactalg import (
    AbelianGroup,
    IntMatrix,
    IntPoly,
    abelian_group_from_presentation,
    binomial,
    cyclic_convolve,
    describe_summands,
    echelon_form,
    lattice_contains,
    poly_add,
    poly_compose,
    poly_eval_int,
    poly_mul,
    poly_rem_monic,
    smith_normal_form,
)
from dihedral_kring.polyzoo import adams_psi


def _random_poly(rng, max_degree=4, bound=5):
    degree = int(rng.integers(0, max_degree + 1))
    return IntPoly(tuple(int(c) for c in rng.integers(-bound, bound + 1, size=degree + 1)))


def _det(m):
    if len(m) == 1:
        return m[0][0]
    return sum(
        (-1) ** j * m[0][j] * _det([row[:j] + row[j + 1:] for row in m[1:]])
        for j in range(len(m))
    )


# =============================================================================
# POLYNOMIALS
# =============================================================================

def test_canonical_form_strips_trailing_zeros():
    assert IntPoly((1, 0, 0)).coeffs == (1,)
    assert IntPoly((0, 0)).is_zero()
    assert IntPoly().degree == -1


def test_poly_add(w):
    assert poly_add(w, -w).is_zero()
    assert poly_add(IntPoly((3, 1)), IntPoly((2,))) == IntPoly((5, 1))
    assert poly_add(w * w, 4 * w) == IntPoly((0, 4, 1))


def test_poly_mul(w):
    assert poly_mul(w, w + 3) == IntPoly((0, 3, 1))
    p = IntPoly((7, -2, 5))
    assert poly_mul(IntPoly.constant(1), p) == p
    assert (w + 1) ** 2 == IntPoly((1, 2, 1))


def test_poly_compose(w):
    assert poly_compose(w * w, w + 1) == IntPoly((1, 2, 1))
    p = IntPoly((3, 0, -1, 2))
    assert poly_compose(p, w) == p
    psi2 = IntPoly((0, 4, 1))
    assert poly_compose(psi2, psi2) == IntPoly((0, 16, 20, 8, 1))
    assert poly_compose(psi2, psi2) == adams_psi(4)


def test_poly_eval_int():
    assert poly_eval_int(IntPoly((3, 1)), -2) == 1
    assert poly_eval_int(IntPoly(), 12345) == 0
    assert poly_eval_int(IntPoly((5, 5, 1)), -2) == -1


def test_binomial():
    assert binomial(0, 0) == 1
    assert binomial(6, 3) == 20
    assert binomial(4, 2) == 6
    with pytest.raises(InvalidParameterError):
        binomial(2, 3)
    with pytest.raises(InvalidParameterError):
        binomial(-1, 0)


def test_ring_axioms_sampled(rng):
    for _ in range(200):
        a, b, c = (_random_poly(rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        if not a.is_zero() and not b.is_zero():
            assert (a * b).degree == a.degree + b.degree


def test_rem_monic():
    mu4 = IntPoly((0, 0, 0, 0, 1))
    modulus = IntPoly((0, 4, 6, 4, 1))
    assert poly_rem_monic(mu4, modulus) == IntPoly((0, -4, -6, -4))
    with pytest.raises(InvalidParameterError):
        poly_rem_monic(mu4, IntPoly((1, 2)))


def test_cyclic_convolve_large_values_are_exact():
    big = 1 << 40
    a = (big, 0, big)
    b = (big, big, 0)
    # x^0..x^2 mod x^3 - 1
    assert cyclic_convolve(a, b, 3) == (2 * big * big, big * big, big * big)
    assert cyclic_convolve((1, 2, 0), (0, 1, 1), 3) == (2, 1, 3)


# =============================================================================
# SMITH NORMAL FORM
# =============================================================================

def test_snf_examples():
    assert smith_normal_form(IntMatrix.from_rows([[1, 0], [0, 1]])).is_trivial()
    assert smith_normal_form(IntMatrix.from_rows([[2, 4], [6, 8]])).invariant_factors == (2, 4)
    assert smith_normal_form(IntMatrix.from_rows([[0]])).invariant_factors == (0,)


def test_presentation_examples():
    assert abelian_group_from_presentation(1, [[2]]).invariant_factors == (2,)
    assert abelian_group_from_presentation(2, [[2, 0]]).invariant_factors == (2, 0)
    assert abelian_group_from_presentation(2, [[2, 0], [0, 3]]).invariant_factors == (6,)
    assert abelian_group_from_presentation(3, []).invariant_factors == (0, 0, 0)


def test_matrix_shape_is_checked():
    with pytest.raises(InvalidParameterError):
        IntMatrix(2, 2, (1, 2, 3))
    with pytest.raises(InvalidParameterError):
        IntMatrix.from_rows([[1, 2], [3]])


def test_snf_invariant_under_permutation_and_sign(rng):
    for _ in range(50):
        rows = rng.integers(-9, 10, size=(3, 4)).tolist()
        base = smith_normal_form(IntMatrix.from_rows(rows))
        perm = rng.permutation(3).tolist()
        cols = rng.permutation(4).tolist()
        shuffled = [[rows[i][j] for j in cols] for i in perm]
        shuffled[0] = [-x for x in shuffled[0]]
        assert smith_normal_form(IntMatrix.from_rows(shuffled)) == base


def test_snf_product_matches_determinant(rng):
    checked = 0
    while checked < 50:
        rows = rng.integers(-9, 10, size=(3, 3)).tolist()
        det = _det(rows)
        if det == 0:
            continue
        group = smith_normal_form(IntMatrix.from_rows(rows))
        assert group.order == abs(det)
        checked += 1


def test_divisibility_chain(rng):
    for _ in range(50):
        rows = (2 * rng.integers(-6, 7, size=(4, 4))).tolist()
        factors = [d for d in smith_normal_form(IntMatrix.from_rows(rows)).invariant_factors if d]
        for small, large in zip(factors, factors[1:]):
            assert large % small == 0


# =============================================================================
# GROUPS AND LATTICES
# =============================================================================

def test_abelian_group_from_summands():
    assert AbelianGroup.from_summands((3, 2)).invariant_factors == (6,)
    assert AbelianGroup.from_summands((4, 2, 2)).invariant_factors == (2, 2, 4)
    assert AbelianGroup.from_summands((0,)).order is None
    assert AbelianGroup.from_summands(()).order == 1


def test_describe_summands():
    assert describe_summands(()) == "0"
    assert describe_summands((0,)) == "Z"
    assert describe_summands((3, 2)) == "Z_3⊕Z_2"
    assert describe_summands((4, 2, 2)) == "Z_4⊕Z_2⊕Z_2"
    assert describe_summands((2, 2, 2, 2)) == "(Z_2)^4"
    assert str(AbelianGroup((2, 4))) == "Z_2⊕Z_4"


def test_lattice_membership():
    basis = echelon_form([[2, 0], [0, 3], [2, 3]], 2)
    assert lattice_contains(basis, (4, 3))
    assert lattice_contains(basis, (0, 0))
    assert not lattice_contains(basis, (1, 0))
    assert not lattice_contains(basis, (0, 1))


def test_echelon_pivots_increase(rng):
    rows = rng.integers(-5, 6, size=(6, 5)).tolist()
    basis = echelon_form(rows, 5)
    pivots = [next(i for i, x in enumerate(row) if x) for row in basis]
    assert pivots == sorted(set(pivots))
    assert all(row[p] > 0 for row, p in zip(basis, pivots))
    for row in rows:
        assert lattice_contains(basis, row)
