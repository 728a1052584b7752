from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from treebij.poly import ONE, T, ZERO, Poly

coeffs = st.lists(st.integers(-20, 20), max_size=6)


def test_canonical_form_strips_trailing_zeros():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly([0, 0]).coeffs == ()
    assert ZERO.degree == -1


def test_arithmetic_small_cases():
    assert (1 + T) ** 2 == Poly([1, 2, 1])
    assert T * (2 * T + 1) == Poly([0, 1, 2])
    assert (T - 1) * (T + 1) == Poly([-1, 0, 1])
    assert Poly([3]) == 3


def test_evaluation():
    p = Poly([1, 2, 3])
    assert p(0) == 1
    assert p(2) == 17
    assert p(Fraction(1, 2)) == Fraction(11, 4)


def test_division_by_scalar_goes_rational():
    p = Poly([2, 3]) / 2
    assert p.coeffs == (1, Fraction(3, 2))


def test_integral_fractions_normalize_to_int():
    assert Poly([Fraction(4, 2)]).coeffs == (2,)
    assert type(Poly([Fraction(4, 2)]).coeffs[0]) is int


def test_negative_power_rejected():
    with pytest.raises(ValueError):
        T ** -1


@given(coeffs, coeffs, st.integers(-5, 5))
def test_multiplication_is_evaluation_homomorphism(a, b, x):
    p, q = Poly(a), Poly(b)
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)


@given(coeffs, coeffs, coeffs)
def test_ring_laws(a, b, c):
    p, q, r = Poly(a), Poly(b), Poly(c)
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == ZERO
    assert p * ONE == p


def test_str():
    assert str(2 * T ** 2 + T) == "2*t^2 + t"
    assert str(ZERO) == "0"
