from __future__ import annotations

from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import SA, SQ, nonzero_quadrats, quadrats, scalar_to_sympy, scalars
from supervir.errors import NotAUnit, NotDivisible, ParseError, ZeroQ
from supervir.scalar import (
    A,
    ONE,
    Q,
    W,
    ZERO,
    QuadRat,
    Scalar,
    SpecPoint,
    alpha,
    q_power,
    specialize,
)
from supervir.syntax import parse_scalar


def test_sqrt2_squares_to_two():
    assert W * W == 2


def test_laurent_product():
    assert (Q + Q**-1) * Q == q_power(2) + 1


def test_distributivity_example():
    assert q_power(2) * (alpha() + 3) - q_power(2) * alpha() == 3 * q_power(2)


def test_specialize_examples():
    assert specialize(q_power(2), SpecPoint(2, 0)) == 4
    assert specialize(alpha() + q_power(-1), SpecPoint(1, 3)) == 4
    assert specialize(W * Q, SpecPoint(QuadRat(0, 1), 0)) == 2


def test_zero_q_rejected():
    with pytest.raises(ZeroQ):
        SpecPoint(0, 1)


def test_quadrat_inverse_uses_norm():
    c = QuadRat(1, 1)
    assert c * c.inverse() == 1
    assert c.inverse() == QuadRat(-1, 1)


def test_non_units_have_no_inverse():
    for s in (Q + 1, A, ZERO, A * Q):
        with pytest.raises(NotAUnit):
            s.inverse()


def test_exact_division():
    assert (Q**2 + 1).exact_div(Q) == Q + Q**-1
    assert ((A + 1) * (Q - A)).exact_div(A + 1) == Q - A
    with pytest.raises(NotDivisible):
        (A + 2).exact_div(A + 1)


@given(scalars(), scalars())
@settings(max_examples=300)
def test_exact_division_recovers_factor(x, y):
    if not y:
        return
    assert (x * y).exact_div(y) == x


@given(scalars(), scalars(), scalars())
@settings(max_examples=1000)
def test_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + ZERO == x
    assert x * ONE == x
    assert x - x == ZERO


@given(scalars(), scalars())
@settings(max_examples=300)
def test_matches_sympy(x, y):
    assert sp.expand(scalar_to_sympy(x * y) - scalar_to_sympy(x) * scalar_to_sympy(y)) == 0
    assert sp.expand(scalar_to_sympy(x + y) - scalar_to_sympy(x) - scalar_to_sympy(y)) == 0


points = st.builds(
    SpecPoint,
    nonzero_quadrats,
    st.fractions(min_value=-3, max_value=3, max_denominator=3),
)


@given(scalars(), scalars(), points)
@settings(max_examples=300)
def test_specialize_is_a_ring_homomorphism(x, y, p):
    assert specialize(x + y, p) == specialize(x, p) + specialize(y, p)
    assert specialize(x * y, p) == specialize(x, p) * specialize(y, p)


@pytest.mark.parametrize("k", range(-20, 21))
def test_q_powers_are_units(k):
    s = q_power(k)
    assert s.is_unit()
    assert s * s.inverse() == ONE
    assert Q**k == s


@given(nonzero_quadrats, st.integers(-6, 6))
def test_monomial_units(c, k):
    s = Scalar.monomial(k, 0, c)
    assert s * s.inverse() == ONE


@given(scalars())
@settings(max_examples=500)
def test_print_parse_round_trip(x):
    assert parse_scalar(str(x)) == x


@pytest.mark.parametrize(
    "text, value",
    [
        ("q^2*(a+1/2)", Q**2 * (A + Fraction(1, 2))),
        ("w/2", W * Fraction(1, 2)),
        ("q^-2", Q**-2),
        ("(1+w)*q - 3*a^2", (1 + W) * Q - 3 * A**2),
        ("-q", -Q),
    ],
)
def test_parse_examples(text, value):
    assert parse_scalar(text) == value


def test_printing_is_canonical():
    assert str(A + 1) == "a+1"
    assert str(q_power(-2)) == "q^-2"
    assert str(W * Fraction(1, 2)) == "1/2*w"
    assert str(ZERO) == "0"


def test_parse_rejects_non_unit_power():
    with pytest.raises(ParseError):
        parse_scalar("(q+1)^-1")


def test_sympy_conversion_sanity():
    assert scalar_to_sympy(Q * A) == SQ * SA
