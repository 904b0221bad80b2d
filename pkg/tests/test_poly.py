from __future__ import annotations

from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ST, poly_to_sympy, polys, scalars, t_poly
from supervir.errors import DegreeOverflow
from supervir.poly import (
    DEGREE_CAP,
    HalfInt,
    VarPoly,
    VarTag,
    mul_linear,
    rescale,
    retag,
    shift,
)
from supervir.scalar import A, Q
from supervir.syntax import parse_poly

T, X, Y = VarTag.T, VarTag.X, VarTag.Y
half_steps = st.integers(-8, 8).map(lambda k: Fraction(k, 2))


def test_shift_binomial():
    assert shift(VarPoly.monomial(T, 2), 1) == t_poly(1, 2, 1)


def test_shift_by_half_integer():
    x = VarPoly.monomial(X, 1)
    assert shift(x, Fraction(3, 2)) == VarPoly(X, [Fraction(3, 2), 1])
    assert shift(x, HalfInt(3)) == shift(x, Fraction(3, 2))


@given(polys())
def test_shift_by_zero_is_identity(p):
    assert shift(p, 0) == p


@given(polys(), half_steps, half_steps)
@settings(max_examples=200)
def test_shift_composes(p, c1, c2):
    assert shift(shift(p, c1), c2) == shift(p, c1 + c2)


@given(polys(), polys(), half_steps)
@settings(max_examples=200)
def test_shift_is_linear(p, r, c):
    assert shift(p + r, c) == shift(p, c) + shift(r, c)


@given(polys(max_deg=4), half_steps)
@settings(max_examples=100)
def test_shift_matches_sympy(p, c):
    lhs = poly_to_sympy(shift(p, c))
    rhs = poly_to_sympy(p).subs(ST, ST + sp.Rational(c.numerator, c.denominator))
    assert sp.expand(lhs - rhs) == 0


def test_mul_linear_examples():
    one = VarPoly.one(T)
    t = VarPoly.monomial(T, 1)
    assert mul_linear(one, 1, 2 * A) == VarPoly(T, [2 * A, 1])
    assert mul_linear(t, 1, -1) == t_poly(0, -1, 1)


@given(polys())
def test_mul_linear_by_one(p):
    assert mul_linear(p, 0, 1) == p


@given(polys(), scalars(max_terms=2), half_steps)
@settings(max_examples=200)
def test_shift_of_product_with_linear_factor(p, b, c):
    # (t + b) p(t) shifted by c equals (t + c + b) p(t + c)
    assert shift(mul_linear(p, 1, b), c) == mul_linear(shift(p, c), 1, b + c)


def test_retag_examples():
    p = VarPoly(X, [1, 1])
    assert retag(p, Y) == VarPoly(Y, [1, 1])
    assert retag(p, X) == p
    assert retag(retag(p, Y), X) == p


def test_different_variables_do_not_mix():
    with pytest.raises(ValueError):
        VarPoly(X, [1]) + VarPoly(Y, [1])


def test_rescale_substitutes_scaled_variable():
    p = VarPoly(T, [1, 2, 3])
    assert rescale(p, Fraction(1, 2)) == VarPoly(T, [1, 1, Fraction(3, 4)])
    assert rescale(p, Q, X) == VarPoly(X, [1, 2 * Q, 3 * Q**2])


def test_degree_cap():
    VarPoly.monomial(T, DEGREE_CAP)
    with pytest.raises(DegreeOverflow):
        VarPoly.monomial(T, DEGREE_CAP + 1)
    with pytest.raises(DegreeOverflow):
        VarPoly.monomial(T, 20) * VarPoly.monomial(T, 20)


def test_zero_polynomial_degree():
    assert VarPoly.zero(T).degree == float("-inf")
    assert t_poly(0, 0).is_zero()


@given(polys(max_deg=4))
@settings(max_examples=300)
def test_print_parse_round_trip(p):
    assert parse_poly(str(p), T) == p


def test_printing():
    assert str(t_poly(0, 1)) == "t"
    assert str(VarPoly(X, [Q**2 * A, Q**2])) == "q^2*(x+a)"
    assert str(t_poly(-1, 0, 3)) == "3*t^2 - 1"


def test_half_integers():
    assert str(HalfInt.of(Fraction(3, 2))) == "3/2"
    assert HalfInt.of(1) + HalfInt.of(Fraction(1, 2)) == HalfInt(3)
    with pytest.raises(ValueError):
        HalfInt.of(Fraction(1, 3))
    with pytest.raises(ValueError):
        int(HalfInt(1))
