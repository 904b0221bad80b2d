from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from supervir.algebra import (
    AlgebraElement,
    Family,
    G,
    Generator,
    L,
    basis,
    bracket,
    check_super_jacobi,
    embed_sigma,
    jacobi_sum,
    twist_sigma_lambda,
)
from supervir.errors import FamilyMismatch
from supervir.poly import HalfInt
from supervir.scalar import Q, W

R, NS = Family.RAMOND, Family.NS
half = Fraction(1, 2)


def el(g, c=1):
    return AlgebraElement.of(g, c)


def test_bracket_examples():
    assert bracket(L(2), L(-1)) == el(L(1), 3)
    assert bracket(L(1, NS), G(half)).is_zero()
    assert bracket(G(0), G(0)) == el(L(0), 2)
    assert bracket(G(half), G(-half)) == el(L(0, NS), 2)


def test_generator_index_must_match_family():
    with pytest.raises(FamilyMismatch):
        Generator("G", HalfInt(1), R)
    with pytest.raises(FamilyMismatch):
        Generator("G", HalfInt(2), NS)
    with pytest.raises(ValueError):
        Generator("L", HalfInt(1), NS)


def test_families_do_not_mix():
    with pytest.raises(FamilyMismatch):
        bracket(L(1), L(1, NS))


def test_parity():
    assert L(3).parity == 0 and G(3).parity == 1
    assert (el(G(0)) + el(G(1), Q)).parity == 1
    assert (el(G(0)) + el(L(1))).parity is None


def test_printing():
    assert str(el(L(1), 2) + el(G(0), Q)) == "2*L(1) + q*G(0)"


def pairs(family, window):
    return itertools.product(basis(family, window), repeat=2)


@pytest.mark.parametrize("family", [R, NS])
def test_super_antisymmetry(family):
    for a, b in pairs(family, 6):
        sign = -1 if a.parity * b.parity else 1
        assert bracket(a, b) == bracket(b, a).scale(-sign)


@pytest.mark.parametrize("family", [R, NS])
def test_bracket_respects_grading(family):
    for a, b in pairs(family, 6):
        c = bracket(a, b)
        for g, _ in c.items():
            assert g.parity == (a.parity + b.parity) % 2
            assert g.index == a.index + b.index


@pytest.mark.parametrize("family", [R, NS])
def test_jacobi_window_three(family):
    assert check_super_jacobi(3, family).passed


def test_jacobi_triple_of_l():
    assert jacobi_sum(L(1), L(2), L(3)).is_zero()


def test_sigma_lambda_examples():
    assert twist_sigma_lambda(L(1)) == el(L(1), Q**2)
    assert twist_sigma_lambda(L(0)) == el(L(0))
    assert twist_sigma_lambda(G(half)) == el(G(half), Q)


def test_sigma_examples():
    assert embed_sigma(L(1, NS)) == el(L(2), half)
    assert embed_sigma(G(half)) == el(G(1), W * half)
    assert embed_sigma(bracket(G(half), G(half))) == el(L(2))


@pytest.mark.parametrize("family", [R, NS])
def test_sigma_lambda_is_homomorphism(family):
    for a, b in pairs(family, 4):
        lhs = twist_sigma_lambda(bracket(a, b))
        rhs = bracket(twist_sigma_lambda(a), twist_sigma_lambda(b))
        assert lhs == rhs


def test_sigma_is_homomorphism():
    for a, b in pairs(NS, 4):
        assert embed_sigma(bracket(a, b)) == bracket(embed_sigma(a), embed_sigma(b))


def test_sigma_rejects_ramond():
    with pytest.raises(FamilyMismatch):
        embed_sigma(L(1))


def test_basis_order():
    assert [str(g) for g in basis(R, 1)] == ["L(-1)", "G(-1)", "L(0)", "G(0)", "L(1)", "G(1)"]
    assert [str(g) for g in basis(NS, 1)] == ["L(-1)", "G(-1/2)", "L(0)", "G(1/2)", "L(1)"]


def test_jacobi_report_carries_witness_on_failure():
    r = check_super_jacobi(1, R)
    assert r.status == "pass" and r.checked == 6**3 and not r.witnesses
