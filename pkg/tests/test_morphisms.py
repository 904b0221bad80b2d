from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import ns, polys, ramond
from supervir.algebra import Family
from supervir.errors import DegreeOverflow, FamilyMismatch, NotInSubmodule
from supervir.modules import ModuleSpec, monomial_basis, parity_flip
from supervir.morphisms import (
    apply_map,
    big_phi,
    big_phi_inverse,
    identity_map,
    intertwiner_search,
    matrix_of,
    proportional,
    psi,
    psi_inverse,
    small_phi,
    small_phi_inverse,
    verify_intertwiner,
)
from supervir.poly import VarPoly, VarTag
from supervir.scalar import ONE, Q, W, SpecPoint

T, X, Y = VarTag.T, VarTag.X, VarTag.Y
half = Fraction(1, 2)
R0 = ModuleSpec.symbolic(Family.RAMOND, alpha=0)
NS0 = ModuleSpec.symbolic(Family.NS, alpha=0)
NSA = ModuleSpec.symbolic(Family.NS)


def spec_at(family, q0, a0):
    return ModuleSpec.specialized(family, SpecPoint(q0, a0))


def test_small_phi_example():
    v = ramond(VarPoly.monomial(T, 1))
    assert apply_map(small_phi(R0), v) == parity_flip(ramond(None, ONE))


def test_psi_example():
    v = ns(VarPoly.monomial(X, 1))
    assert apply_map(psi(NS0), v) == parity_flip(ns(None, W * half * Q**-1))


def test_big_phi_example():
    got = apply_map(big_phi(NSA), ns(None, ONE))
    assert got == ramond(None, Q * W * half)


def test_big_phi_rescales_even_part():
    # f(x) -> f(t/2)
    got = apply_map(big_phi(NSA), ns(VarPoly(X, [1, 2, 4])))
    assert got == ramond(VarPoly(T, [1, 1, 1]))


def test_maps_outside_submodule_rejected():
    with pytest.raises(NotInSubmodule):
        apply_map(small_phi(R0), ramond(ONE))
    with pytest.raises(NotInSubmodule):
        apply_map(psi(NS0), ns(ONE))


def test_submodule_maps_need_alpha_zero():
    with pytest.raises(ValueError):
        small_phi(ModuleSpec.symbolic(Family.RAMOND))
    with pytest.raises(ValueError):
        psi(NSA)


@given(polys(T, 4), polys(T, 4))
@settings(max_examples=100)
def test_small_phi_round_trip(f, h):
    v = ramond(VarPoly(T, (0,) + f.coeffs) if f.coeffs else f, h)
    m = small_phi(R0)
    back = apply_map(small_phi_inverse(m.codomain), apply_map(m, v))
    assert back == v


@given(polys(X, 4), polys(Y, 4))
@settings(max_examples=100)
def test_psi_round_trip(f, h):
    v = ns(VarPoly(X, (0,) + f.coeffs) if f.coeffs else f, h)
    m = psi(NS0)
    assert apply_map(psi_inverse(m.codomain), apply_map(m, v)) == v


@given(polys(X, 4), polys(Y, 4))
@settings(max_examples=100)
def test_big_phi_round_trip(f, h):
    v = ns(f, h)
    m = big_phi(NSA)
    assert apply_map(big_phi_inverse(m.codomain), apply_map(m, v)) == v


@pytest.mark.parametrize(
    "make",
    [
        lambda: small_phi(R0),
        lambda: small_phi_inverse(small_phi(R0).codomain),
        lambda: psi(NS0),
        lambda: psi_inverse(psi(NS0).codomain),
        lambda: big_phi(NSA),
        lambda: big_phi_inverse(big_phi(NSA).codomain),
    ],
    ids=["phi", "phi-inv", "psi", "psi-inv", "Phi", "Phi-inv"],
)
def test_isomorphisms_verify(make):
    r = verify_intertwiner(make(), 2, 3)
    assert r.passed, r.witnesses[:1]
    assert r.details["bijective"]


def test_identity_with_mismatched_alpha_fails_with_witness():
    a = ModuleSpec.symbolic(Family.RAMOND, alpha=1)
    b = ModuleSpec.symbolic(Family.RAMOND, alpha=2)
    r = verify_intertwiner(identity_map(a, b), 1, 2)
    assert r.status == "fail"
    w = r.witnesses[0]
    assert w["lhs"] != w["rhs"]


def test_search_finds_identity():
    a = spec_at(Family.RAMOND, 1, 1)
    maps = intertwiner_search(a, a, 2, 3)
    assert len(maps) == 1
    assert proportional(maps[0], identity_map(a, a), 3)


def test_search_results_reverify():
    a = spec_at(Family.NS, 2, 3)
    b = ModuleSpec.ramond_at_root(a)
    (m,) = intertwiner_search(a, b, 2, 3)
    assert verify_intertwiner(m, 2, 3).passed
    assert proportional(m, big_phi(a), 3)


def test_search_distinguishes_parameters():
    a = spec_at(Family.RAMOND, 1, 1)
    assert intertwiner_search(a, spec_at(Family.RAMOND, 1, 2), 2, 3) == []
    assert intertwiner_search(a, spec_at(Family.RAMOND, 2, 1), 2, 3) == []


def test_search_symbolic_identity():
    a = ModuleSpec.symbolic(Family.RAMOND)
    maps = intertwiner_search(a, a, 1, 2)
    assert len(maps) == 1 and maps[0].parity == 0


def test_search_rejects_mixed_algebras():
    with pytest.raises(FamilyMismatch):
        intertwiner_search(spec_at(Family.RAMOND, 1, 1), spec_at(Family.NS, 1, 1), 1, 2)


def test_search_size_guard():
    a = spec_at(Family.RAMOND, 1, 1)
    with pytest.raises(DegreeOverflow):
        intertwiner_search(a, a, 1, 30)


def test_matrix_of_agrees_with_rule():
    m = big_phi(NSA)
    tab = matrix_of(m, 3)
    for v in monomial_basis(Family.NS, 3):
        assert apply_map(tab, v) == apply_map(m, v)
    assert len(tab.describe()["matrix"]) == 8


def test_lambda_root_used_by_big_phi():
    spec = spec_at(Family.NS, 2, 1)
    assert big_phi(spec).codomain.lam == 2
    assert big_phi(spec).codomain.variant == "restricted"
