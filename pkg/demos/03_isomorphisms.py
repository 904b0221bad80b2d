"""The three module isomorphisms, checked on a finite grid."""

from __future__ import annotations

from supervir import Family, ModuleSpec, verify_intertwiner
from supervir.morphisms import apply_map, big_phi, identity_map, psi, small_phi
from supervir.syntax import parse_vector

R0 = ModuleSpec.symbolic(Family.RAMOND, alpha=0)
NS0 = ModuleSpec.symbolic(Family.NS, alpha=0)
NSA = ModuleSpec.symbolic(Family.NS)

# phi: Xi -> Pi(Omega_R(lambda, 1/2)), t*f -> x*f and x*f -> f
phi = small_phi(R0)
print("phi(t)       =", apply_map(phi, parse_vector("[even: t | odd: 0]")))
print("phi(x*(1+t)) =", apply_map(phi, parse_vector("[even: 0 | odd: 1+t]")))

# psi: Gamma -> Pi(Omega_NS(lambda, 1/2)); note 1/sqrt(2 lambda) = w/(2q)
m = psi(NS0)
print("psi(x)       =", apply_map(m, parse_vector("[even: x | odd: 0]")))

# Phi: Omega_NS(lambda, a) -> Omega_R(sqrt(lambda), a) with NS acting via sigma
Phi = big_phi(NSA)
print("Phi(1_odd)   =", apply_map(Phi, parse_vector("[even: 0 | odd: 1]", Family.NS)))
print("Phi(x^2)     =", apply_map(Phi, parse_vector("[even: x^2 | odd: 0]")))

for name, mp in (("phi", phi), ("psi", m), ("Phi", Phi)):
    r = verify_intertwiner(mp, 2, 3)
    print(f"{name}: {r.summary()}, bijective on the range: {r.details['bijective']}")

# a negative control: the identity does not intertwine different alphas
a1 = ModuleSpec.symbolic(Family.RAMOND, alpha=1)
a2 = ModuleSpec.symbolic(Family.RAMOND, alpha=2)
r = verify_intertwiner(identity_map(a1, a2), 1, 1)
print(r.summary())
print("first witness:", r.witnesses[0])
