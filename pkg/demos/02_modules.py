"""The modules Omega_R(lambda, alpha) and Omega_NS(lambda, alpha).

Ramond vectors are written f(t) + x*g(t) with t = x^2; NS vectors are
f(x) + g(y).  Scalars live in Q(sqrt2)[a][q, 1/q] with lambda = q^2 and
alpha = a, so everything below is exact and symbolic.
"""

from __future__ import annotations

from fractions import Fraction

from supervir import Family, G, L, ModuleSpec, act, check_module_axioms
from supervir.syntax import parse_vector

R = ModuleSpec.symbolic(Family.RAMOND)
NS = ModuleSpec.symbolic(Family.NS)

one = parse_vector("[even: 1 | odd: 0]")
print("L2 . 1        =", act(L(2), one, R))
print("G-1 . x*t     =", act(G(-1), parse_vector("[even: 0 | odd: t]"), R))
print("L0 . L0 . 1   =", act(L(0), act(L(0), one, R), R))

y_one = parse_vector("[even: 0 | odd: 1]", Family.NS)
print("G1/2 . 1_odd  =", act(G(Fraction(1, 2)), y_one, NS))
print("G3/2 . x      =", act(G(Fraction(3, 2)), parse_vector("[even: x | odd: 0]"), NS))

# the action really is a module action: [a,b].v equals the graded commutator
for spec in (R, NS):
    print(check_module_axioms(spec, 2, 3).summary(), "on", spec)

# Omega_R(lambda, a) is the twist of Omega_R(1, a) by sigma_lambda
untwisted = ModuleSpec(Family.RAMOND, 1, R.alpha)
twisted = untwisted.twisted()
v = parse_vector("[even: t^2 | odd: 3]")
print("plain  L1 . v =", act(L(1), v, R))
print("twist  L1 . v =", act(L(1), v, twisted))

# restricting through NS -> R turns a Ramond module into an NS-module
print("NS L1 on Omega_R|NS:", act(L(1, Family.NS), one, R.restricted()))
