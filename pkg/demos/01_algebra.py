"""Brackets in the Ramond and Neveu-Schwarz algebras."""

from __future__ import annotations

from fractions import Fraction

from supervir import Family, G, L, bracket, check_super_jacobi, embed_sigma, twist_sigma_lambda

half = Fraction(1, 2)

# Ramond: integer G-indices.  L is even, G is odd.
print("[L2, L-1]    =", bracket(L(2), L(-1)))
print("[L1, G3]     =", bracket(L(1), G(3)))
print("[G0, G0]     =", bracket(G(0), G(0)))

# Neveu-Schwarz: half-integer G-indices, so L needs its family spelled out
print("[L1, G1/2]   =", bracket(L(1, Family.NS), G(half)))
print("[G1/2, G-1/2] =", bracket(G(half), G(-half)))

# sigma_lambda rescales by powers of lambda = q^2; half-integer powers are
# powers of q itself
print("sigma_lambda(G(1/2)) =", twist_sigma_lambda(G(half)))
print("sigma_lambda(L(-2))  =", twist_sigma_lambda(L(-2)))

# NS embeds in Ramond by doubling indices
print("sigma(L(1))   =", embed_sigma(L(1, Family.NS)))
print("sigma(G(1/2)) =", embed_sigma(G(half)))
print("sigma([G1/2, G1/2]) =", embed_sigma(bracket(G(half), G(half))))

# every basis triple with |index| <= 3 satisfies the graded Jacobi identity
report = check_super_jacobi(3)
print(report.summary())
