"""Searching for intertwiners between specialized modules.

The search solves for every degree-bounded linear map that commutes with
the generators in a window.  Isomorphic modules give a line of solutions,
non-isomorphic ones give nothing.
"""

from __future__ import annotations

from fractions import Fraction

from supervir import Family, ModuleSpec, QuadRat, SpecPoint, intertwiner_search
from supervir.morphisms import big_phi, proportional


def ramond(q0, a0):
    return ModuleSpec.specialized(Family.RAMOND, SpecPoint(q0, a0))


# points are (q0, alpha0) with lambda = q0^2; q0 = -1 gives lambda = 1
# again, so that module is the base module itself
base = ramond(1, 1)
for other in (ramond(1, 1), ramond(1, 2), ramond(QuadRat(0, 1), 1), ramond(-1, 1)):
    maps = intertwiner_search(base, other, window=2, max_deg=3)
    print(f"{base} -> {other}: dimension {len(maps)}")

# Omega_NS(q0^2, a0) and Omega_R(q0, a0) are isomorphic through Phi
ns = ModuleSpec.specialized(Family.NS, SpecPoint(Fraction(1, 2), 3))
target = ModuleSpec.ramond_at_root(ns)
(m,) = intertwiner_search(ns, target, window=2, max_deg=3)
print(f"{ns} -> {target}: one map, proportional to Phi: {proportional(m, big_phi(ns), 3)}")
for key in sorted(m.matrix)[:4]:
    print("   ", key, "->", m.matrix[key])
