"""Submodules at alpha = 0 and simplicity evidence elsewhere."""

from __future__ import annotations

from supervir import GAMMA, XI, Family, ModuleSpec, SpecPoint, check_closure, cyclic_span, probe_simplicity
from supervir.structure import freeness_check
from supervir.syntax import parse_vector

# Xi (even part without constant term, all of the odd part) is closed under
# the Ramond action at alpha = 0, and so is Gamma for NS
print(check_closure(XI, 3, 4).summary())
print(check_closure(GAMMA, 3, 4).summary())

# at alpha = 0 the cyclic span of t never picks up the constant 1 ...
t = parse_vector("[even: t | odd: 0]")
span = cyclic_span(t, ModuleSpec.specialized(Family.RAMOND, SpecPoint(1, 0)), max_words=6)
print("alpha=0: span dimension", len(span), "reaches 1:", span.reaches_constant())
for row in span.rows()[:4]:
    print("   ", row)

# ... but at alpha = 1 it does, and 1 generates the whole module
span = cyclic_span(t, ModuleSpec.specialized(Family.RAMOND, SpecPoint(1, 1)), max_words=4)
print("alpha=1: span dimension", len(span), "reaches 1:", span.reaches_constant())

# the probe repeats this from every monomial seed at several points
points = [SpecPoint(1, 1), SpecPoint(2, -1)]
print(probe_simplicity(Family.RAMOND, points, max_seed_deg=2).summary())
print(probe_simplicity(Family.NS, points, max_seed_deg=2, via_sigma=True).summary())

# both modules are free over the Cartan part; rank 1 (Ramond) and 2 (NS)
for fam in (Family.RAMOND, Family.NS):
    r = freeness_check(ModuleSpec.symbolic(fam), 4)
    print(r.summary(), "free rank", r.details["free_rank"])
