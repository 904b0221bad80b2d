from __future__ import annotations

from fractions import Fraction

import sympy as sp
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from supervir.modules import NSVector, RamondVector
from supervir.poly import VarPoly, VarTag
from supervir.scalar import QuadRat, Scalar

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

SQ, SA, ST, SX, SY = sp.symbols("q a t x y")

small_fracs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
quadrats = st.builds(QuadRat, small_fracs, small_fracs)
nonzero_quadrats = quadrats.filter(bool)


@st.composite
def scalars(draw, max_terms=4, q_range=3, a_max=2):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        key = (draw(st.integers(-q_range, q_range)), draw(st.integers(0, a_max)))
        terms[key] = draw(quadrats)
    return Scalar(terms)


@st.composite
def polys(draw, var=VarTag.T, max_deg=3):
    n = draw(st.integers(0, max_deg + 1))
    return VarPoly(var, [draw(scalars(max_terms=2)) for _ in range(n)])


def quad_to_sympy(c: QuadRat):
    return sp.Rational(c.a.numerator, c.a.denominator) + sp.Rational(
        c.b.numerator, c.b.denominator
    ) * sp.sqrt(2)


def scalar_to_sympy(s: Scalar):
    return sp.Add(*[quad_to_sympy(c) * SQ**eq * SA**ea for (eq, ea), c in s.items()])


def poly_to_sympy(p: VarPoly, var=None):
    v = var if var is not None else {VarTag.T: ST, VarTag.X: SX, VarTag.Y: SY}[p.var]
    return sp.Add(*[scalar_to_sympy(c) * v**k for k, c in enumerate(p.coeffs)])


def vector_to_sympy(v):
    return (sp.expand(poly_to_sympy(v.even)), sp.expand(poly_to_sympy(v.odd)))


def same(a, b) -> bool:
    return all(sp.expand(x - y) == 0 for x, y in zip(a, b))


# Direct transcription of the action formulas, lambda = q^2, on sympy
# expressions.  Ramond vectors are (even(t), odd(t)) with t = x^2.
def oracle_ramond(kind, m, vec, alpha=SA):
    f, g = vec
    lam = SQ ** (2 * m)
    if kind == "L":
        even = lam * (ST + m * alpha) * f.subs(ST, ST + m)
        odd = lam * (ST + m * alpha + sp.Rational(m, 2)) * g.subs(ST, ST + m)
    else:
        odd = lam * f.subs(ST, ST + m)
        even = lam * (ST + 2 * m * alpha) * g.subs(ST, ST + m)
    return (sp.expand(even), sp.expand(odd))


def oracle_ns(kind, r, vec, alpha=SA):
    f, g = vec
    r = sp.Rational(r)
    if kind == "L":
        lam = SQ ** (2 * r)
        even = lam * (SX + r * alpha) * f.subs(SX, SX + r)
        odd = lam * (SY + r * (alpha + sp.Rational(1, 2))) * g.subs(SY, SY + r)
    else:
        odd = SQ ** (2 * r - 1) * f.subs(SX, SY + r)
        even = SQ ** (2 * r + 1) * (SX + 2 * r * alpha) * g.subs(SY, SX + r)
    return (sp.expand(even), sp.expand(odd))


def ramond(even=None, odd=None):
    return RamondVector(even, odd)


def ns(even=None, odd=None):
    return NSVector(even, odd)


def t_poly(*coeffs):
    return VarPoly(VarTag.T, coeffs)


def frac(a, b=1):
    return Fraction(a, b)
