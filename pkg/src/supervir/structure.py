"""Submodule structure probes.

Membership and closure for the two distinguished submodules

* ``Xi``    of Omega_R(lambda, 0): even part in x^2 C[x^2], odd part arbitrary,
* ``Gamma`` of Omega_NS(lambda, 0): even part in x C[x], odd part arbitrary,

truncated cyclic spans at specialized parameters (simplicity evidence), and
the rank checks showing the modules are free over C[L_0] (resp. over the
Cartan subalgebra spanned by L_0 and G_0).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Family, Generator, basis
from .errors import DegreeOverflow, FamilyMismatch
from .linalg import Echelon, rank
from .modules import (
    ModuleSpec,
    ModuleVector,
    act,
    monomial_basis,
    specialize_vector,
    vector_class,
)
from .poly import DEGREE_CAP, HalfInt, VarPoly
from .report import VerificationReport, timed
from .scalar import ONE, QuadRat, Scalar, SpecPoint

__all__ = [
    "SubmodulePredicate",
    "XI",
    "GAMMA",
    "DEFAULT_POINTS",
    "membership",
    "check_closure",
    "SpanBasis",
    "cyclic_span",
    "probe_simplicity",
    "probe_submodule",
    "freeness_check",
]

# Fixed evaluation points (q0, alpha0) for simplicity evidence; lambda0 = q0^2.
DEFAULT_POINTS = (
    SpecPoint(1, 1),
    SpecPoint(2, -1),
    SpecPoint(Fraction(1, 2), 3),
    SpecPoint(QuadRat(0, 1), Fraction(1, 3)),
    SpecPoint(-3, Fraction(-5, 2)),
)


@dataclass(frozen=True)
class SubmodulePredicate:
    name: str
    family: Family

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.name not in ("Xi", "Gamma", "FullSpace"):
            raise ValueError(f"unknown submodule {self.name!r}")

    def __call__(self, v: ModuleVector) -> bool:
        return membership(self, v)


XI = SubmodulePredicate("Xi", Family.RAMOND)
GAMMA = SubmodulePredicate("Gamma", Family.NS)


def membership(p: SubmodulePredicate, v: ModuleVector) -> bool:
    if v.family is not p.family:
        raise FamilyMismatch(f"{p.name} lives in a {p.family} module, got a {v.family} vector")
    if p.name == "FullSpace":
        return True
    return not v.even.coeff(0)


def check_closure(
    p: SubmodulePredicate, window: int, max_deg: int, spec: ModuleSpec | None = None
) -> VerificationReport:
    """Generators map the submodule into itself, and send 1 into it
    (so the quotient by it is the trivial one-dimensional module)."""
    if spec is None:
        spec = ModuleSpec.symbolic(p.family, alpha=0)
    if spec.alpha:
        raise ValueError("closure is checked at alpha = 0")
    if spec.family is not p.family:
        raise FamilyMismatch(f"{p.name} needs a {p.family} module")
    report = VerificationReport(
        "closure",
        parameters={"submodule": p.name, **spec.describe()},
        bounds={"window": window, "max_deg": max_deg},
    )
    gens = basis(spec.acting_family, window)
    sub = [v for v in monomial_basis(p.family, max_deg) if membership(p, v)]
    one = vector_class(p.family)(ONE)
    with timed(report):
        for v in sub:
            for g in gens:
                gv = act(g, v, spec)
                report.record(
                    membership(p, gv),
                    {"inputs": {"g": str(g), "v": str(v)}, "lhs": str(gv), "rhs": f"in {p.name}"},
                )
        for g in gens:
            g1 = act(g, one, spec)
            report.record(
                membership(p, g1),
                {"inputs": {"g": str(g), "v": str(one)}, "lhs": str(g1), "rhs": f"in {p.name} (quotient)"},
            )
    return report


def _coords(v: ModuleVector) -> dict:
    out = {}
    for i in (0, 1):
        for k, c in enumerate(v.component(i).coeffs):
            if c:
                out[(i, k)] = c.constant_value()
    return out


def _pivot_order(key):
    # highest degree first, even before odd
    return (-key[1], key[0])


class SpanBasis:
    """Reduced basis of a subspace of a specialized module carrier."""

    def __init__(self, family: Family, point: SpecPoint | None = None):
        self.family = Family(family)
        self.point = point
        self._ech = Echelon(key=_pivot_order)

    def __len__(self):
        return len(self._ech)

    def insert(self, v: ModuleVector) -> bool:
        return self._ech.insert(_coords(v))

    def contains(self, v: ModuleVector) -> bool:
        return self._ech.contains(_coords(v))

    def rows(self) -> list:
        cls = vector_class(self.family)
        out = []
        for pivot in sorted(self._ech.rows, key=_pivot_order, reverse=True):
            row = self._ech.rows[pivot]
            comps = [[], []]
            for (i, k), c in row.items():
                comp = comps[i]
                comp.extend([QuadRat(0)] * (k + 1 - len(comp)))
                comp[k] = c
            te, to = cls.tags
            out.append(cls(VarPoly(te, comps[0]), VarPoly(to, comps[1])))
        return out

    def reaches_constant(self) -> bool:
        return self.contains(vector_class(self.family)(ONE))


def cyclic_span(
    seed: ModuleVector,
    spec: ModuleSpec,
    window: int = 2,
    max_words: int = 6,
    max_deg: int = 8,
) -> SpanBasis:
    """Span of ``w . seed`` over words ``w`` of length <= max_words in the
    generators of ``|index| <= window``, dropping vectors of degree above
    ``max_deg``.  Breadth-first and deterministic."""
    if spec.point is None:
        raise ValueError("cyclic_span needs a specialized module")
    if max_deg > DEGREE_CAP:
        raise DegreeOverflow(f"max_deg {max_deg} exceeds the cap of {DEGREE_CAP}")
    if seed.is_zero():
        raise ValueError("seed must be nonzero")
    if any(not c.is_constant() for i in (0, 1) for c in seed.component(i).coeffs):
        seed = specialize_vector(seed, spec.point)
    gens = basis(spec.acting_family, window)
    span = SpanBasis(spec.family, spec.point)
    if seed.degree > max_deg:
        return span
    span.insert(seed)
    frontier = [seed]
    for _ in range(max_words):
        nxt = []
        for v in frontier:
            for g in gens:
                gv = act(g, v, spec)
                if gv.is_zero() or gv.degree > max_deg:
                    continue
                if span.insert(gv):
                    nxt.append(gv)
        if not nxt:
            break
        frontier = nxt
    return span


def _seeds(family: Family, max_seed_deg: int) -> list:
    return monomial_basis(family, max_seed_deg)


def probe_simplicity(
    family,
    points=DEFAULT_POINTS,
    window: int = 2,
    max_words: int = 6,
    max_deg: int = 8,
    max_seed_deg: int = 3,
    via_sigma: bool = False,
) -> VerificationReport:
    """Evidence that the module is simple: from every monomial seed the
    truncated cyclic span contains the constant vector 1, which generates
    the whole module.  ``via_sigma`` lets NS act on the Ramond carrier
    through the embedding NS -> R."""
    family = Family(family)
    carrier = Family.RAMOND if via_sigma else family
    report = VerificationReport(
        "simplicity",
        parameters={
            "family": str(family),
            "via_sigma": via_sigma,
            "points": [str(p) for p in points],
        },
        bounds={"window": window, "max_words": max_words, "max_deg": max_deg, "max_seed_deg": max_seed_deg},
        evidence_only=True,
    )
    with timed(report):
        for p in points:
            spec = ModuleSpec.specialized(carrier, p)
            if via_sigma:
                spec = spec.restricted()
            for seed in _seeds(carrier, max_seed_deg):
                span = cyclic_span(seed, spec, window, max_words, max_deg)
                report.record(
                    span.reaches_constant(),
                    {
                        "inputs": {"point": str(p), "seed": str(seed)},
                        "lhs": f"span dimension {len(span)}",
                        "rhs": "contains 1",
                    },
                )
    if report.status == "pass":
        report.status = "evidence"
    report.details["criterion"] = "constant vector 1 reached from every seed"
    return report


def probe_submodule(
    p: SubmodulePredicate,
    point: SpecPoint = SpecPoint(1, 0),
    seed: ModuleVector | None = None,
    window: int = 2,
    max_words: int = 8,
    max_deg: int = 8,
) -> VerificationReport:
    """Cyclic span of a seed inside the submodule never leaves it (alpha = 0)."""
    if point.alpha0:
        raise ValueError("the submodule probe runs at alpha0 = 0")
    cls = vector_class(p.family)
    if seed is None:
        seed = cls(VarPoly.monomial(cls.tags[0], 1))
    spec = ModuleSpec.specialized(p.family, point)
    report = VerificationReport(
        "submodule",
        parameters={"submodule": p.name, "point": str(point), "seed": str(seed)},
        bounds={"window": window, "max_words": max_words, "max_deg": max_deg},
        evidence_only=True,
    )
    with timed(report):
        span = cyclic_span(seed, spec, window, max_words, max_deg)
        for row in span.rows():
            report.record(
                membership(p, row),
                {"inputs": {"seed": str(seed)}, "lhs": str(row), "rhs": f"in {p.name}"},
            )
    report.details["span_dimension"] = len(span)
    report.details["reaches_constant"] = span.reaches_constant()
    report.details["witness_rows"] = [str(r) for r in span.rows()]
    if report.status == "pass":
        report.status = "evidence"
    return report


def freeness_check(spec: ModuleSpec, max_deg: int) -> VerificationReport:
    """Ramond: {L_0^k 1, G_0 L_0^k 1} is a basis of the degree <= max_deg
    range.  NS: {L_0^k 1_even, L_0^k 1_odd} likewise."""
    report = VerificationReport(
        "freeness",
        parameters=spec.describe(),
        bounds={"max_deg": max_deg},
    )
    fam = spec.acting_family
    cls = vector_class(spec.family)
    L0 = Generator("L", HalfInt(0), fam)
    with timed(report):
        if spec.family is Family.RAMOND and fam is Family.RAMOND:
            G0 = Generator("G", HalfInt(0), fam)
            starts = [cls(ONE)]
            post = [None, G0]
        else:
            starts = [cls(ONE), cls(None, ONE)]
            post = [None]
        vectors = []
        for start in starts:
            v = start
            for k in range(max_deg + 1):
                for extra in post:
                    vectors.append(v if extra is None else act(extra, v, spec))
                v = act(L0, v, spec)
        keys = [(i, k) for i in (0, 1) for k in range(max_deg + 1)]
        in_range = all(v.degree <= max_deg for v in vectors)
        report.record(in_range, {"inputs": {"check": "degree range"}, "lhs": "degrees", "rhs": f"<= {max_deg}"})
        matrix = [[v.component(i).coeff(k) for i, k in keys] for v in vectors]
        r = rank(matrix)
        ok = r == len(vectors) == len(keys)
        report.record(ok, {"inputs": {"check": "basis"}, "lhs": f"rank {r} of {len(vectors)} vectors", "rhs": f"{len(keys)} monomials"})
        report.details["rank"] = r
        report.details["expected_rank"] = len(keys)
        report.details["free_rank"] = 1 if spec.family is Family.RAMOND else 2
    return report
