"""The module families Omega_R(lambda, alpha) and Omega_NS(lambda, alpha).

Ramond vectors live in C[x^2] + x C[x^2] and are stored as a pair of
polynomials in ``t = x^2``: ``even(t) + x * odd(t)``.  Neveu-Schwarz vectors
live in C[x] + C[y] and are stored as ``(even(x), odd(y))``.

A ``ModuleSpec`` fixes the parameters and how the algebra acts:

* ``plain``      the defining action of the carrier's own algebra,
* ``twisted``    ``a o v = sigma_mu(a) . v`` for the scaling automorphism,
* ``restricted`` NS generators acting on a Ramond carrier through the
  embedding NS -> R.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .algebra import (
    AlgebraElement,
    Family,
    Generator,
    basis,
    bracket,
    embed_sigma,
    twist_sigma_lambda,
)
from .errors import FamilyMismatch
from .poly import VarPoly, VarTag, mul_linear, retag, shift
from .report import VerificationReport, timed
from .scalar import ONE, Q, A, ZERO, QuadRat, Scalar, SpecPoint, as_scalar, specialize

__all__ = [
    "ModuleVector",
    "RamondVector",
    "NSVector",
    "ModuleSpec",
    "act_ramond",
    "act_ns",
    "act",
    "parity_flip",
    "monomial_basis",
    "specialize_vector",
    "check_module_axioms",
]


class ModuleVector:
    """A vector of one of the two carriers.

    ``even``/``odd`` are the carrier's natural components.  ``flipped``
    records the parity-change functor: the data is untouched, only which
    component is labelled even changes.
    """

    family: Family
    tags: tuple

    __slots__ = ("even", "odd", "flipped")

    def __init__(self, even=None, odd=None, flipped: bool = False):
        te, to = self.tags
        self.even = self._coerce(even, te)
        self.odd = self._coerce(odd, to)
        self.flipped = bool(flipped)

    @staticmethod
    def _coerce(p, tag):
        if p is None:
            return VarPoly.zero(tag)
        if isinstance(p, VarPoly):
            if p.var != tag:
                if p.degree <= 0:
                    return retag(p, tag)
                raise FamilyMismatch(f"expected a polynomial in {tag}, got one in {p.var}")
            return p
        return VarPoly(tag, (as_scalar(p),))

    def _new(self, even, odd):
        return type(self)(even, odd, self.flipped)

    def component(self, i: int) -> VarPoly:
        return self.odd if i else self.even

    def is_zero(self) -> bool:
        return self.even.is_zero() and self.odd.is_zero()

    def __bool__(self):
        return not self.is_zero()

    @property
    def parity(self):
        """Parity label of a homogeneous nonzero vector (None if mixed or zero)."""
        if self.odd.is_zero() and not self.even.is_zero():
            return int(self.flipped)
        if self.even.is_zero() and not self.odd.is_zero():
            return 1 - int(self.flipped)
        return None

    @property
    def degree(self):
        return max(self.even.degree, self.odd.degree)

    def __eq__(self, other):
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return (
            self.family is other.family
            and self.flipped == other.flipped
            and self.even == other.even
            and self.odd == other.odd
        )

    def __hash__(self):
        return hash((self.family, self.flipped, self.even, self.odd))

    def _check(self, other):
        if not isinstance(other, ModuleVector) or other.family is not self.family:
            raise FamilyMismatch("cannot combine vectors of different carriers")

    def __add__(self, other):
        self._check(other)
        return self._new(self.even + other.even, self.odd + other.odd)

    def __sub__(self, other):
        self._check(other)
        return self._new(self.even - other.even, self.odd - other.odd)

    def __neg__(self):
        return self._new(-self.even, -self.odd)

    def scale(self, s) -> ModuleVector:
        return self._new(self.even.scale(s), self.odd.scale(s))

    def __mul__(self, s):
        try:
            return self.scale(s)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        return f"{type(self).__name__}({self})"

    def __str__(self):
        body = f"[even: {self.even} | odd: {self.odd}]"
        return "Pi" + body if self.flipped else body


class RamondVector(ModuleVector):
    """``even(x^2) + x*odd(x^2)``, both components polynomials in ``t``."""

    __slots__ = ()
    family = Family.RAMOND
    tags = (VarTag.T, VarTag.T)


class NSVector(ModuleVector):
    """``even(x) + odd(y)``."""

    __slots__ = ()
    family = Family.NS
    tags = (VarTag.X, VarTag.Y)


def vector_class(family: Family):
    return RamondVector if Family(family) is Family.RAMOND else NSVector


def parity_flip(v: ModuleVector) -> ModuleVector:
    """The parity-change functor on elements: pure relabelling."""
    return type(v)(v.even, v.odd, not v.flipped)


@dataclass(frozen=True)
class ModuleSpec:
    """Parameters and action variant of a module.

    ``lam`` must be a unit of the scalar ring (``c * q^k``).  ``lam_root``,
    when known, is a square root of ``lam``; it is needed only for twists of
    Neveu-Schwarz modules and for maps whose constants involve sqrt(lambda).
    ``point`` is set for specialized modules (all scalars constant).
    """

    family: Family
    lam: Scalar
    alpha: Scalar
    lam_root: Scalar | None = None
    variant: str = "plain"
    twist_root: Scalar | None = None
    point: SpecPoint | None = None
    flipped: bool = False

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.variant not in ("plain", "twisted", "restricted"):
            raise ValueError(f"unknown action variant {self.variant!r}")
        if not as_scalar(self.lam).is_unit():
            raise ValueError(f"lambda must be a nonzero unit monomial, got {self.lam}")
        if self.variant == "restricted" and self.family is not Family.RAMOND:
            raise FamilyMismatch("the restricted action needs a Ramond carrier")
        if self.variant == "twisted" and self.twist_root is None:
            raise ValueError("twisted variant requires twist_root")

    @classmethod
    def symbolic(cls, family, alpha=A) -> ModuleSpec:
        """Generic module: lambda = q^2, alpha as given (default the symbol a)."""
        return cls(Family(family), Q * Q, as_scalar(alpha), lam_root=Q)

    @classmethod
    def specialized(cls, family, point: SpecPoint) -> ModuleSpec:
        q0 = Scalar.const(point.q0)
        return cls(
            Family(family), q0 * q0, Scalar.const(point.alpha0), lam_root=q0, point=point
        )

    @classmethod
    def ramond_at_root(cls, ns: ModuleSpec) -> ModuleSpec:
        """The Ramond module with lambda replaced by sqrt(lambda), acted on by
        NS through the embedding (codomain of the NS -> R isomorphism)."""
        if ns.lam_root is None:
            raise ValueError("sqrt(lambda) is not available for this module")
        return cls(
            Family.RAMOND,
            ns.lam_root,
            ns.alpha,
            variant="restricted",
            point=ns.point,
        )

    @property
    def acting_family(self) -> Family:
        return Family.NS if self.variant == "restricted" else self.family

    @property
    def is_symbolic(self) -> bool:
        return self.point is None

    def with_alpha(self, alpha) -> ModuleSpec:
        return replace(self, alpha=as_scalar(alpha))

    def twisted(self, root=Q) -> ModuleSpec:
        return replace(self, variant="twisted", twist_root=as_scalar(root))

    def restricted(self) -> ModuleSpec:
        return replace(self, variant="restricted")

    def parity_flipped(self) -> ModuleSpec:
        return replace(self, flipped=not self.flipped)

    def describe(self) -> dict:
        return {
            "family": str(self.family),
            "lambda": str(self.lam),
            "alpha": str(self.alpha),
            "variant": self.variant,
            "twist_lambda": None if self.twist_root is None else str(self.twist_root ** 2),
            "parity_flipped": self.flipped,
            "point": None if self.point is None else str(self.point),
        }

    def __str__(self):
        name = "Omega_R" if self.family is Family.RAMOND else "Omega_NS"
        text = f"{name}({self.lam},{self.alpha})"
        if self.variant == "twisted":
            text += f"^twist({self.twist_root ** 2})"
        elif self.variant == "restricted":
            text += "|NS"
        return f"Pi({text})" if self.flipped else text


def _lam_pow(spec: ModuleSpec, k: int) -> Scalar:
    return spec.lam ** k


def act_ramond(g: Generator, v: RamondVector, spec: ModuleSpec) -> RamondVector:
    """One Ramond generator on a Ramond vector."""
    if g.family is not Family.RAMOND or not isinstance(v, RamondVector):
        raise FamilyMismatch(f"{g} cannot act on a {v.family} vector in a Ramond module")
    m = int(g.index)
    lm = _lam_pow(spec, m)
    ma = spec.alpha * m
    f, h = v.even, v.odd
    if g.kind == "L":
        even = mul_linear(shift(f, m), ONE, ma).scale(lm)
        odd = mul_linear(shift(h, m), ONE, ma + Fraction(m, 2)).scale(lm)
    else:
        odd = shift(f, m).scale(lm)
        even = mul_linear(shift(h, m), ONE, ma * 2).scale(lm)
    return RamondVector(even, odd, v.flipped)


def act_ns(g: Generator, v: NSVector, spec: ModuleSpec) -> NSVector:
    """One Neveu-Schwarz generator on an NS vector."""
    if g.family is not Family.NS or not isinstance(v, NSVector):
        raise FamilyMismatch(f"{g} cannot act on a {v.family} vector in an NS module")
    f, h = v.even, v.odd
    if g.kind == "L":
        m = int(g.index)
        lm = _lam_pow(spec, m)
        even = mul_linear(shift(f, m), ONE, spec.alpha * m).scale(lm)
        odd = mul_linear(shift(h, m), ONE, (spec.alpha + Fraction(1, 2)) * m).scale(lm)
    else:
        r = g.index.value
        lo = _lam_pow(spec, (g.index.twice - 1) // 2)
        hi = _lam_pow(spec, (g.index.twice + 1) // 2)
        odd = retag(shift(f, r), VarTag.Y).scale(lo)
        even = mul_linear(retag(shift(h, r), VarTag.X), ONE, spec.alpha * (2 * r)).scale(hi)
    return NSVector(even, odd, v.flipped)


def _act_linear(elem: AlgebraElement, v: ModuleVector, spec: ModuleSpec) -> ModuleVector:
    base = act_ramond if elem.family is Family.RAMOND else act_ns
    out = type(v)(None, None, v.flipped)
    for g, c in elem.items():
        out = out + base(g, v, spec).scale(c)
    return out


def act(g, v: ModuleVector, spec: ModuleSpec) -> ModuleVector:
    """Action of a generator or algebra element, honouring the spec's variant."""
    elem = AlgebraElement.of(g) if isinstance(g, Generator) else g
    if not isinstance(elem, AlgebraElement):
        raise TypeError(f"cannot act with {g!r}")
    if v.family is not spec.family:
        raise FamilyMismatch(f"{v.family} vector given to a {spec.family} module")
    if elem.is_zero():
        return type(v)(None, None, v.flipped)
    if elem.family is not spec.acting_family:
        raise FamilyMismatch(f"{elem.family} element cannot act on {spec}")
    if spec.variant == "twisted":
        elem = twist_sigma_lambda(elem, spec.twist_root)
    elif spec.variant == "restricted":
        elem = embed_sigma(elem)
    return _act_linear(elem, v, spec)


def monomial_basis(family, max_deg: int) -> list:
    """Monomial vectors of degree <= max_deg, even component first."""
    cls = vector_class(family)
    te, to = cls.tags
    out = [cls(VarPoly.monomial(te, k), None) for k in range(max_deg + 1)]
    out += [cls(None, VarPoly.monomial(to, k)) for k in range(max_deg + 1)]
    return out


def specialize_vector(v: ModuleVector, point: SpecPoint) -> ModuleVector:
    def sp(p):
        return VarPoly(p.var, [Scalar.const(specialize(c, point)) for c in p.coeffs])

    return type(v)(sp(v.even), sp(v.odd), v.flipped)


def _sign(p: int, r: int) -> int:
    return -1 if (p * r) % 2 else 1


def module_axiom_defect(a: Generator, b: Generator, v: ModuleVector, spec: ModuleSpec):
    """Return ``(lhs, rhs)`` for ``[a,b].v`` versus the graded commutator."""
    lhs = act(bracket(a, b), v, spec)
    av, bv = act(a, v, spec), act(b, v, spec)
    rhs = act(a, bv, spec) - act(b, av, spec).scale(_sign(a.parity, b.parity))
    return lhs, rhs


def check_module_axioms(spec: ModuleSpec, window: int, max_deg: int) -> VerificationReport:
    """Exact check of ``[a,b].v = a.(b.v) -+ b.(a.v)`` on a finite grid."""
    if window < 1 or max_deg < 1:
        raise ValueError("window and max_deg must be at least 1")
    report = VerificationReport(
        "module-axioms",
        parameters={"module": str(spec), **spec.describe()},
        bounds={"window": window, "max_deg": max_deg},
    )
    gens = basis(spec.acting_family, window)
    with timed(report):
        for v in monomial_basis(spec.family, max_deg):
            acted = {g: act(g, v, spec) for g in gens}
            for a in gens:
                for b in gens:
                    lhs = act(bracket(a, b), v, spec)
                    rhs = act(a, acted[b], spec) - act(b, acted[a], spec).scale(
                        _sign(a.parity, b.parity)
                    )
                    report.record(
                        lhs == rhs,
                        {
                            "inputs": {"a": str(a), "b": str(b), "v": str(v)},
                            "lhs": str(lhs),
                            "rhs": str(rhs),
                        },
                    )
    return report
