"""The centerless super-Virasoro algebras: Ramond (integer G-indices) and
Neveu-Schwarz (half-integer G-indices).

Basis elements are ``L(m)`` (even) and ``G(r)`` (odd) with

    [L_m, L_n] = (m - n) L_{m+n}
    [L_m, G_r] = (m/2 - r) G_{m+r}
    [G_r, G_s] = 2 L_{r+s}

The bracket on two odd elements is the symmetric super-bracket.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import FamilyMismatch
from .poly import HalfInt
from .report import VerificationReport, timed
from .scalar import ONE, Q, W, Scalar, as_scalar

__all__ = [
    "Family",
    "Generator",
    "AlgebraElement",
    "L",
    "G",
    "bracket",
    "basis",
    "check_super_jacobi",
    "twist_sigma_lambda",
    "embed_sigma",
]


class Family(enum.Enum):
    RAMOND = "ramond"
    NS = "ns"

    def __str__(self):
        return self.value

    @property
    def epsilon(self) -> Fraction:
        return Fraction(0) if self is Family.RAMOND else Fraction(1, 2)


@dataclass(frozen=True)
class Generator:
    kind: str
    index: HalfInt
    family: Family

    def __post_init__(self):
        if self.kind not in ("L", "G"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if not isinstance(self.index, HalfInt):
            object.__setattr__(self, "index", HalfInt.of(self.index))
        family = Family(self.family)
        object.__setattr__(self, "family", family)
        odd_index = self.index.twice % 2 == 1
        if self.kind == "L" and odd_index:
            raise FamilyMismatch(f"L-index must be an integer, got {self.index}")
        if self.kind == "G":
            if family is Family.RAMOND and odd_index:
                raise FamilyMismatch(f"Ramond G-index must be an integer, got {self.index}")
            if family is Family.NS and not odd_index:
                raise FamilyMismatch(
                    f"Neveu-Schwarz G-index must lie in 1/2 + Z, got {self.index}"
                )

    @property
    def parity(self) -> int:
        return 0 if self.kind == "L" else 1

    def sort_key(self):
        return (self.parity, self.index.twice)

    def __str__(self):
        return f"{self.kind}({self.index})"


def L(m, family: Family = Family.RAMOND) -> Generator:
    return Generator("L", HalfInt.of(m), family)


def G(r, family: Family | None = None) -> Generator:
    r = HalfInt.of(r)
    if family is None:
        family = Family.RAMOND if r.is_integer() else Family.NS
    return Generator("G", r, family)


class AlgebraElement:
    """Finite linear combination of generators of a single family."""

    __slots__ = ("family", "_terms")

    def __init__(self, family: Family, terms=None):
        self.family = Family(family)
        clean = {}
        for g, c in (terms or {}).items():
            if g.family is not self.family:
                raise FamilyMismatch(f"{g} is not a {self.family} generator")
            c = as_scalar(c)
            if c:
                clean[g] = clean[g] + c if g in clean else c
                if not clean[g]:
                    del clean[g]
        self._terms = clean

    @classmethod
    def of(cls, g: Generator, coeff=ONE) -> AlgebraElement:
        return cls(g.family, {g: coeff})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    @property
    def parity(self):
        """0 or 1 for homogeneous nonzero elements, None otherwise."""
        ps = {g.parity for g in self._terms}
        return ps.pop() if len(ps) == 1 else None

    def _check(self, other: AlgebraElement):
        if other.family is not self.family:
            raise FamilyMismatch(f"cannot combine {self.family} and {other.family} elements")

    def __eq__(self, other):
        if isinstance(other, Generator):
            other = AlgebraElement.of(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if not self._terms and not other._terms:
            return True
        return self.family is other.family and self._terms == other._terms

    def __hash__(self):
        return hash((self.family, frozenset(self._terms.items())))

    def __add__(self, other):
        if isinstance(other, Generator):
            other = AlgebraElement.of(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for g, c in other._terms.items():
            out[g] = out[g] + c if g in out else c
        return AlgebraElement(self.family, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.family, {g: -c for g, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, Generator):
            other = AlgebraElement.of(other)
        return self + (-other)

    def scale(self, s) -> AlgebraElement:
        s = as_scalar(s)
        return AlgebraElement(self.family, {g: c * s for g, c in self._terms.items()})

    def __mul__(self, s):
        try:
            return self.scale(s)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        return f"AlgebraElement({self.family}, {self})"

    def __str__(self):
        if not self._terms:
            return "0"
        out = ""
        for g, c in self.items():
            text = str(c)
            if text == "1":
                t = str(g)
            elif text == "-1":
                t = f"-{g}"
            elif c.needs_parens():
                t = f"({text})*{g}"
            else:
                t = f"{text}*{g}"
            if not out:
                out = t
            elif t.startswith("-"):
                out += " - " + t[1:]
            else:
                out += " + " + t
        return out


def _as_element(x) -> AlgebraElement:
    if isinstance(x, Generator):
        return AlgebraElement.of(x)
    if isinstance(x, AlgebraElement):
        return x
    raise TypeError(f"expected a generator or algebra element, got {x!r}")


def bracket_basis(a: Generator, b: Generator) -> AlgebraElement:
    """Structure constants on a pair of generators."""
    if a.family is not b.family:
        raise FamilyMismatch(f"{a} and {b} belong to different algebras")
    fam = a.family
    m, n = a.index.value, b.index.value
    if a.kind == "L" and b.kind == "L":
        return AlgebraElement(fam, {Generator("L", a.index + b.index, fam): m - n})
    if a.kind == "L" and b.kind == "G":
        return AlgebraElement(fam, {Generator("G", a.index + b.index, fam): m / 2 - n})
    if a.kind == "G" and b.kind == "L":
        return AlgebraElement(fam, {Generator("G", a.index + b.index, fam): -(n / 2 - m)})
    return AlgebraElement(fam, {Generator("L", a.index + b.index, fam): 2})


def bracket(a, b) -> AlgebraElement:
    """Bilinear super-bracket of two elements (or generators)."""
    a, b = _as_element(a), _as_element(b)
    if a.family is not b.family:
        raise FamilyMismatch(f"cannot bracket {a.family} with {b.family}")
    out = AlgebraElement(a.family)
    for ga, ca in a._terms.items():
        for gb, cb in b._terms.items():
            out = out + bracket_basis(ga, gb).scale(ca * cb)
    return out


def basis(family: Family, window) -> list:
    """Generators with ``|index| <= window`` in deterministic order
    (index ascending, L before G at equal index)."""
    family = Family(family)
    w2 = int(2 * Fraction(window))
    gens = []
    for twice in range(-w2, w2 + 1):
        if twice % 2 == 0:
            gens.append(Generator("L", HalfInt(twice), family))
            if family is Family.RAMOND:
                gens.append(Generator("G", HalfInt(twice), family))
        elif family is Family.NS:
            gens.append(Generator("G", HalfInt(twice), family))
    return gens


def _sign(p: int, r: int) -> int:
    return -1 if (p * r) % 2 else 1


def jacobi_sum(a: Generator, b: Generator, c: Generator) -> AlgebraElement:
    """Graded Jacobi combination; zero exactly when the identity holds."""
    pa, pb, pc = a.parity, b.parity, c.parity
    t1 = bracket(a, bracket(b, c)).scale(_sign(pa, pc))
    t2 = bracket(b, bracket(c, a)).scale(_sign(pb, pa))
    t3 = bracket(c, bracket(a, b)).scale(_sign(pc, pb))
    return t1 + t2 + t3


def check_super_jacobi(window: int, families=(Family.RAMOND, Family.NS)) -> VerificationReport:
    if window < 1:
        raise ValueError("window must be at least 1")
    if isinstance(families, (Family, str)):
        families = (families,)
    families = tuple(Family(f) for f in families)
    report = VerificationReport(
        "super-jacobi",
        parameters={"families": [str(f) for f in families]},
        bounds={"window": window},
    )
    with timed(report):
        for fam in families:
            gens = basis(fam, window)
            for a, b, c in itertools.product(gens, repeat=3):
                total = jacobi_sum(a, b, c)
                report.record(
                    total.is_zero(),
                    {"inputs": {"a": str(a), "b": str(b), "c": str(c)}, "lhs": str(total), "rhs": "0"},
                )
    return report


def twist_sigma_lambda(a, root: Scalar = Q) -> AlgebraElement:
    """The automorphism scaling L_m by lambda^m and G_r by lambda^r.

    lambda is passed through its square root ``root`` (default ``q``, i.e.
    lambda = q^2) so half-integer powers stay inside the ring.
    """
    a = _as_element(a)
    root = as_scalar(root)
    return AlgebraElement(
        a.family, {g: c * root ** g.index.twice for g, c in a._terms.items()}
    )


_HALF = Scalar.const(Fraction(1, 2))
_INV_SQRT2 = W * _HALF


def embed_sigma(a) -> AlgebraElement:
    """Injective homomorphism NS -> Ramond: L_m -> L_{2m}/2, G_r -> G_{2r}/sqrt2."""
    a = _as_element(a)
    if a.family is not Family.NS:
        raise FamilyMismatch("embed_sigma expects a Neveu-Schwarz element")
    out = {}
    for g, c in a._terms.items():
        image = Generator(g.kind, HalfInt(2 * g.index.twice), Family.RAMOND)
        out[image] = c * (_HALF if g.kind == "L" else _INV_SQRT2)
    return AlgebraElement(Family.RAMOND, out)
