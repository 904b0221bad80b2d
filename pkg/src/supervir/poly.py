"""Univariate polynomials over ``Scalar`` in a tagged variable.

The tag is one of ``t`` (standing for x^2 in Ramond modules), ``x`` or ``y``
(the even and odd Neveu-Schwarz variables).  Coefficients are dense, lowest
degree first.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import DegreeOverflow
from .scalar import ONE, ZERO, QuadRat, Scalar, as_scalar

__all__ = [
    "DEGREE_CAP",
    "VarTag",
    "HalfInt",
    "VarPoly",
    "shift",
    "mul_linear",
    "retag",
    "rescale",
]

DEGREE_CAP = 32


class VarTag(enum.Enum):
    T = "t"
    X = "x"
    Y = "y"

    def __str__(self):
        return self.value


@dataclass(frozen=True, order=True)
class HalfInt:
    """Half-integer stored as twice its value."""

    twice: int

    @classmethod
    def of(cls, value) -> HalfInt:
        if isinstance(value, HalfInt):
            return value
        v = Fraction(value)
        if (2 * v).denominator != 1:
            raise ValueError(f"{value} is not a half-integer")
        return cls(int(2 * v))

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice, 2)

    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __int__(self):
        if self.twice % 2:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def __add__(self, other):
        return HalfInt(self.twice + HalfInt.of(other).twice)

    __radd__ = __add__

    def __sub__(self, other):
        return HalfInt(self.twice - HalfInt.of(other).twice)

    def __neg__(self):
        return HalfInt(-self.twice)

    def __abs__(self):
        return HalfInt(abs(self.twice))

    def __str__(self):
        return str(self.twice // 2) if self.twice % 2 == 0 else f"{self.twice}/2"


def _const(c) -> Scalar:
    return Scalar.const(QuadRat(c))


class VarPoly:
    """Polynomial ``sum coeffs[k] * var^k`` with Scalar coefficients."""

    __slots__ = ("var", "coeffs", "_hash")

    def __init__(self, var: VarTag, coeffs=()):
        cs = [as_scalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        if len(cs) - 1 > DEGREE_CAP:
            raise DegreeOverflow(
                f"degree {len(cs) - 1} exceeds the cap of {DEGREE_CAP}"
            )
        self.var = VarTag(var)
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def zero(cls, var: VarTag) -> VarPoly:
        return cls(var, ())

    @classmethod
    def one(cls, var: VarTag) -> VarPoly:
        return cls(var, (ONE,))

    @classmethod
    def monomial(cls, var: VarTag, k: int, coeff=ONE) -> VarPoly:
        return cls(var, [ZERO] * k + [as_scalar(coeff)])

    @property
    def degree(self):
        """Degree, or ``float('-inf')`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, k: int) -> Scalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __eq__(self, other):
        if not isinstance(other, VarPoly):
            return NotImplemented
        return self.var == other.var and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.var, self.coeffs))
        return self._hash

    def _check(self, other: VarPoly):
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")

    def __add__(self, other):
        if not isinstance(other, VarPoly):
            return NotImplemented
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return VarPoly(self.var, [x + b[i] if i < len(b) else x for i, x in enumerate(a)])

    def __neg__(self):
        return VarPoly(self.var, [-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, VarPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, s) -> VarPoly:
        s = as_scalar(s)
        if not s:
            return VarPoly(self.var)
        return VarPoly(self.var, [c * s for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, VarPoly):
            self._check(other)
            if not self.coeffs or not other.coeffs:
                return VarPoly(self.var)
            out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return VarPoly(self.var, out)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        result = VarPoly.one(self.var)
        for _ in range(k):
            result = result * self
        return result

    def __repr__(self):
        return f"VarPoly({self.var.value}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        return format_poly(self)


@lru_cache(maxsize=None)
def _shift_table(n: int, c: Fraction):
    """Row k holds the coefficients of (v + c)^k as Fractions."""
    return tuple(
        tuple(comb(k, j) * c ** (k - j) for j in range(k + 1)) for k in range(n)
    )


def shift(p: VarPoly, c) -> VarPoly:
    """Return ``p(v + c)`` for a half-integer (or any rational) ``c``."""
    c = c.value if isinstance(c, HalfInt) else Fraction(c)
    if not c or not p.coeffs:
        return p
    n = len(p.coeffs)
    table = _shift_table(n, c)
    out = [ZERO] * n
    for k, a in enumerate(p.coeffs):
        if not a:
            continue
        row = table[k]
        for j in range(k + 1):
            out[j] = out[j] + a * _const(row[j]) if row[j] != 1 else out[j] + a
    return VarPoly(p.var, out)


def mul_linear(p: VarPoly, a, b) -> VarPoly:
    """Return ``(a*var + b) * p``."""
    a, b = as_scalar(a), as_scalar(b)
    cs = p.coeffs
    if not cs:
        return p
    out = [ZERO] * (len(cs) + 1)
    for k, c in enumerate(cs):
        if b:
            out[k] = out[k] + c * b
        if a:
            out[k + 1] = out[k + 1] + c * a
    return VarPoly(p.var, out)


def retag(p: VarPoly, to: VarTag) -> VarPoly:
    if p.var == to:
        return p
    return VarPoly(to, p.coeffs)


def rescale(p: VarPoly, c, to: VarTag | None = None) -> VarPoly:
    """Return ``p(c * var)``, optionally under a new variable tag."""
    c = as_scalar(c)
    out = []
    power = ONE
    for k, a in enumerate(p.coeffs):
        out.append(a * power)
        power = power * c
    return VarPoly(to or p.var, out)


def _fmt_coeff_term(c: Scalar, mono: str, compact: bool) -> str:
    text = str(c)
    if not mono:
        if c.needs_parens():
            return f"({text})"
        return text
    if text == "1":
        return mono
    if text == "-1":
        return "-" + mono
    if c.needs_parens():
        return f"({text})*{mono}"
    return f"{text}*{mono}"


def _join(parts, compact: bool) -> str:
    out = ""
    for t in parts:
        neg = t.startswith("-")
        body = t[1:] if neg else t
        if not out:
            out = t
        elif compact:
            out += ("-" if neg else "+") + body
        else:
            out += (" - " if neg else " + ") + body
    return out


def _fmt_plain(p: VarPoly, compact: bool) -> str:
    if not p.coeffs:
        return "0"
    v = p.var.value
    nonzero = [(k, c) for k, c in enumerate(p.coeffs) if c]
    if len(nonzero) == 1 and nonzero[0][0] == 0:
        return str(nonzero[0][1])
    parts = []
    for k, c in reversed(nonzero):
        mono = "" if k == 0 else (v if k == 1 else f"{v}^{k}")
        parts.append(_fmt_coeff_term(c, mono, compact))
    return _join(parts, compact)


def format_poly(p: VarPoly) -> str:
    """Canonical text; a common ``q^i*a^j`` factor is pulled out front."""
    nonzero = [c for c in p.coeffs if c]
    if not nonzero:
        return "0"
    if len(p.coeffs) == 1:
        return str(p.coeffs[0])
    eq = min(k[0] for c in nonzero for k, _ in c.items())
    ea = min(k[1] for c in nonzero for k, _ in c.items())
    if (eq, ea) == (0, 0):
        return _fmt_plain(p, compact=False)
    content = Scalar.monomial(eq, ea)
    inner = VarPoly(p.var, [c.exact_div(content) for c in p.coeffs])
    body = _fmt_plain(inner, compact=True)
    if body == "1":
        return str(content)
    if "+" in body or "-" in body:
        return f"{content}*({body})"
    return f"{content}*{body}"
