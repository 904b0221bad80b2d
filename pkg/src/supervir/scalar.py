"""Exact scalars: the ring Q(sqrt2)[a][q, 1/q].

``QuadRat`` is an element ``a + b*w`` of Q(sqrt2) with ``w*w == 2``.
``Scalar`` is a sparse Laurent polynomial in ``q`` (any integer exponent)
and an ordinary polynomial in ``a`` (non-negative exponents) with QuadRat
coefficients.  lambda is always carried as ``q**2`` so that its square root
is the monomial ``q``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import NotAUnit, NotDivisible, ZeroQ

__all__ = [
    "QuadRat",
    "Scalar",
    "SpecPoint",
    "ZERO",
    "ONE",
    "W",
    "Q",
    "A",
    "q_power",
    "alpha",
    "as_scalar",
    "specialize",
]


class QuadRat:
    """Exact element ``a + b*sqrt(2)`` with rational ``a`` and ``b``."""

    __slots__ = ("a", "b", "_hash")

    def __init__(self, a=0, b=0):
        self.a = a if type(a) is Fraction else Fraction(a)
        self.b = b if type(b) is Fraction else Fraction(b)
        self._hash = None

    @classmethod
    def coerce(cls, value) -> QuadRat:
        if isinstance(value, QuadRat):
            return value
        if isinstance(value, (int, Rational)):
            return cls(value)
        raise TypeError(f"cannot interpret {value!r} as an element of Q(sqrt2)")

    def is_zero(self) -> bool:
        return not self.a and not self.b

    def is_rational(self) -> bool:
        return not self.b

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, QuadRat):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Rational)):
            return not self.b and self.a == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.a) if not self.b else hash((self.a, self.b))
        return self._hash

    def __add__(self, other):
        if not isinstance(other, QuadRat):
            try:
                other = QuadRat.coerce(other)
            except TypeError:
                return NotImplemented
        return QuadRat(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadRat(-self.a, -self.b)

    def __sub__(self, other):
        if not isinstance(other, QuadRat):
            try:
                other = QuadRat.coerce(other)
            except TypeError:
                return NotImplemented
        return QuadRat(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QuadRat):
            try:
                other = QuadRat.coerce(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        if not b and not d:
            return QuadRat(a * c)
        return QuadRat(a * c + 2 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def conjugate(self) -> QuadRat:
        return QuadRat(self.a, -self.b)

    def norm(self) -> Fraction:
        """Field norm ``a^2 - 2 b^2``; zero only for the zero element."""
        return self.a * self.a - 2 * self.b * self.b

    def inverse(self) -> QuadRat:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(sqrt2)")
        n = self.norm()
        return QuadRat(self.a / n, -self.b / n)

    def __truediv__(self, other):
        if not isinstance(other, QuadRat):
            try:
                other = QuadRat.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QuadRat.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = QuadRat(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __repr__(self):
        return f"QuadRat({self.a}, {self.b})"

    def __str__(self):
        return _fmt_quadrat(self)

    def needs_parens(self) -> bool:
        """True when the printed form is a sum (both parts nonzero)."""
        return bool(self.a) and bool(self.b)


def _fmt_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _fmt_quadrat(c: QuadRat) -> str:
    if not c.b:
        return _fmt_fraction(c.a)
    if c.b == 1:
        wpart = "w"
    elif c.b == -1:
        wpart = "-w"
    else:
        wpart = f"{_fmt_fraction(c.b)}*w"
    if not c.a:
        return wpart
    sign = "" if wpart.startswith("-") else "+"
    return f"{_fmt_fraction(c.a)}{sign}{wpart}"


_Q0 = QuadRat(0)
_Q1 = QuadRat(1)


class Scalar:
    """Sparse element of Q(sqrt2)[a][q, 1/q].

    ``terms`` maps ``(e_q, e_a)`` to a nonzero ``QuadRat``.  Instances are
    immutable and always held in normal form, so ``==`` is structural.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, c in terms.items():
                c = QuadRat.coerce(c)
                if c:
                    eq, ea = key
                    if ea < 0:
                        raise ValueError("alpha exponents must be non-negative")
                    clean[(int(eq), int(ea))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> Scalar:
        # trusted constructor: caller guarantees normal form
        s = object.__new__(cls)
        s._terms = terms
        s._hash = None
        return s

    @classmethod
    def const(cls, c) -> Scalar:
        c = QuadRat.coerce(c)
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, e_q: int = 0, e_a: int = 0, coeff=1) -> Scalar:
        return cls({(e_q, e_a): coeff})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms in canonical (ascending lexicographic) order."""
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and (0, 0) in self._terms)

    def constant_value(self) -> QuadRat:
        """The QuadRat value of a constant scalar."""
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get((0, 0), _Q0)

    def is_unit(self) -> bool:
        """Units of the ring are exactly the monomials ``c*q^k`` with c != 0."""
        if len(self._terms) != 1:
            return False
        ((_, ea),) = self._terms
        return ea == 0

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self._terms == other._terms
        try:
            other = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v = v + c
                if v:
                    out[k] = v
                else:
                    del out[k]
        return Scalar._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return as_scalar(other) - self

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
        st, ot = self._terms, other._terms
        if not st or not ot:
            return ZERO
        if len(ot) == 1:
            ((k2, c2),) = ot.items()
            if k2 == (0, 0):
                if c2 == _Q1:
                    return self
                return Scalar._raw({k: c * c2 for k, c in st.items()})
            return Scalar._raw(
                {(k[0] + k2[0], k[1] + k2[1]): c * c2 for k, c in st.items()}
            )
        out = {}
        for (q1, a1), c1 in st.items():
            for (q2, a2), c2 in ot.items():
                key = (q1 + q2, a1 + a2)
                v = out.get(key)
                out[key] = c1 * c2 if v is None else v + c1 * c2
        return Scalar._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def leading(self):
        """Leading ``((e_q, e_a), coeff)`` under lexicographic order."""
        key = max(self._terms)
        return key, self._terms[key]

    def inverse(self) -> Scalar:
        if not self.is_unit():
            raise NotAUnit(f"{self} is not a unit of Q(sqrt2)[a][q,1/q]")
        ((eq, _), c) = next(iter(self._terms.items()))
        return Scalar._raw({(-eq, 0): c.inverse()})

    def __truediv__(self, other):
        other = as_scalar(other)
        if other.is_unit():
            return self * other.inverse()
        return self.exact_div(other)

    def __rtruediv__(self, other):
        return as_scalar(other) / self

    def exact_div(self, divisor: Scalar) -> Scalar:
        """Quotient ``self / divisor`` when it lies in the ring.

        Uses the lexicographic division algorithm; raises ``NotDivisible``
        if there is a remainder.
        """
        divisor = as_scalar(divisor)
        if not divisor:
            raise ZeroDivisionError("division by the zero scalar")
        if not self._terms:
            return ZERO
        if divisor.is_unit():
            return self * divisor.inverse()
        (dq, da), dc = divisor.leading()
        dinv = dc.inverse()
        min_q = min(k[0] for k in self._terms) - min(k[0] for k in divisor._terms)
        rem = self
        quot = {}
        while rem._terms:
            (rq, ra), rc = rem.leading()
            tq, ta = rq - dq, ra - da
            if ta < 0 or tq < min_q:
                raise NotDivisible(f"{divisor} does not divide {self}")
            c = rc * dinv
            quot[(tq, ta)] = c
            rem = rem - divisor * Scalar._raw({(tq, ta): c})
        return Scalar._raw(quot)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def monomial_content(self) -> Scalar:
        """Largest monomial ``q^i a^j`` dividing every term (1 if none)."""
        if not self._terms:
            return ONE
        eq = min(k[0] for k in self._terms)
        ea = min(k[1] for k in self._terms)
        return Scalar._raw({(eq, ea): _Q1})

    def needs_parens(self) -> bool:
        """True if the printed form has a top-level sum, so it must be
        bracketed when used as a factor."""
        text = str(self)
        depth = 0
        for i, ch in enumerate(text):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch in "+-" and i > 0 and depth == 0 and text[i - 1] != "^":
                return True
        return False

    def q_degree_range(self):
        if not self._terms:
            return (0, 0)
        qs = [k[0] for k in self._terms]
        return min(qs), max(qs)

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        return format_scalar(self)


def _fmt_monomial(eq: int, ea: int) -> str:
    parts = []
    if eq:
        parts.append("q" if eq == 1 else f"q^{eq}")
    if ea:
        parts.append("a" if ea == 1 else f"a^{ea}")
    return "*".join(parts)


def format_term(key, c: QuadRat) -> str:
    mono = _fmt_monomial(*key)
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    if c.needs_parens():
        return f"({c})*{mono}"
    return f"{c}*{mono}"


def format_scalar(s: Scalar) -> str:
    """Canonical compact text, terms in descending lexicographic order."""
    items = s.items()
    if not items:
        return "0"
    out = ""
    for key, c in reversed(items):
        t = format_term(key, c)
        if not out:
            out = t
        elif t.startswith("-"):
            out += t
        else:
            out += "+" + t
    return out


def as_scalar(value) -> Scalar:
    if isinstance(value, Scalar):
        return value
    return Scalar.const(QuadRat.coerce(value))


def q_power(k: int) -> Scalar:
    return Scalar._raw({(int(k), 0): _Q1})


def alpha() -> Scalar:
    return Scalar._raw({(0, 1): _Q1})


ZERO = Scalar._raw({})
ONE = Scalar._raw({(0, 0): _Q1})
W = Scalar._raw({(0, 0): QuadRat(0, 1)})
Q = q_power(1)
A = alpha()


@dataclass(frozen=True)
class SpecPoint:
    """A concrete evaluation point ``(q0, alpha0)``; lambda0 is ``q0**2``."""

    q0: QuadRat
    alpha0: QuadRat

    def __init__(self, q0, alpha0):
        q0 = QuadRat.coerce(q0)
        if q0.is_zero():
            raise ZeroQ("q0 must be nonzero (lambda = q0^2 lies in C*)")
        object.__setattr__(self, "q0", q0)
        object.__setattr__(self, "alpha0", QuadRat.coerce(alpha0))

    @property
    def lam0(self) -> QuadRat:
        return self.q0 * self.q0

    def __str__(self):
        return f"{self.q0},{self.alpha0}"


def specialize(s: Scalar, p: SpecPoint) -> QuadRat:
    """Evaluate ``s`` at ``q = p.q0``, ``a = p.alpha0``."""
    if p.q0.is_zero():
        raise ZeroQ("cannot specialize at q0 = 0")
    total = QuadRat(0)
    qpows = {}
    apows = {}
    for (eq, ea), c in s.items():
        if eq not in qpows:
            qpows[eq] = p.q0 ** eq
        if ea not in apows:
            apows[ea] = p.alpha0 ** ea
        total = total + c * qpows[eq] * apows[ea]
    return total
