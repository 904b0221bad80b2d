"""Text grammar for scalars, polynomials, algebra elements and vectors.

::

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/") unary)*
    unary   := ("-" | "+") unary | power
    power   := atom ("^" ["-"] INT)?
    atom    := INT | "q" | "a" | "w" | "t" | "x" | "y"
             | "L" "(" ["-"] INT ")" | "G" "(" ["-"] INT ["/" "2"] ")"
             | "(" expr ")"
    vector  := ["Pi"] "[" "even" ":" expr "|" "odd" ":" expr "]"

``q`` is the square root of lambda, ``a`` is alpha and ``w`` is sqrt(2).
Everything printed by the package parses back to an equal value.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .algebra import AlgebraElement, Family, Generator
from .errors import FamilyMismatch, NotAUnit, ParseError
from .modules import ModuleVector, NSVector, RamondVector
from .poly import HalfInt, VarPoly, VarTag
from .scalar import A, ONE, Q, W, Scalar, as_scalar

__all__ = [
    "parse_expression",
    "parse_scalar",
    "parse_poly",
    "parse_element",
    "parse_vector",
    "parse_generator",
]

_TOKEN = re.compile(r"(\d+)|([A-Za-z]+)|(\S)")
_HALF_G = re.compile(r"G\s*\(\s*-?\s*\d+\s*/")
_VARS = {"t": VarTag.T, "x": VarTag.X, "y": VarTag.Y}


@dataclass
class _Tok:
    kind: str  # "int", "name", "op", "end"
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list:
    toks = []
    line_starts = [0] + [i + 1 for i, ch in enumerate(text) if ch == "\n"]

    def where(pos):
        line = sum(1 for ls in line_starts if ls <= pos)
        return line, pos - line_starts[line - 1] + 1

    for m in _TOKEN.finditer(text):
        kind = "int" if m.group(1) else "name" if m.group(2) else "op"
        toks.append(_Tok(kind, m.group(0), *where(m.start())))
    toks.append(_Tok("end", "", *where(len(text))))
    return toks


class _Parser:
    def __init__(self, text: str, family: Family | None):
        self.toks = _tokenize(text)
        self.i = 0
        self.family = family

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, message, expected=()):
        t = self.tok
        found = repr(t.text) if t.kind != "end" else "end of input"
        raise ParseError(f"{message}, found {found}", t.line, t.col, expected)

    def accept(self, text) -> bool:
        if self.tok.kind in ("op", "name") and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text):
        if not self.accept(text):
            self.error("unexpected token", [text])

    def expect_int(self) -> int:
        if self.tok.kind != "int":
            self.error("expected an integer", ["INT"])
        v = int(self.tok.text)
        self.i += 1
        return v

    # expression levels -------------------------------------------------
    def expr(self):
        value = self.term()
        while True:
            t = self.tok
            if self.accept("+"):
                value = _combine(value, self.term(), "+", t)
            elif self.accept("-"):
                value = _combine(value, self.term(), "-", t)
            else:
                return value

    def term(self):
        value = self.unary()
        while True:
            t = self.tok
            if self.accept("*"):
                value = _combine(value, self.unary(), "*", t)
            elif self.accept("/"):
                value = _combine(value, self.unary(), "/", t)
            else:
                return value

    def unary(self):
        if self.accept("-"):
            return _combine(Scalar.const(-1), self.unary(), "*", self.tok)
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        t = self.tok
        if self.accept("^"):
            neg = self.accept("-")
            k = self.expect_int()
            k = -k if neg else k
            try:
                if isinstance(base, Scalar):
                    return base ** k
                if isinstance(base, VarPoly) and k >= 0:
                    return base ** k
            except NotAUnit as exc:
                raise ParseError(str(exc), t.line, t.col) from None
            raise ParseError(f"cannot raise {base} to the power {k}", t.line, t.col)
        return base

    def atom(self):
        t = self.tok
        if t.kind == "int":
            self.i += 1
            return Scalar.const(int(t.text))
        if t.kind == "name":
            name = t.text
            if name in ("L", "G"):
                return self.generator()
            self.i += 1
            if name == "q":
                return Q
            if name == "a":
                return A
            if name == "w":
                return W
            if name in _VARS:
                return VarPoly.monomial(_VARS[name], 1)
            self.i -= 1
            self.error("unknown name", ["q", "a", "w", "t", "x", "y", "L", "G"])
        if self.accept("("):
            value = self.expr()
            self.expect(")")
            return value
        self.error("expected a value", ["INT", "q", "a", "w", "t", "x", "y", "L", "G", "("])

    def generator(self):
        t = self.tok
        kind = t.text
        self.i += 1
        self.expect("(")
        neg = self.accept("-")
        num = self.expect_int()
        twice = 2 * num
        if self.accept("/"):
            den = self.expect_int()
            if den != 2 or kind == "L":
                raise ParseError(f"invalid index for {kind}", t.line, t.col, ["INT"])
            twice = num
        self.expect(")")
        if neg:
            twice = -twice
        family = self.family
        if family is None:
            family = Family.NS if (kind == "G" and twice % 2) else Family.RAMOND
        try:
            g = Generator(kind, HalfInt(twice), family)
        except FamilyMismatch as exc:
            raise ParseError(str(exc), t.line, t.col) from None
        return AlgebraElement.of(g)

    def vector(self):
        flipped = self.accept("Pi")
        self.expect("[")
        self.expect("even")
        self.expect(":")
        even = self.expr()
        self.expect("|")
        self.expect("odd")
        self.expect(":")
        odd = self.expr()
        self.expect("]")
        return _build_vector(even, odd, flipped, self.family, self.tok)


def _combine(x, y, op: str, tok: _Tok):
    try:
        if isinstance(x, AlgebraElement) or isinstance(y, AlgebraElement):
            return _combine_elements(x, y, op)
        if isinstance(x, VarPoly) or isinstance(y, VarPoly):
            return _combine_polys(x, y, op)
        if op == "+":
            return x + y
        if op == "-":
            return x - y
        if op == "*":
            return x * y
        return x / y
    except (TypeError, ValueError, ArithmeticError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"invalid operands for {op!r}: {exc}", tok.line, tok.col) from None


def _combine_elements(x, y, op):
    if op in ("+", "-"):
        if not (isinstance(x, AlgebraElement) and isinstance(y, AlgebraElement)):
            raise TypeError("cannot add a scalar to an algebra element")
        return x + y if op == "+" else x - y
    if op == "*":
        if isinstance(x, Scalar):
            return y.scale(x)
        if isinstance(y, Scalar):
            return x.scale(y)
        raise TypeError("products of algebra elements are not defined")
    if isinstance(y, Scalar) and isinstance(x, AlgebraElement):
        return x.scale(ONE / y)
    raise TypeError("division must be by a scalar")


def _promote(v, var):
    return v if isinstance(v, VarPoly) else VarPoly(var, (as_scalar(v),))


def _combine_polys(x, y, op):
    var = x.var if isinstance(x, VarPoly) else y.var
    if op == "/":
        if not isinstance(y, Scalar):
            raise TypeError("polynomial division is not supported")
        return x.scale(ONE / y)
    x, y = _promote(x, var), _promote(y, var)
    if op == "+":
        return x + y
    if op == "-":
        return x - y
    return x * y


def _build_vector(even, odd, flipped, family, tok):
    for part in (even, odd):
        if isinstance(part, AlgebraElement):
            raise ParseError("vector components must be polynomials", tok.line, tok.col)
    tags = {p.var for p in (even, odd) if isinstance(p, VarPoly) and p.degree > 0}
    if family is None:
        if VarTag.T in tags:
            family = Family.RAMOND
        elif tags:
            family = Family.NS
        else:
            family = Family.RAMOND
    cls = RamondVector if family is Family.RAMOND else NSVector
    try:
        return cls(_as_poly(even), _as_poly(odd), flipped)
    except FamilyMismatch as exc:
        raise ParseError(str(exc), tok.line, tok.col) from None


def _as_poly(p):
    if isinstance(p, VarPoly):
        return p
    return as_scalar(p)


def parse_expression(text: str, family=None):
    """Parse a scalar, polynomial, algebra element or (bracketed) vector."""
    if family is None:
        # an element mentioning a half-integer G-index is Neveu-Schwarz
        fam = Family.NS if _HALF_G.search(text) else None
    else:
        fam = Family(family)
    p = _Parser(text, fam)
    if p.tok.text in ("[", "Pi"):
        value = p.vector()
    else:
        value = p.expr()
    if p.tok.kind != "end":
        p.error("trailing input", ["+", "-", "*", "/", "end of input"])
    return value


def _typed(text, family, types, what):
    value = parse_expression(text, family)
    if isinstance(value, Scalar) and VarPoly in types:
        return value
    if not isinstance(value, types):
        raise ParseError(f"expected {what}, got {type(value).__name__}", 1, 1)
    return value


def parse_scalar(text: str) -> Scalar:
    return _typed(text, None, (Scalar,), "a scalar")


def parse_poly(text: str, var: VarTag | None = None) -> VarPoly:
    value = _typed(text, None, (VarPoly,), "a polynomial")
    if isinstance(value, Scalar):
        return VarPoly(var or VarTag.T, (value,))
    if var is not None and value.var != var:
        raise ParseError(f"expected a polynomial in {var}, got one in {value.var}", 1, 1)
    return value


def parse_element(text: str, family=None) -> AlgebraElement:
    return _typed(text, family, (AlgebraElement,), "an algebra element")


def parse_generator(text: str, family=None) -> Generator:
    elem = parse_element(text, family)
    items = elem.items()
    if len(items) != 1 or items[0][1] != ONE:
        raise ParseError("expected a single generator", 1, 1)
    return items[0][0]


def parse_vector(text: str, family=None) -> ModuleVector:
    return _typed(text, family, (ModuleVector,), "a vector")
