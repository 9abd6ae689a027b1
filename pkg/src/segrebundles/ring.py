"""Exact arithmetic in the Chow ring of a product of projective spaces.

For X = P^n1 x ... x P^ns the intersection ring is

    Z[t1, ..., ts] / (t1^(n1+1), ..., ts^(ns+1))

and this module works with it over the rationals (Todd classes need
denominators). Elements are sparse maps from exponent vectors to nonzero
``Fraction`` coefficients; truncation is applied at construction, so every
stored monomial is a genuine class.

    >>> R = make_ring([1, 2])
    >>> t1, t2 = R.gens
    >>> (2*t1 + t2)**2 * t1
    RingElement('t1*t2^2', factors=(1, 2))
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping

__all__ = [
    "InvalidSpecError",
    "SpecMismatchError",
    "ParseError",
    "RingSpec",
    "RingElement",
    "make_ring",
    "mul",
    "add",
    "scale",
    "graded_part",
    "integrate",
    "parse_element",
]


class InvalidSpecError(ValueError):
    pass


class SpecMismatchError(ValueError):
    pass


class ParseError(ValueError):
    """Raised for malformed ring expressions; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class RingSpec:
    factors: tuple[int, ...]

    def __post_init__(self):
        if not self.factors:
            raise InvalidSpecError("ring needs at least one projective factor")
        for n in self.factors:
            if not isinstance(n, int) or isinstance(n, bool) or n < 1:
                raise InvalidSpecError(f"factor dimensions must be positive integers, got {n!r}")

    @property
    def nvars(self) -> int:
        return len(self.factors)

    @property
    def dimension(self) -> int:
        return sum(self.factors)

    @property
    def top(self) -> tuple[int, ...]:
        return self.factors

    def admits(self, exps: tuple[int, ...]) -> bool:
        return len(exps) == self.nvars and all(0 <= d <= n for d, n in zip(exps, self.factors))

    def element(self, terms: Mapping[tuple[int, ...], object] | None = None) -> RingElement:
        return RingElement(self, terms or {})

    def const(self, q) -> RingElement:
        return RingElement(self, {(0,) * self.nvars: q})

    @property
    def zero(self) -> RingElement:
        return RingElement(self, {})

    @property
    def one(self) -> RingElement:
        return self.const(1)

    def gen(self, i: int) -> RingElement:
        """The hyperplane class pulled back from the ``i``-th factor (0-based)."""
        exps = [0] * self.nvars
        exps[i] = 1
        return RingElement(self, {tuple(exps): 1})

    @property
    def gens(self) -> tuple[RingElement, ...]:
        return tuple(self.gen(i) for i in range(self.nvars))

    def monomial(self, *exps: int) -> RingElement:
        return RingElement(self, {tuple(exps): 1})


def make_ring(factors: Iterable[int]) -> RingSpec:
    return RingSpec(tuple(factors))


def _coerce_coeff(q) -> Fraction:
    if isinstance(q, Fraction):
        return q
    if isinstance(q, (int, Rational)) and not isinstance(q, bool):
        return Fraction(q)
    if isinstance(q, str):
        return Fraction(q)
    raise TypeError(f"coefficients must be exact rationals, got {type(q).__name__}")


def _term_key(exps: tuple[int, ...]):
    # total degree ascending, then lexicographically descending exponents
    return (sum(exps), tuple(-d for d in exps))


class RingElement:
    """An immutable element of a truncated Chow ring."""

    __slots__ = ("spec", "_terms", "_hash")

    def __init__(self, spec: RingSpec, terms: Mapping[tuple[int, ...], object]):
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, q in terms.items():
            exps = tuple(exps)
            if len(exps) != spec.nvars or any(d < 0 for d in exps):
                raise InvalidSpecError(f"exponent vector {exps} does not fit factors {spec.factors}")
            q = _coerce_coeff(q)
            if q == 0 or not spec.admits(exps):
                continue
            clean[exps] = clean.get(exps, Fraction(0)) + q
        object.__setattr__(self, "spec", spec)
        items = sorted(((e, c) for e, c in clean.items() if c != 0), key=lambda it: _term_key(it[0]))
        object.__setattr__(self, "_terms", tuple(items))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("RingElement is immutable")

    @property
    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[tuple[int, ...], Fraction]]:
        return iter(self._terms)

    def coeff(self, *exps: int) -> Fraction:
        return dict(self._terms).get(tuple(exps), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.spec == other.spec and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == self.spec.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.spec, self._terms)))
        return self._hash

    def _lift(self, other) -> RingElement:
        if isinstance(other, RingElement):
            if other.spec != self.spec:
                raise SpecMismatchError(f"factors {self.spec.factors} vs {other.spec.factors}")
            return other
        return self.spec.const(_coerce_coeff(other))

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return scale(-1, self)

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return add(self, scale(-1, other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RingElement):
            return mul(self, other)
        try:
            return scale(_coerce_coeff(other), self)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, RingElement):
            if other.graded_part(0) != other or other.is_zero():
                raise ZeroDivisionError("can only divide by a nonzero constant")
            other = other.coeff(*([0] * self.spec.nvars))
        return scale(1 / _coerce_coeff(other), self)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.spec.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def graded_part(self, d: int) -> RingElement:
        return graded_part(self, d)

    def integrate(self) -> Fraction:
        return integrate(self)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"RingElement({format_element(self)!r}, factors={self.spec.factors})"


def _check(x: RingElement, y: RingElement):
    if x.spec != y.spec:
        raise SpecMismatchError(f"factors {x.spec.factors} vs {y.spec.factors}")


def add(x: RingElement, y: RingElement) -> RingElement:
    _check(x, y)
    acc = dict(x._terms)
    for e, c in y._terms:
        acc[e] = acc.get(e, 0) + c
    return RingElement(x.spec, acc)


def scale(q, x: RingElement) -> RingElement:
    q = _coerce_coeff(q)
    return RingElement(x.spec, {e: q * c for e, c in x._terms})


def mul(x: RingElement, y: RingElement) -> RingElement:
    _check(x, y)
    bound = x.spec.factors
    acc: dict[tuple[int, ...], Fraction] = {}
    for ex, cx in x._terms:
        for ey, cy in y._terms:
            e = tuple(a + b for a, b in zip(ex, ey))
            if any(d > n for d, n in zip(e, bound)):
                continue
            acc[e] = acc.get(e, 0) + cx * cy
    return RingElement(x.spec, acc)


def graded_part(x: RingElement, d: int) -> RingElement:
    return RingElement(x.spec, {e: c for e, c in x._terms if sum(e) == d})


def integrate(x: RingElement) -> Fraction:
    """Degree of the top-dimensional part, i.e. the coefficient of the point class."""
    return dict(x._terms).get(x.spec.top, Fraction(0))


# -- text form ------------------------------------------------------------


def _format_monomial(exps: tuple[int, ...]) -> str:
    parts = []
    for i, d in enumerate(exps, start=1):
        if d == 1:
            parts.append(f"t{i}")
        elif d > 1:
            parts.append(f"t{i}^{d}")
    return "*".join(parts)


def format_element(x: RingElement) -> str:
    if x.is_zero():
        return "0"
    out = []
    for k, (exps, c) in enumerate(x._terms):
        mono = _format_monomial(exps)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if k == 0:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(out)


_TOKEN = re.compile(r"(\d+)|t(\d+)|(\*\*|[-+*/^()])")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), pos))
        elif m.group(2) is not None:
            tokens.append(("var", int(m.group(2)), pos))
        else:
            tokens.append(("op", "^" if m.group(3) == "**" else m.group(3), pos))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    """Recursive descent over  expr := term (('+'|'-') term)*,
    term := unary (('*'|'/') unary)*, unary := '-' unary | power,
    power := atom ('^' int)?, atom := int | t<k> | '(' expr ')'."""

    def __init__(self, text: str, spec: RingSpec):
        self.spec = spec
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)

    def parse(self) -> RingElement:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        value = self.expr()
        kind, _, pos = self.peek()
        if kind != "end":
            raise ParseError("unexpected trailing input", pos)
        return value

    def expr(self):
        value = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                value = value + rhs if val == "+" else value - rhs
            else:
                return value

    def term(self):
        value = self.unary()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.unary()
                if val == "*":
                    value = value * rhs
                else:
                    try:
                        value = value / rhs
                    except ZeroDivisionError as exc:
                        raise ParseError(str(exc), pos) from None
            else:
                return value

    def unary(self):
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            inner = self.unary()
            return -inner if val == "-" else inner
        return self.power()

    def power(self):
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, k, pos = self.take()
            if kind != "int":
                raise ParseError("exponent must be a nonnegative integer", pos)
            return base ** k
        return base

    def atom(self):
        kind, val, pos = self.take()
        if kind == "int":
            return self.spec.const(val)
        if kind == "var":
            if not 1 <= val <= self.spec.nvars:
                raise ParseError(f"variable t{val} not in a ring with {self.spec.nvars} factors", pos)
            return self.spec.gen(val - 1)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError("expected a number, variable or '('", pos)


def parse_element(text: str, spec: RingSpec | None = None) -> RingElement:
    """Parse ``text`` (e.g. ``'2*t1*t2 - 1/2*t2^2'`` or ``'(t1+2*t2)^2'``)."""
    return _Parser(text, spec or make_ring([1, 2])).parse()
