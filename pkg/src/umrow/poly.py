"""Sparse multivariate polynomials with exact coefficients.

A monomial is an exponent tuple whose length equals the ambient ring's
variable count.  Term maps never store zero coefficients, so structural
equality of the term dictionaries is semantic equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DuplicateVariable, ParseError, RingMismatch
from .fields import FieldConfig, Scalar

Monomial = tuple  # tuple[int, ...]


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order: lex or graded reverse lex, with a precedence
    permutation listing variable indices from most to least significant."""

    kind: str
    precedence: tuple

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if sorted(self.precedence) != list(range(len(self.precedence))):
            raise ValueError("precedence must be a permutation of variable indices")

    def key(self, m: Monomial):
        """Sort key; larger key means larger monomial."""
        if self.kind == "lex":
            return tuple(m[i] for i in self.precedence)
        return (sum(m), tuple(-m[i] for i in reversed(self.precedence)))

    def greater(self, a: Monomial, b: Monomial) -> bool:
        return self.key(a) > self.key(b)


def lex(nvars: int, precedence: Sequence[int] | None = None) -> MonomialOrder:
    return MonomialOrder("lex", tuple(precedence) if precedence else tuple(range(nvars)))


def grevlex(nvars: int, precedence: Sequence[int] | None = None) -> MonomialOrder:
    return MonomialOrder("grevlex", tuple(precedence) if precedence else tuple(range(nvars)))


def make_order(kind: str, nvars: int) -> MonomialOrder:
    if kind == "lex":
        return lex(nvars)
    if kind == "grevlex":
        return grevlex(nvars)
    raise ValueError(f"unknown order kind {kind!r}")


class PolyRing:
    """A polynomial ring: coefficient field, named variables, default order."""

    __slots__ = ("field", "vars", "order", "_index")

    def __init__(self, field: FieldConfig, variables: Sequence[str], order="grevlex"):
        names = tuple(variables)
        if len(set(names)) != len(names):
            raise DuplicateVariable(f"repeated variable name in {names}")
        self.field = field
        self.vars = names
        self.order = make_order(order, len(names)) if isinstance(order, str) else order
        self._index = {name: i for i, name in enumerate(names)}

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.vars == other.vars
        )

    def __hash__(self):
        return hash((self.field, self.vars))

    def __repr__(self):
        return f"PolyRing({self.field}, {list(self.vars)})"

    # -- constructors --------------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: self.field.one()})

    def const(self, value) -> "Polynomial":
        raw = self.field.scalar(value).value
        if not raw:
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: raw})

    def var(self, name_or_index) -> "Polynomial":
        if isinstance(name_or_index, str):
            if name_or_index not in self._index:
                raise KeyError(f"no variable {name_or_index!r} in {self.vars}")
            i = self._index[name_or_index]
        else:
            i = name_or_index
        mono = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, {mono: self.field.one()})

    def gens(self) -> tuple:
        return tuple(self.var(i) for i in range(self.nvars))

    def from_terms(self, terms: dict) -> "Polynomial":
        clean = {}
        width = self.nvars
        for mono, coeff in terms.items():
            mono = tuple(mono)
            if len(mono) != width:
                raise RingMismatch(f"monomial width {len(mono)} != {width}")
            if coeff:
                clean[mono] = coeff
        return Polynomial(self, clean)

    def parse(self, text: str) -> "Polynomial":
        return _parse(self, text)

    def with_extra_vars(self, names: Iterable[str]) -> "PolyRing":
        return PolyRing(self.field, self.vars + tuple(names), self.order.kind)


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps monomials to nonzero
    raw coefficients and must never be mutated after construction."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def constant_value(self):
        """Raw coefficient if the polynomial is a constant, else None."""
        if not self.terms:
            return self.ring.field.zero()
        if len(self.terms) == 1:
            (mono, coeff), = self.terms.items()
            if not any(mono):
                return coeff
        return None

    def lead(self, order: MonomialOrder | None = None):
        """Leading (monomial, coefficient) under ``order``; None when zero."""
        if not self.terms:
            return None
        order = order or self.ring.order
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def coeff(self, mono: Monomial):
        return self.terms.get(tuple(mono), self.ring.field.zero())

    # -- arithmetic --------------------------------------------------------

    def _check(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"{other.ring} != {self.ring}")
            return other
        if isinstance(other, (int, Scalar)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        add = self.ring.field.add
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = add(out[m], c) if m in out else c
            if v:
                out[m] = v
            elif m in out:
                del out[m]
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial(self.ring, {m: neg(c) for m, c in self.terms.items()})

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        field = self.ring.field
        mul, add = field.mul, field.add
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                v = mul(c1, c2)
                if m in out:
                    v = add(out[m], v)
                if v:
                    out[m] = v
                elif m in out:
                    del out[m]
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, exp: int):
        if exp < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base if exp > 1 else base
            exp >>= 1
        return result

    def scale(self, raw) -> "Polynomial":
        """Multiply by a raw field element."""
        if not raw:
            return self.ring.zero()
        mul = self.ring.field.mul
        return Polynomial(self.ring, {m: mul(c, raw) for m, c in self.terms.items()})

    def mul_term(self, mono: Monomial, raw) -> "Polynomial":
        """Multiply by ``raw * x^mono``."""
        if not raw:
            return self.ring.zero()
        mul = self.ring.field.mul
        return Polynomial(
            self.ring,
            {tuple(x + y for x, y in zip(m, mono)): mul(c, raw) for m, c in self.terms.items()},
        )

    def extend(self, new_ring: PolyRing) -> "Polynomial":
        """Reinterpret in a ring whose variables extend this ring's list."""
        if new_ring.field != self.ring.field or new_ring.vars[: self.ring.nvars] != self.ring.vars:
            raise RingMismatch("target ring does not extend the source ring")
        pad = (0,) * (new_ring.nvars - self.ring.nvars)
        return Polynomial(new_ring, {m + pad: c for m, c in self.terms.items()})

    # -- equality & text ---------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Scalar)):
                return self == self.ring.const(other)
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def sorted_terms(self, order: MonomialOrder | None = None):
        order = order or self.ring.order
        return sorted(self.terms.items(), key=lambda mc: order.key(mc[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        field = self.ring.field
        names = self.ring.vars
        chunks = []
        for mono, coeff in self.sorted_terms():
            parts = []
            for i, e in enumerate(mono):
                if e == 1:
                    parts.append(names[i])
                elif e > 1:
                    parts.append(f"{names[i]}^{e}")
            negative = field.kind == "rationals" and coeff < 0
            mag = -coeff if negative else coeff
            if not parts:
                body = field.to_str(mag)
            elif mag == field.one():
                body = "*".join(parts)
            else:
                body = field.to_str(mag) + "*" + "*".join(parts)
            if not chunks:
                chunks.append(("-" if negative else "") + body)
            else:
                chunks.append(("- " if negative else "+ ") + body)
        return " ".join(chunks)

    def __repr__(self):
        return f"<{self}>"


# -- parsing ----------------------------------------------------------------

_TOKEN = re.compile(r"(?P<ws>\s+)|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()])")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), m.start()))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, ring: PolyRing, text: str):
        self.ring = ring
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expr(self) -> Polynomial:
        sign = 1
        kind, text, _ = self.peek()
        if kind == "op" and text in "+-":
            self.take()
            sign = -1 if text == "-" else 1
        result = self.term()
        if sign < 0:
            result = -result
        while True:
            kind, text, off = self.peek()
            if kind == "op" and text in "+-":
                self.take()
                nxt = self.term()
                result = result - nxt if text == "-" else result + nxt
            elif kind == "end" or (kind == "op" and text == ")"):
                return result
            else:
                raise ParseError(f"expected operator, found {text!r}", off)

    def term(self) -> Polynomial:
        result = self.factor()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text == "*":
                self.take()
                result = result * self.factor()
            else:
                return result

    def factor(self) -> Polynomial:
        base = self.atom()
        kind, text, off = self.peek()
        if kind == "op" and text == "^":
            self.take()
            kind, text, off = self.take()
            if kind != "int":
                raise ParseError("exponent must be a non-negative integer", off)
            return base ** int(text)
        return base

    def atom(self) -> Polynomial:
        kind, text, off = self.take()
        if kind == "int":
            raw = self.ring.field.from_int(int(text))
            kind2, text2, _ = self.peek()
            if kind2 == "op" and text2 == "/":
                self.take()
                kind3, text3, off3 = self.take()
                if kind3 != "int":
                    raise ParseError("denominator must be an integer", off3)
                raw = self.ring.field.div(raw, self.ring.field.from_int(int(text3)))
            poly = self.ring.zero()
            if raw:
                poly = Polynomial(self.ring, {(0,) * self.ring.nvars: raw})
            return poly
        if kind == "name":
            if text not in self.ring._index:
                raise ParseError(f"unknown variable {text!r}", off)
            return self.ring.var(text)
        if kind == "op" and text == "(":
            inner = self.expr()
            kind2, text2, off2 = self.take()
            if not (kind2 == "op" and text2 == ")"):
                raise ParseError("expected ')'", off2)
            return inner
        raise ParseError(f"unexpected token {text!r}", off)


def _parse(ring: PolyRing, text: str) -> Polynomial:
    parser = _Parser(ring, text)
    result = parser.expr()
    kind, text_, off = parser.peek()
    if kind != "end":
        raise ParseError(f"trailing input {text_!r}", off)
    return result
