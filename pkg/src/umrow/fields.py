"""Exact scalar arithmetic over the rationals and over prime fields.

Rationals are represented by ``fractions.Fraction`` (always reduced, positive
denominator); prime-field elements are residues in ``[0, p)``.  Both
representations are canonical, so equal values compare bit-identical.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Union

from .errors import ConfigError, DivisionByZero, FieldMismatch

MAX_MODULUS_BITS = 63

RawScalar = Union[Fraction, int]

_SCALAR_RE = re.compile(r"^\s*([+-]?)\s*(\d+)\s*(?:/\s*(\d+)\s*)?$")


def _is_prime(p: int) -> bool:
    # Trial division; moduli are machine-word sized by construction.
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f <= isqrt(p):
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldConfig:
    """Choice of coefficient field: the rationals or F_p for a prime p."""

    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == "rationals":
            if self.modulus is not None:
                raise ConfigError("rationals take no modulus")
        elif self.kind == "prime":
            p = self.modulus
            if not isinstance(p, int) or p <= 1:
                raise ConfigError(f"modulus must be a positive prime, got {p!r}")
            if p.bit_length() > MAX_MODULUS_BITS:
                raise ConfigError(f"modulus must fit in {MAX_MODULUS_BITS} bits")
            if not _is_prime(p):
                raise ConfigError(f"modulus {p} is not prime")
        else:
            raise ConfigError(f"unknown field kind {self.kind!r}")

    # -- structure ---------------------------------------------------------

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == "rationals" else self.modulus

    def zero(self) -> RawScalar:
        return Fraction(0) if self.kind == "rationals" else 0

    def one(self) -> RawScalar:
        return Fraction(1) if self.kind == "rationals" else 1

    def from_int(self, n: int) -> RawScalar:
        return Fraction(n) if self.kind == "rationals" else n % self.modulus

    # -- raw-value arithmetic ----------------------------------------------

    def add(self, a: RawScalar, b: RawScalar) -> RawScalar:
        return a + b if self.kind == "rationals" else (a + b) % self.modulus

    def sub(self, a: RawScalar, b: RawScalar) -> RawScalar:
        return a - b if self.kind == "rationals" else (a - b) % self.modulus

    def mul(self, a: RawScalar, b: RawScalar) -> RawScalar:
        return a * b if self.kind == "rationals" else (a * b) % self.modulus

    def neg(self, a: RawScalar) -> RawScalar:
        return -a if self.kind == "rationals" else (-a) % self.modulus

    def inv(self, a: RawScalar) -> RawScalar:
        if not a:
            raise DivisionByZero("no inverse of zero")
        if self.kind == "rationals":
            return Fraction(1) / a
        return pow(a, self.modulus - 2, self.modulus)

    def div(self, a: RawScalar, b: RawScalar) -> RawScalar:
        return self.mul(a, self.inv(b))

    @staticmethod
    def is_zero(a: RawScalar) -> bool:
        return not a

    # -- text --------------------------------------------------------------

    def parse_raw(self, text: str) -> RawScalar:
        m = _SCALAR_RE.match(text)
        if m is None:
            raise ConfigError(f"bad scalar literal {text!r}")
        sign, num, den = m.group(1), int(m.group(2)), m.group(3)
        if self.kind == "rationals":
            value = Fraction(num, int(den)) if den else Fraction(num)
            return -value if sign == "-" else value
        value = self.from_int(num)
        if den:
            value = self.div(value, self.from_int(int(den)))
        return self.neg(value) if sign == "-" else value

    def to_str(self, a: RawScalar) -> str:
        return str(a)

    def scalar(self, value) -> "Scalar":
        if isinstance(value, Scalar):
            if value.config != self:
                raise FieldMismatch(f"scalar belongs to {value.config}, not {self}")
            return value
        if isinstance(value, str):
            return Scalar(self, self.parse_raw(value))
        if isinstance(value, int):
            return Scalar(self, self.from_int(value))
        if isinstance(value, Fraction) and self.kind == "rationals":
            return Scalar(self, value)
        raise ConfigError(f"cannot coerce {value!r} into {self}")

    def __str__(self) -> str:
        return "q" if self.kind == "rationals" else f"fp:{self.modulus}"


RATIONALS = FieldConfig("rationals")


def prime_field(p: int) -> FieldConfig:
    return FieldConfig("prime", p)


def field_from_text(text: str) -> FieldConfig:
    """Parse a field spec: ``q`` or ``fp:<prime>``."""
    t = text.strip().lower()
    if t == "q":
        return RATIONALS
    if t.startswith("fp:"):
        try:
            p = int(t[3:])
        except ValueError:
            raise ConfigError(f"bad prime in field spec {text!r}") from None
        return prime_field(p)
    raise ConfigError(f"unknown field spec {text!r} (expected q or fp:<p>)")


@dataclass(frozen=True)
class Scalar:
    """An immutable field element tied to its :class:`FieldConfig`."""

    config: FieldConfig
    value: RawScalar

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.config != self.config:
                raise FieldMismatch(
                    f"operands in different fields: {self.config} vs {other.config}"
                )
            return other
        if isinstance(other, int):
            return Scalar(self.config, self.config.from_int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.config, self.config.add(self.value, other.value))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.config, self.config.sub(self.value, other.value))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.config, self.config.sub(other.value, self.value))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.config, self.config.mul(self.value, other.value))

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(self.config, self.config.neg(self.value))

    def inverse(self) -> "Scalar":
        return Scalar(self.config, self.config.inv(self.value))

    def is_zero(self) -> bool:
        return not self.value

    def __str__(self) -> str:
        return self.config.to_str(self.value)
