"""Exact scalar semirings.

Two instances are provided: the rational field (the main coefficient
domain, backed by fractions.Fraction, which already keeps values in
canonical reduced form with positive denominator) and the boolean rig
(a genericity witness with no negation and no subtraction).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .errors import ParseError

RATIONAL_RE = re.compile(r"-?[0-9]+(/[1-9][0-9]*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse `p/q` or `p` into a reduced Fraction.

    Only the strict integer-slash-positive-integer format is accepted;
    decimals and exponents are rejected so every value stays exact.
    """
    if not isinstance(text, str) or not RATIONAL_RE.match(text):
        raise ParseError(f"not a rational literal: {text!r}")
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    """Render a Fraction as `p/q`, or just `p` when the denominator is 1.

    format_rational and parse_rational are mutually inverse bit-exactly.
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _coerce_rational(value) -> Fraction:
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {value!r} as an exact rational scalar")


def _coerce_boolean(value) -> bool:
    if isinstance(value, bool):
        return value
    if value in (0, 1):
        return bool(value)
    raise TypeError(f"cannot use {value!r} as a boolean scalar")


@dataclass(frozen=True)
class Semiring:
    """A commutative semiring of scalar weights.

    `neg` is present exactly when the semiring is a ring; `inv` is a
    partial multiplicative inverse (defined away from zero) present when
    division makes sense. `coerce` canonicalizes user input and rejects
    inexact values such as floats.
    """

    name: str
    zero: object
    one: object
    add: Callable = field(compare=False)
    mul: Callable = field(compare=False)
    coerce: Callable = field(compare=False)
    neg: Optional[Callable] = field(default=None, compare=False)
    inv: Optional[Callable] = field(default=None, compare=False)

    @property
    def is_ring(self) -> bool:
        return self.neg is not None

    @property
    def has_inverses(self) -> bool:
        return self.inv is not None

    def sub(self, a, b):
        if self.neg is None:
            raise TypeError(f"{self.name} semiring has no subtraction")
        return self.add(a, self.neg(b))

    def sum(self, values):
        acc = self.zero
        for v in values:
            acc = self.add(acc, v)
        return acc

    def __repr__(self):
        return f"Semiring({self.name})"


def _rational_inv(a: Fraction) -> Fraction:
    if a == 0:
        raise ZeroDivisionError("rational inverse of zero")
    return 1 / Fraction(a)


RATIONALS = Semiring(
    name="rational",
    zero=Fraction(0),
    one=Fraction(1),
    add=lambda a, b: a + b,
    mul=lambda a, b: a * b,
    coerce=_coerce_rational,
    neg=lambda a: -a,
    inv=_rational_inv,
)

BOOLEANS = Semiring(
    name="boolean",
    zero=False,
    one=True,
    add=lambda a, b: a or b,
    mul=lambda a, b: a and b,
    coerce=_coerce_boolean,
)
