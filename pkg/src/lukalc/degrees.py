"""Exact rational truth degrees and the Lukasiewicz operations on them.

Every truth value in the toolkit is a reduced fraction in [0, 1].  All
operations below are total on that interval and never leave it, so results
are compared with ``==`` throughout; there is no floating point and no
tolerance anywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ValidationError

__all__ = [
    "Degree",
    "DegreeRangeError",
    "ZERO",
    "ONE",
    "parse_degree",
    "tnorm",
    "tconorm",
    "negation",
    "implication",
    "scale",
]


class DegreeRangeError(ValidationError):
    """A rational fell outside the truth-value interval [0, 1]."""


@dataclass(frozen=True, order=True)
class Degree:
    """An exact rational truth degree in [0, 1].

    Stored as a reduced ``Fraction``, so equality and ordering are exact.
    Floats are rejected outright: binary rounding would silently break the
    exact identities the rest of the toolkit depends on.  Out-of-range
    values raise instead of clamping.
    """

    value: Fraction

    def __post_init__(self):
        if isinstance(self.value, float):
            raise TypeError("Degree takes Fraction or int, not float")
        if not isinstance(self.value, Fraction):
            object.__setattr__(self, "value", Fraction(self.value))
        if not 0 <= self.value <= 1:
            raise DegreeRangeError(f"degree {self.value} outside [0, 1]")

    @classmethod
    def from_ratio(cls, numerator: int, denominator: int = 1) -> "Degree":
        return cls(Fraction(numerator, denominator))

    def __str__(self) -> str:
        # Fraction already prints the canonical reduced form: "0", "1", "p/q".
        return str(self.value)


ZERO = Degree(Fraction(0))
ONE = Degree(Fraction(1))

_DEGREE_RE = re.compile(r"\A(\d+)(?:/([1-9]\d*))?\Z")


def parse_degree(text: str) -> Degree:
    """Parse ``p/q``, ``0`` or ``1`` into a Degree.

    Rejects signs, decimals and whitespace; range errors (``3/2``) surface
    as DegreeRangeError.
    """
    match = _DEGREE_RE.match(text)
    if match is None:
        raise ValidationError(f"not a degree literal: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) else 1
    return Degree(Fraction(numerator, denominator))


def tnorm(a: Degree, b: Degree) -> Degree:
    """Strong conjunction: max(0, a + b - 1)."""
    total = a.value + b.value - 1
    return Degree(total) if total > 0 else ZERO


def tconorm(a: Degree, b: Degree) -> Degree:
    """Strong disjunction: min(1, a + b)."""
    total = a.value + b.value
    return Degree(total) if total < 1 else ONE


def negation(a: Degree) -> Degree:
    """Involutive negation: 1 - a."""
    return Degree(1 - a.value)


def implication(a: Degree, b: Degree) -> Degree:
    """Residuum of the t-norm: min(1, 1 - a + b).

    This is the unique operation with tnorm(a, c) <= b iff c <= implication(a, b).
    """
    total = 1 - a.value + b.value
    return Degree(total) if total < 1 else ONE


def scale(n: int, a: Degree) -> Degree:
    """n-fold strong disjunction of a with itself: min(1, n * a)."""
    if n < 1:
        raise ValidationError(f"scale count must be at least 1, got {n}")
    total = n * a.value
    return Degree(total) if total < 1 else ONE
