"""Qualitative masses as linguistic labels with exact rational indices.

Labels ``L_0 .. L_{n+1}`` are equidistant, so ``L_i`` behaves like the number
``i/(n+1)``. Every q-operator keeps the index as an exact ``Fraction``; an
index may go negative (q-subtraction) or above ``n+1`` until
:meth:`Label.approximate` is called, which is the only place rounding and
clamping happen.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from numbers import Rational
from typing import Iterable

from .errors import DivisionByZeroLabel, ScaleMismatch, ValidationError

_LITERAL_RE = re.compile(r"\s*(-?)\s*L_?\{?(\d+(?:\.\d+)?)(?:/(\d+(?:\.\d+)?))?\}?\s*")


def exact(value) -> Fraction:
    """Convert a scalar to an exact rational; floats go through their repr."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational, Decimal)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ValidationError(f"not an exact number: {value!r}") from None
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


@dataclass(frozen=True)
class LabelScale:
    """``n`` interior labels plus the bounds ``L_0`` and ``L_{n+1}``."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValidationError(f"label scale needs n >= 2 interior labels, got {self.n!r}")

    @property
    def top(self) -> int:
        return self.n + 1

    def __call__(self, index) -> Label:
        return Label(exact(index), self.n)

    @property
    def min(self) -> Label:
        return Label(Fraction(0), self.n)

    @property
    def max(self) -> Label:
        return Label(Fraction(self.top), self.n)


@dataclass(frozen=True)
class Label:
    index: Fraction
    n: int

    def __post_init__(self):
        if not isinstance(self.index, Fraction):
            object.__setattr__(self, "index", exact(self.index))

    @property
    def scale(self) -> LabelScale:
        return LabelScale(self.n)

    def _check(self, other: Label) -> None:
        if self.n != other.n:
            raise ScaleMismatch(f"labels on scales n={self.n} and n={other.n} cannot be combined")

    def __add__(self, other):
        if not isinstance(other, Label):
            return NotImplemented
        self._check(other)
        return Label(self.index + other.index, self.n)

    def __sub__(self, other):
        if not isinstance(other, Label):
            return NotImplemented
        self._check(other)
        return Label(self.index - other.index, self.n)

    def __neg__(self):
        return Label(-self.index, self.n)

    def __mul__(self, other):
        if isinstance(other, Label):
            self._check(other)
            return Label(self.index * other.index / (self.n + 1), self.n)
        if isinstance(other, (int, Rational, Decimal)):
            return Label(exact(other) * self.index, self.n)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Label):
            return NotImplemented
        return self.__mul__(other)

    def __truediv__(self, other):
        """Internal division: the result is again a label."""
        if not isinstance(other, Label):
            return NotImplemented
        self._check(other)
        if other.index == 0:
            raise DivisionByZeroLabel("division by L_0")
        return Label(self.index / other.index * (self.n + 1), self.n)

    def ratio(self, other: Label) -> Fraction:
        """External division: ``L_i / L_j`` as the plain number ``i/j``."""
        self._check(other)
        if other.index == 0:
            raise DivisionByZeroLabel("division by L_0")
        return self.index / other.index

    def approximate(self) -> Label:
        """Nearest integer index (halves round up), clamped to ``[0, n+1]``."""
        i = math.floor(self.index + Fraction(1, 2))
        return Label(Fraction(min(max(i, 0), self.n + 1)), self.n)

    def to_real(self) -> Fraction:
        return self.index / (self.n + 1)

    def is_zero(self) -> bool:
        return self.index == 0

    def __lt__(self, other: Label) -> bool:
        self._check(other)
        return self.index < other.index

    def __le__(self, other: Label) -> bool:
        self._check(other)
        return self.index <= other.index

    def __str__(self) -> str:
        sign = "-" if self.index < 0 else ""
        return f"{sign}L{abs(self.index)}"


def q_add(a: Label, b: Label) -> Label:
    return a + b


def q_sub(a: Label, b: Label) -> Label:
    return a - b


def q_mul(a: Label, b: Label) -> Label:
    return a * b


def q_scalar_mul(a, x: Label) -> Label:
    return exact(a) * x


def q_div_internal(a: Label, b: Label) -> Label:
    return a / b


def q_div_external(a: Label, b: Label) -> Fraction:
    return a.ratio(b)


def approximate(x: Label) -> Label:
    return x.approximate()


def quasi_normalized(masses: Iterable[Label]) -> bool:
    """True when the indices sum to exactly ``n+1``."""
    masses = list(masses)
    if not masses:
        return False
    total = masses[0]
    for m in masses[1:]:
        total = total + m
    return total.index == total.n + 1


def parse_label(text: str, n: int) -> Label:
    """Parse ``L3``, ``L7/2``, ``L2.5``, ``L13.52/6`` or ``-L1``."""
    m = _LITERAL_RE.fullmatch(text)
    if not m:
        raise ValidationError(f"not a label literal: {text!r}")
    index = Fraction(m.group(2))
    if m.group(3) is not None:
        den = Fraction(m.group(3))
        if den == 0:
            raise ValidationError(f"zero denominator in label literal {text!r}")
        index /= den
    return Label(-index if m.group(1) else index, n)
