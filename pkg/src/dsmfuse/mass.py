"""Mass functions over a pluggable value algebra.

Quantitative masses are ``Fraction`` values; qualitative masses are
:class:`~dsmfuse.labels.Label` values. Both support ``+``, ``-``, ``*``,
``/`` and multiplication by an exact scalar, so the combination rules are
written once against those operators. An :class:`Algebra` supplies what the
operators cannot: the zero and unit values, the ratio of two values as a
plain rational, and the mapping to a real number for reporting.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import (
    AlphaOutOfRange,
    DuplicateFocal,
    FrameMismatch,
    NegativeMass,
    TotalMassOnEmpty,
    ValidationError,
)
from .frame import EMPTY, EMPTY_SYMBOL, FocalSet, Model
from .labels import Label, LabelScale, exact


class Algebra:
    qualitative = False

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def is_zero(self, v) -> bool:
        return self.to_real(v) == 0

    def to_real(self, v) -> Fraction:
        raise NotImplementedError

    def from_real(self, x: Fraction):
        raise NotImplementedError

    def ratio(self, a, b) -> Fraction:
        raise NotImplementedError

    def sum(self, values: Iterable):
        total = self.zero()
        for v in values:
            total = total + v
        return total

    def product(self, values: Iterable):
        out = self.one()
        for v in values:
            out = out * v
        return out


class RationalAlgebra(Algebra):
    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def is_zero(self, v) -> bool:
        return v == 0

    def to_real(self, v) -> Fraction:
        return Fraction(v)

    def from_real(self, x) -> Fraction:
        return exact(x)

    def ratio(self, a, b) -> Fraction:
        return Fraction(a) / Fraction(b)

    def __eq__(self, other):
        return isinstance(other, RationalAlgebra)

    def __hash__(self):
        return hash(RationalAlgebra)

    def __repr__(self):
        return "RationalAlgebra()"


@dataclass(frozen=True)
class LabelAlgebra(Algebra):
    n: int
    qualitative = True

    def __post_init__(self):
        LabelScale(self.n)

    def zero(self) -> Label:
        return Label(Fraction(0), self.n)

    def one(self) -> Label:
        return Label(Fraction(self.n + 1), self.n)

    def is_zero(self, v: Label) -> bool:
        return v.index == 0

    def to_real(self, v: Label) -> Fraction:
        return v.to_real()

    def from_real(self, x) -> Label:
        return Label(exact(x) * (self.n + 1), self.n)

    def ratio(self, a: Label, b: Label) -> Fraction:
        return a.ratio(b)


RATIONAL = RationalAlgebra()


@dataclass(frozen=True)
class MassFunction:
    """Focal sets with non-zero mass.

    Zero entries are dropped at construction. In a closed world the empty set
    may not carry mass; an entry whose expression evaluates to the empty set
    under the model is rejected.
    """

    model: Model
    entries: Mapping[FocalSet, object]
    algebra: Algebra = RATIONAL
    world: str = "closed"
    _items: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.world not in ("closed", "open"):
            raise ValidationError(f"world must be 'closed' or 'open', got {self.world!r}")
        items = []
        for focal, value in self.entries.items():
            if not isinstance(focal, FocalSet):
                raise TypeError("mass entries must be keyed by FocalSet")
            if focal.bits & ~self.model.allowed:
                raise ValidationError("focal set contains regions forbidden by the model")
            if self.algebra.to_real(value) < 0:
                raise NegativeMass(f"negative mass {value} on {self.model.display(focal)}")
            if self.algebra.is_zero(value):
                continue
            if focal.is_empty() and self.world == "closed":
                raise ValidationError("closed-world mass on the empty set")
            items.append((focal, value))
        items.sort(key=lambda kv: kv[0].bits)
        object.__setattr__(self, "entries", dict(items))
        object.__setattr__(self, "_items", tuple(items))

    @classmethod
    def from_pairs(cls, model: Model, pairs: Iterable[tuple[str, object]], algebra: Algebra = RATIONAL,
                   world: str = "closed") -> MassFunction:
        """Build from ``(expression, value)`` pairs, e.g. ``[("A|B", Fraction(1, 3))]``.

        Values may be anything the algebra accepts: numbers or decimal/fraction
        strings for rationals, labels or label literals for label masses.
        """
        from .labels import parse_label

        entries: dict[FocalSet, object] = {}
        for expr, raw in pairs:
            focal = EMPTY if expr.strip() == EMPTY_SYMBOL else model.focal(expr)
            if isinstance(algebra, LabelAlgebra):
                value = parse_label(raw, algebra.n) if isinstance(raw, str) else raw
            else:
                value = exact(raw)
            if focal.is_empty() and world == "closed" and not algebra.is_zero(value):
                raise ValidationError(f"mass on {expr!r}, which is empty under the {model.kind} model")
            if focal in entries:
                raise DuplicateFocal(f"{expr!r} denotes the same set as an earlier entry")
            entries[focal] = value
        return cls(model, entries, algebra, world)

    @property
    def frame(self):
        return self.model.frame

    def items(self):
        return self._items

    def focals(self) -> list[FocalSet]:
        return [f for f, _ in self._items]

    def __getitem__(self, focal: FocalSet):
        return self.entries.get(focal, self.algebra.zero())

    def __len__(self):
        return len(self._items)

    def total(self):
        return self.algebra.sum(v for _, v in self._items)

    def as_text(self) -> dict[str, str]:
        return {self.model.display(f): str(v) for f, v in self._items}


@dataclass(frozen=True)
class ValidationReport:
    normalized: bool
    quasi_normalized: bool
    empty_mass: object


def validate(m: MassFunction) -> ValidationReport:
    total = m.total()
    unit = m.algebra.to_real(total) == 1
    return ValidationReport(normalized=unit, quasi_normalized=unit, empty_mass=m[EMPTY])


def check_compatible(ms: Iterable[MassFunction]) -> list[MassFunction]:
    ms = list(ms)
    if not ms:
        raise ValueError("no sources given")
    first = ms[0]
    for m in ms[1:]:
        if m.model != first.model:
            raise FrameMismatch("sources are defined on different frames or models")
        if m.algebra != first.algebra:
            raise FrameMismatch("sources mix quantitative and qualitative masses")
    return ms


def bel(m: MassFunction, x: FocalSet):
    return m.algebra.sum(v for y, v in m.items() if not y.is_empty() and y <= x)


def pl(m: MassFunction, x: FocalSet):
    return m.algebra.sum(v for y, v in m.items() if not (y & x).is_empty())


def betp(m: MassFunction, x: FocalSet):
    """Pignistic probability, with DSm cardinality as the size of a set."""
    alg = m.algebra
    rest = alg.one() - m[EMPTY]
    if alg.is_zero(rest):
        raise TotalMassOnEmpty("all mass is on the empty set")
    acc = alg.zero()
    for y, v in m.items():
        if y.is_empty():
            continue
        acc = acc + Fraction((x & y).cardinality(), y.cardinality()) * v
    return acc / rest


def discount(m: MassFunction, alpha) -> MassFunction:
    alpha = exact(alpha)
    if not 0 <= alpha <= 1:
        raise AlphaOutOfRange(f"discount factor {alpha} outside [0, 1]")
    theta = m.model.theta
    entries = {f: alpha * v for f, v in m.items()}
    entries[theta] = entries.get(theta, m.algebra.zero()) + (1 - alpha) * m.algebra.one()
    return MassFunction(m.model, entries, m.algebra, m.world)


def total_conflict(ms: Iterable[MassFunction]):
    """Mass the conjunctive combination of all sources puts on the empty set."""
    ms = check_compatible(ms)
    alg = ms[0].algebra
    k = alg.zero()
    for combo in itertools.product(*(m.items() for m in ms)):
        inter = combo[0][0]
        for f, _ in combo[1:]:
            inter = inter & f
        if inter.is_empty():
            k = k + alg.product(v for _, v in combo)
    return k
