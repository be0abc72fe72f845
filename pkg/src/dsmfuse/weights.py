"""Dissimilarity weights, pairwise conflict fractions and discount factors.

All functions take the focal sets of one tuple (one focal element per source)
and return exact rationals. Cardinalities are DSm cardinalities, so the model
in force when the sets were built is respected.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import reduce
from typing import Sequence

from .errors import DegenerateOperand, ValidationError, ZeroDenominator
from .frame import FocalSet


class DissimilarityChoice(str, Enum):
    DELTA_MIN = "delta_min"
    ETA_MAX = "eta_max"
    JACCARD = "jaccard"

    @classmethod
    def parse(cls, text: str) -> DissimilarityChoice:
        aliases = {"delta": cls.DELTA_MIN, "eta": cls.ETA_MAX}
        if text in aliases:
            return aliases[text]
        try:
            return cls(text)
        except ValueError:
            raise ValidationError(f"unknown dissimilarity {text!r}") from None


def _intersection(ys: Sequence[FocalSet]) -> FocalSet:
    return reduce(lambda a, b: a & b, ys)


def _union(ys: Sequence[FocalSet]) -> FocalSet:
    return reduce(lambda a, b: a | b, ys)


def dissimilarity(kind: DissimilarityChoice | str, ys: Sequence[FocalSet]) -> Fraction:
    """One minus the shared cardinality over a normalizing cardinality.

    ``delta_min`` normalizes by the smallest operand, ``eta_max`` by the
    largest and ``jaccard`` by the union. Disjoint operands give 1.
    """
    kind = DissimilarityChoice(kind)
    if not ys:
        raise ValidationError("dissimilarity needs at least one set")
    sizes = [y.cardinality() for y in ys]
    if 0 in sizes:
        raise DegenerateOperand("dissimilarity of an empty set is undefined")
    shared = _intersection(ys).cardinality()
    if kind is DissimilarityChoice.DELTA_MIN:
        denom = min(sizes)
    elif kind is DissimilarityChoice.ETA_MAX:
        denom = max(sizes)
    else:
        denom = _union(ys).cardinality()
    return 1 - Fraction(shared, denom)


def _conflicting_partners(i: int, ys: Sequence[FocalSet]) -> int:
    return sum(1 for y in ys if (y & ys[i]).is_empty())


def _need_pairs(ys: Sequence[FocalSet]) -> int:
    m = len(ys)
    if m < 2:
        raise ValidationError("conflict weights need at least two sources")
    return m


def conflict_fraction_f(i: int, ys: Sequence[FocalSet]) -> Fraction:
    """Share of the ordered source pairs in which source ``i`` conflicts."""
    m = _need_pairs(ys)
    return Fraction(_conflicting_partners(i, ys), m * (m - 1))


def alpha_global(ys: Sequence[FocalSet]) -> Fraction:
    _need_pairs(ys)
    return 1 - sum(conflict_fraction_f(i, ys) for i in range(len(ys)))


def alpha_per_source(i: int, ys: Sequence[FocalSet]) -> Fraction:
    m = _need_pairs(ys)
    return Fraction(1, m) - conflict_fraction_f(i, ys)


def gamma_coefficients(values: Sequence, algebra) -> list[Fraction]:
    """Each source's mass as a fraction of the tuple's total mass."""
    total = algebra.sum(values)
    return [algebra.ratio(v, total) for v in values]


def lambda_coefficient(alphas: Sequence[Fraction], gammas: Sequence[Fraction]) -> Fraction:
    """Scale making ``sum(a * lam * g)`` equal ``sum(a)``.

    Raises :class:`ZeroDenominator` when the scalar product vanishes; callers
    then send the whole product to the union.
    """
    dot = sum((a * g for a, g in zip(alphas, gammas)), Fraction(0))
    if dot == 0:
        raise ZeroDenominator("alpha and gamma are orthogonal")
    return sum(alphas, Fraction(0)) / dot
