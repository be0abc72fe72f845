"""Combination rules.

Every rule walks the Cartesian product of the sources' focal elements. For
each tuple it forms the product of the masses and decides where that product
goes: the intersection, the union, the whole frame, or back to the tuple's
own focal elements in proportion to their masses. The destinations and
shares of each tuple are kept in a ledger so the redistribution can be
audited; the shares of a tuple always add up to its product exactly.

Rules only use ``+``, ``-``, ``*``, ``/`` and scalar multiplication on mass
values, so the same code fuses rationals and linguistic labels.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Callable, Sequence

from .errors import AlphaOutOfRange, PreconditionError, TotalConflict, ValidationError, ZeroDenominator
from .frame import EMPTY, FocalSet
from .labels import exact
from .mass import MassFunction, check_compatible
from .weights import (
    DissimilarityChoice,
    alpha_global,
    alpha_per_source,
    dissimilarity,
    gamma_coefficients,
    lambda_coefficient,
)

RULE_NAMES = (
    "disjunctive", "conjunctive", "dempster", "tbm", "yager", "dubois_prade", "florea",
    "mix", "pcr5", "pcr6", "dpcr", "dpcr_lambda", "mdpcr",
)


@dataclass(frozen=True)
class AlphaPolicy:
    """How much of a conflicting product goes back to its sources.

    ``fixed`` uses one constant, ``global`` derives it per tuple from how many
    source pairs conflict, and ``lambda`` weights each source separately.
    """

    kind: str
    value: Fraction | None = None

    def __post_init__(self):
        if self.kind not in ("fixed", "global", "lambda"):
            raise ValidationError(f"unknown alpha policy {self.kind!r}")
        if self.kind == "fixed":
            v = exact(self.value)
            if not 0 <= v <= 1:
                raise AlphaOutOfRange(f"alpha {v} outside [0, 1]")
            object.__setattr__(self, "value", v)

    @classmethod
    def fixed(cls, alpha) -> AlphaPolicy:
        return cls("fixed", exact(alpha))

    @classmethod
    def global_f(cls) -> AlphaPolicy:
        return cls("global")

    @classmethod
    def per_source_lambda(cls) -> AlphaPolicy:
        return cls("lambda")

    @classmethod
    def parse(cls, text: str) -> AlphaPolicy:
        """``fixed:0.9``, ``fixed:3/4``, ``global`` or ``lambda``."""
        if text.startswith("fixed:"):
            return cls.fixed(exact(text[len("fixed:"):]))
        if text in ("global", "lambda"):
            return cls(text)
        raise ValidationError(f"bad alpha policy {text!r}; use fixed:R, global or lambda")

    def __str__(self):
        return f"fixed:{self.value}" if self.kind == "fixed" else self.kind


@dataclass(frozen=True)
class RuleConfig:
    rule: str
    dissimilarity: DissimilarityChoice = DissimilarityChoice.DELTA_MIN
    alpha: AlphaPolicy | None = None
    approximate_output: bool = False

    def __post_init__(self):
        if self.rule not in RULE_NAMES:
            raise ValidationError(f"unknown rule {self.rule!r}")
        object.__setattr__(self, "dissimilarity", DissimilarityChoice(self.dissimilarity))
        if self.rule == "dpcr_lambda":
            if self.alpha is None:
                object.__setattr__(self, "alpha", AlphaPolicy.per_source_lambda())
            elif self.alpha.kind != "lambda":
                raise ValidationError("dpcr_lambda only works with the lambda alpha policy")


@dataclass(frozen=True)
class LedgerEntry:
    focals: tuple[FocalSet, ...]
    product: object
    shares: tuple[tuple[FocalSet, object], ...]


@dataclass(frozen=True)
class FusionResult:
    mass: MassFunction
    conflict_k: object
    ledger: list[LedgerEntry] = field(default_factory=list, repr=False)
    rule: str = ""


@dataclass(frozen=True)
class _Tuple:
    focals: tuple[FocalSet, ...]
    values: tuple
    product: object
    inter: FocalSet
    union: FocalSet

    @property
    def conflicting(self) -> bool:
        return self.inter.is_empty()


Distributor = Callable[[_Tuple], list]
Weight = Callable[[tuple[FocalSet, ...]], Fraction]


def _tuples(ms: Sequence[MassFunction]):
    alg = ms[0].algebra
    for combo in itertools.product(*(m.items() for m in ms)):
        focals = tuple(f for f, _ in combo)
        values = tuple(v for _, v in combo)
        yield _Tuple(
            focals,
            values,
            alg.product(values),
            reduce(lambda a, b: a & b, focals),
            reduce(lambda a, b: a | b, focals),
        )


def _run(ms: Sequence[MassFunction], distribute: Distributor, name: str) -> FusionResult:
    alg = ms[0].algebra
    acc: dict[FocalSet, object] = defaultdict(alg.zero)
    ledger = []
    k = alg.zero()
    for t in _tuples(ms):
        if t.conflicting:
            k = k + t.product
        shares = distribute(t)
        for dest, share in shares:
            acc[dest] = acc[dest] + share
        ledger.append(LedgerEntry(t.focals, t.product, tuple(shares)))
    has_empty = not alg.is_zero(acc.get(EMPTY, alg.zero()))
    world = "open" if has_empty else ms[0].world
    mass = MassFunction(ms[0].model, dict(acc), alg, world)
    return FusionResult(mass, k, ledger, name)


def _sources(ms, minimum=2, exactly=None, closed=False, name="") -> list[MassFunction]:
    ms = check_compatible(ms)
    if exactly is not None and len(ms) != exactly:
        raise PreconditionError(f"{name} combines exactly {exactly} sources, got {len(ms)}")
    if len(ms) < minimum:
        raise PreconditionError(f"{name} needs at least {minimum} sources, got {len(ms)}")
    if closed and any(m.world != "closed" for m in ms):
        raise PreconditionError(f"{name} requires closed-world sources")
    return ms


def _to_intersection(t: _Tuple) -> list:
    return [(t.inter, t.product)]


def _delta_split(t: _Tuple, kind: DissimilarityChoice | Weight) -> list:
    """Send ``delta * product`` to the union and the rest to the intersection."""
    d = kind(t.focals) if callable(kind) else dissimilarity(kind, t.focals)
    if d == 0:
        return [(t.inter, t.product)]
    if d == 1:
        return [(t.union, t.product)]
    return [(t.union, d * t.product), (t.inter, (1 - d) * t.product)]


def _proportional(t: _Tuple, algebra) -> list:
    """Product split among the tuple's focal elements in proportion to their masses."""
    total = algebra.sum(t.values)
    if algebra.is_zero(total):
        return []
    per_unit = t.product / total
    return [(y, v * per_unit) for y, v in zip(t.focals, t.values)]


def _discounted(t: _Tuple, policy: AlphaPolicy, algebra) -> list:
    if policy.kind == "lambda":
        return _lambda_shares(t, algebra)
    alpha = policy.value if policy.kind == "fixed" else alpha_global(t.focals)
    shares = [(y, alpha * s) for y, s in _proportional(t, algebra)] if alpha else []
    if alpha != 1:
        shares.append((t.union, (1 - alpha) * t.product))
    return shares


def _lambda_shares(t: _Tuple, algebra) -> list:
    alphas = [alpha_per_source(i, t.focals) for i in range(len(t.focals))]
    gammas = gamma_coefficients(t.values, algebra)
    try:
        lam = lambda_coefficient(alphas, gammas)
    except ZeroDenominator:
        return [(t.union, t.product)]
    shares = [(y, a * lam * g * t.product) for y, a, g in zip(t.focals, alphas, gammas) if a]
    rest = 1 - sum(alphas, Fraction(0))
    if rest:
        shares.append((t.union, rest * t.product))
    return shares


# --- rules ------------------------------------------------------------------

def disjunctive(ms) -> FusionResult:
    ms = _sources(ms, name="disjunctive")
    return _run(ms, lambda t: [(t.union, t.product)], "disjunctive")


def conjunctive(ms) -> FusionResult:
    """Unnormalized conjunctive rule; the conflict stays on the empty set."""
    ms = _sources(ms, name="conjunctive")
    return _run(ms, _to_intersection, "conjunctive")


def tbm_smets(ms) -> FusionResult:
    ms = _sources(ms, name="tbm")
    return _run(ms, _to_intersection, "tbm")


def _conjunctive_support(ms) -> tuple[dict, object]:
    """Non-empty conjunctive masses and their sum."""
    alg = ms[0].algebra
    conj = conjunctive(ms).mass
    support = {f: v for f, v in conj.items() if not f.is_empty()}
    return support, alg.sum(support.values())


def _dempster_shares(t: _Tuple, support: dict, total) -> list:
    if not t.conflicting:
        return [(t.inter, t.product)]
    return [(x, t.product * (c / total)) for x, c in support.items()]


def dempster(ms) -> FusionResult:
    """Conjunctive rule with the conflict spread over the non-empty sets in proportion to their mass."""
    ms = _sources(ms, closed=True, name="dempster")
    support, total = _conjunctive_support(ms)
    if ms[0].algebra.is_zero(total):
        raise TotalConflict("the sources are in total conflict (k = 1)")
    return _run(ms, lambda t: _dempster_shares(t, support, total), "dempster")


def yager(ms) -> FusionResult:
    ms = _sources(ms, closed=True, name="yager")
    theta = ms[0].model.theta
    return _run(ms, lambda t: [(theta if t.conflicting else t.inter, t.product)], "yager")


def dubois_prade(ms) -> FusionResult:
    ms = _sources(ms, closed=True, name="dubois_prade")
    return _run(ms, lambda t: [(t.union if t.conflicting else t.inter, t.product)], "dubois_prade")


def florea_weights(k: Fraction) -> tuple[Fraction, Fraction]:
    """Weights of the disjunctive and conjunctive parts for conflict ``k``."""
    k = Fraction(k)
    d = 1 - k + k * k
    return k / d, (1 - k) / d


def florea(ms) -> FusionResult:
    """Conflict-weighted blend of the disjunctive rule and the normalized conjunctive rule."""
    ms = _sources(ms, exactly=2, closed=True, name="florea")
    alg = ms[0].algebra
    support, total = _conjunctive_support(ms)
    k = alg.to_real(conjunctive(ms).conflict_k)
    beta1, _ = florea_weights(k)

    def distribute(t: _Tuple) -> list:
        shares = [(t.union, beta1 * t.product)] if beta1 else []
        if beta1 != 1:
            rest = (1 - beta1) * t.product
            if t.conflicting:
                shares += [(x, rest * (c / total)) for x, c in support.items()]
            else:
                shares.append((t.inter, rest))
        return shares

    return _run(ms, distribute, "florea")


def mix(ms, kind: DissimilarityChoice | str | Weight = DissimilarityChoice.DELTA_MIN) -> FusionResult:
    """Split every product between the union and the intersection of its tuple.

    ``kind`` names a dissimilarity, or is any function from the tuple's focal
    sets to a weight in [0, 1].
    """
    ms = _sources(ms, name="mix")
    if not callable(kind):
        kind = DissimilarityChoice(kind)
    return _run(ms, lambda t: _delta_split(t, kind), "mix")


def pcr5(ms) -> FusionResult:
    """Two-source proportional conflict redistribution."""
    ms = _sources(ms, exactly=2, name="pcr5")

    def distribute(t: _Tuple) -> list:
        if not t.conflicting:
            return [(t.inter, t.product)]
        (x, y), (a, b) = t.focals, t.values
        s = a + b
        if ms[0].algebra.is_zero(s):
            return []
        return [(x, a * a * b / s), (y, b * b * a / s)]

    return _run(ms, distribute, "pcr5")


def pcr6(ms) -> FusionResult:
    """Proportional redistribution for any number of sources."""
    ms = _sources(ms, name="pcr6")
    alg = ms[0].algebra
    return _run(ms, lambda t: _proportional(t, alg) if t.conflicting else _to_intersection(t), "pcr6")


def dpcr(ms, alpha: AlphaPolicy) -> FusionResult:
    """PCR6 where only an ``alpha`` part of each conflict returns to its sources; the rest goes to the union."""
    ms = _sources(ms, name="dpcr")
    alg = ms[0].algebra
    return _run(ms, lambda t: _discounted(t, alpha, alg) if t.conflicting else _to_intersection(t), "dpcr")


def dpcr_lambda(ms) -> FusionResult:
    return dpcr(ms, AlphaPolicy.per_source_lambda())


def mdpcr(ms, kind: DissimilarityChoice | str, alpha: AlphaPolicy) -> FusionResult:
    """Discounted PCR on conflicting tuples, dissimilarity split on the others."""
    ms = _sources(ms, name="mdpcr")
    alg = ms[0].algebra
    kind = DissimilarityChoice(kind)

    def distribute(t: _Tuple) -> list:
        if t.conflicting:
            return _discounted(t, alpha, alg)
        return _delta_split(t, kind)

    return _run(ms, distribute, "mdpcr")


def combine(ms, config: RuleConfig) -> FusionResult:
    name = config.rule
    simple = {
        "disjunctive": disjunctive, "conjunctive": conjunctive, "dempster": dempster,
        "tbm": tbm_smets, "yager": yager, "dubois_prade": dubois_prade, "florea": florea,
        "pcr5": pcr5, "pcr6": pcr6, "dpcr_lambda": dpcr_lambda,
    }
    if name in simple:
        result = simple[name](ms)
    elif name == "mix":
        result = mix(ms, config.dissimilarity)
    else:
        if config.alpha is None:
            raise ValidationError(f"rule {name} needs an alpha policy")
        if name == "dpcr":
            result = dpcr(ms, config.alpha)
        else:
            result = mdpcr(ms, config.dissimilarity, config.alpha)
    return FusionResult(result.mass, result.conflict_k, result.ledger, name)
