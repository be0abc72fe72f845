"""Randomized invariants over small frames (n <= 4) and up to four sources."""

import itertools
from fractions import Fraction as F

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

import oracles
from dsmfuse import rules as R
from dsmfuse.frame import FocalSet, Frame, Model
from dsmfuse.labels import Label
from dsmfuse.mass import RATIONAL, LabelAlgebra, MassFunction, bel, betp, pl
from dsmfuse.weights import (
    alpha_per_source,
    dissimilarity,
    gamma_coefficients,
    lambda_coefficient,
)

pytestmark = pytest.mark.criterion(5)

RUNS = settings(max_examples=1000, deadline=None, suppress_health_check=[HealthCheck.too_slow])
ATOMS = "ABCD"


@st.composite
def models(draw, kinds=("shafer", "free", "hybrid")):
    n = draw(st.integers(min_value=1, max_value=4))
    frame = Frame(ATOMS[:n])
    kind = draw(st.sampled_from(kinds))
    if kind == "shafer":
        return Model.shafer(frame)
    if kind == "free" or n < 2:
        return Model.free(frame)
    pairs = list(itertools.combinations(frame.atoms, 2))
    chosen = draw(st.lists(st.sampled_from(pairs), min_size=1, max_size=3, unique=True))
    return Model.hybrid(frame, ["&".join(p) for p in chosen])


def focal_sets(model):
    regions = [1 << s for s in range(1, model.frame.universe_size + 1) if model.allowed >> s & 1]
    return st.lists(st.sampled_from(regions), min_size=1, unique=True).map(lambda bs: FocalSet(sum(bs)))


@st.composite
def mass_functions(draw, model):
    focals = draw(st.lists(focal_sets(model), min_size=1, max_size=4, unique=True))
    weights = draw(st.lists(st.integers(min_value=1, max_value=9), min_size=len(focals), max_size=len(focals)))
    total = sum(weights)
    return MassFunction(model, {f: F(w, total) for f, w in zip(focals, weights)})


@st.composite
def sources(draw, low=2, high=4, kinds=("shafer", "free", "hybrid")):
    model = draw(models(kinds))
    count = draw(st.integers(min_value=low, max_value=high))
    return [draw(mass_functions(model)) for _ in range(count)]


def as_oracle(mass):
    frame = mass.model.frame
    return {
        frozenset(frozenset(frame.region_atoms(s)) for s in f.regions()): mass.algebra.to_real(v)
        for f, v in mass.items()
    }


def oracle_theta(model):
    return as_oracle(MassFunction(model, {model.theta: F(1)})).popitem()[0]


def fractional_alpha():
    return st.fractions(min_value=0, max_value=1, max_denominator=10)


def all_rules(ms, alpha):
    """Every rule that applies to ``ms``, by name."""
    policy = R.AlphaPolicy.fixed(alpha)
    out = {
        "conjunctive": lambda: R.conjunctive(ms),
        "disjunctive": lambda: R.disjunctive(ms),
        "tbm": lambda: R.tbm_smets(ms),
        "yager": lambda: R.yager(ms),
        "dubois_prade": lambda: R.dubois_prade(ms),
        "pcr6": lambda: R.pcr6(ms),
        "dpcr": lambda: R.dpcr(ms, policy),
        "dpcr_global": lambda: R.dpcr(ms, R.AlphaPolicy.global_f()),
        "dpcr_lambda": lambda: R.dpcr_lambda(ms),
    }
    for kind in ("delta_min", "eta_max", "jaccard"):
        out[f"mix_{kind}"] = lambda kind=kind: R.mix(ms, kind)
        out[f"mdpcr_{kind}"] = lambda kind=kind: R.mdpcr(ms, kind, policy)
    if ms[0].algebra.to_real(R.conjunctive(ms).conflict_k) != 1:
        out["dempster"] = lambda: R.dempster(ms)
    if len(ms) == 2:
        out["pcr5"] = lambda: R.pcr5(ms)
        out["florea"] = lambda: R.florea(ms)
    return out


# --- conservation and symmetry ------------------------------------------------

@RUNS
@given(sources(), fractional_alpha())
def test_every_rule_conserves_mass(ms, alpha):
    for name, run in all_rules(ms, alpha).items():
        result = run()
        assert result.mass.total() == 1, name
        assert all(v > 0 for _, v in result.mass.items()), name


@RUNS
@given(sources(), fractional_alpha())
def test_every_tuple_conserves_its_product(ms, alpha):
    for name, run in all_rules(ms, alpha).items():
        for entry in run().ledger:
            assert sum((v for _, v in entry.shares), F(0)) == entry.product, name


@RUNS
@given(sources(low=2, high=2), fractional_alpha())
def test_two_source_rules_are_commutative(ms, alpha):
    forward = all_rules(ms, alpha)
    backward = all_rules(ms[::-1], alpha)
    for name in forward:
        assert forward[name]().mass == backward[name]().mass, name


# --- agreement with the brute-force definitions ------------------------------

@RUNS
@given(sources(), fractional_alpha())
def test_rules_match_brute_force(ms, alpha):
    o = [as_oracle(m) for m in ms]
    theta = oracle_theta(ms[0].model)
    expected = {
        "conjunctive": oracles.conjunctive(o),
        "disjunctive": oracles.disjunctive(o),
        "yager": oracles.yager(o, theta),
        "dubois_prade": oracles.dubois_prade(o),
        "pcr6": oracles.pcr6(o),
        "dpcr": oracles.dpcr_fixed(o, alpha),
        "dpcr_global": oracles.dpcr_global(o),
        "dpcr_lambda": oracles.dpcr_lambda(o),
    }
    for kind in ("delta_min", "eta_max", "jaccard"):
        expected[f"mix_{kind}"] = oracles.mix(o, kind)
        expected[f"mdpcr_{kind}"] = oracles.mdpcr(o, kind, lambda ys: alpha)
    if oracles.conflict(o) != 1:
        expected["dempster"] = oracles.dempster(o)
    if len(ms) == 2:
        expected["pcr5"] = oracles.pcr5(*o)
        expected["florea"] = oracles.florea(*o)
    rules = all_rules(ms, alpha)
    for name, want in expected.items():
        assert as_oracle(rules[name]().mass) == want, name


# --- degenerate cases ---------------------------------------------------------

@RUNS
@given(sources())
def test_mix_with_zero_weight_is_conjunctive(ms):
    assert R.mix(ms, lambda ys: F(0)).mass == R.conjunctive(ms).mass


@RUNS
@given(sources())
def test_mix_with_unit_weight_is_disjunctive(ms):
    assert R.mix(ms, lambda ys: F(1)).mass == R.disjunctive(ms).mass


@RUNS
@given(sources())
def test_mix_with_conflict_indicator_is_dubois_prade(ms):
    def indicator(ys):
        inter = ys[0]
        for y in ys[1:]:
            inter = inter & y
        return F(0) if inter else F(1)

    assert R.mix(ms, indicator).mass == R.dubois_prade(ms).mass


@RUNS
@given(sources())
def test_dpcr_without_discount_is_pcr6(ms):
    assert R.dpcr(ms, R.AlphaPolicy.fixed(1)).mass == R.pcr6(ms).mass


@RUNS
@given(sources(low=2, high=2))
def test_pcr6_on_two_sources_is_pcr5(ms):
    assert R.pcr6(ms).mass == R.pcr5(ms).mass


def test_pcr6_and_grouped_pcr5_part_ways_on_repeated_sets():
    # Two of three sources name A; the grouped form multiplies their masses
    # before sharing, the per-source form adds them.
    model = Model.shafer(Frame("AB"))
    a, b = model.focal("A"), model.focal("B")
    ms = [
        MassFunction(model, {a: F(6, 10), model.theta: F(4, 10)}),
        MassFunction(model, {a: F(6, 10), model.theta: F(4, 10)}),
        MassFunction(model, {b: F(6, 10), model.theta: F(4, 10)}),
    ]
    o = [as_oracle(m) for m in ms]
    assert as_oracle(R.pcr6(ms).mass) == oracles.pcr6(o)
    assert as_oracle(R.pcr6(ms).mass) != oracles.pcr5_grouped(o)


# --- qualitative masses ------------------------------------------------------

@st.composite
def label_sources(draw):
    ms = draw(sources())
    n = draw(st.integers(min_value=2, max_value=9))
    q = LabelAlgebra(n)
    labelled = [MassFunction(m.model, {f: Label(v * (n + 1), n) for f, v in m.items()}, q) for m in ms]
    return ms, labelled


@RUNS
@given(label_sources(), fractional_alpha())
def test_labels_follow_the_numbers(pair, alpha):
    ms, labelled = pair
    numeric = all_rules(ms, alpha)
    qualitative = all_rules(labelled, alpha)
    assert numeric.keys() == qualitative.keys()
    for name in numeric:
        want = numeric[name]().mass
        got = qualitative[name]().mass
        assert {f: got.algebra.to_real(v) for f, v in got.items()} == dict(want.items()), name


# --- belief bounds ------------------------------------------------------------

@RUNS
@given(sources(), st.data())
def test_betp_lies_between_bel_and_pl(ms, data):
    model = ms[0].model
    x = data.draw(focal_sets(model))
    for result in (R.pcr6(ms), R.disjunctive(ms), R.mix(ms, "jaccard")):
        m = result.mass
        assert bel(m, x) <= betp(m, x) <= pl(m, x)


# --- weights ------------------------------------------------------------------

@RUNS
@given(sources())
def test_lambda_normalization_identity(ms):
    for entry in R.dpcr_lambda(ms).ledger:
        ys = entry.focals
        inter = ys[0]
        for y in ys[1:]:
            inter = inter & y
        if inter:
            continue
        values = [m[y] for m, y in zip(ms, ys)]
        alphas = [alpha_per_source(i, ys) for i in range(len(ys))]
        gammas = gamma_coefficients(values, RATIONAL)
        if sum(a * g for a, g in zip(alphas, gammas)) == 0:
            continue
        lam = lambda_coefficient(alphas, gammas)
        assert sum(a * lam * g for a, g in zip(alphas, gammas)) == sum(alphas)


@st.composite
def shafer_operands(draw):
    model = draw(models(("shafer",)))
    ys = draw(st.lists(focal_sets(model), min_size=1, max_size=4))
    return ys


@RUNS
@given(shafer_operands())
def test_eta_max_equals_jaccard_under_shafer(ys):
    # Stated as a general law; (A|B, A|C) is a counterexample: 1/2 against 2/3.
    assert dissimilarity("eta_max", ys) == dissimilarity("jaccard", ys)


@st.composite
def chained_or_disjoint(draw):
    model = draw(models(("shafer",)))
    if draw(st.booleans()):
        ys = sorted(draw(st.lists(focal_sets(model), min_size=1, max_size=4)), key=lambda y: y.bits)
        chain = [ys[0]]
        for y in ys[1:]:
            chain.append(chain[-1] | y)
        return draw(st.permutations(chain))
    regions = [1 << s for s in range(1, model.frame.universe_size + 1) if model.allowed >> s & 1]
    picked = draw(st.lists(st.sampled_from(regions), min_size=1, max_size=4, unique=True))
    return [FocalSet(b) for b in picked]


@RUNS
@given(chained_or_disjoint())
def test_eta_max_equals_jaccard_on_nested_or_disjoint_sets(ys):
    assert dissimilarity("eta_max", ys) == dissimilarity("jaccard", ys)
