"""Reference cases: worked examples with their published results.

Each :class:`Case` rebuilds one worked example, runs one rule (or weight
function) and lists the expected values. Quantitative checks compare real
values; qualitative checks compare label indices.

Expected values come in three kinds:

* ``exact``: printed as an exact fraction, compared with tolerance 0;
* ``rounded``: printed rounded, compared within the stated tolerance;
* ``recomputed``: the printed figure disagrees with what the defining
  formula gives; ``expected`` holds the formula's value and ``printed``
  keeps the figure as published, so the report can show both.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as F
from typing import Callable

from .frame import Frame, Model
from .labels import Label
from .mass import LabelAlgebra, MassFunction, betp
from . import rules as R
from .weights import alpha_global, dissimilarity

HALF_MILLI = F(5, 10000)


@dataclass(frozen=True)
class Check:
    key: str
    expected: F
    tolerance: F = F(0)
    kind: str = "exact"
    printed: str | None = None


@dataclass(frozen=True)
class Case:
    example: str
    name: str
    run: Callable[[], dict[str, object]]
    checks: tuple[Check, ...]
    note: str = ""
    qualitative: bool = False
    complete: bool = field(default=False)


def exact_checks(values: dict[str, object]) -> tuple[Check, ...]:
    return tuple(Check(k, F(v)) for k, v in values.items())


def rounded_checks(values: dict[str, str], tol: F = HALF_MILLI) -> tuple[Check, ...]:
    return tuple(Check(k, F(v), tol, "rounded") for k, v in values.items())


def _masses(result: R.FusionResult) -> dict[str, object]:
    return {result.mass.model.display(f): v for f, v in result.mass.items()}


# --- inputs ---------------------------------------------------------------

def _ab():
    model = Model.shafer(Frame("AB"))
    m1 = MassFunction.from_pairs(model, [("A", "1/6"), ("B", "3/6"), ("A|B", "2/6")])
    m2 = MassFunction.from_pairs(model, [("A", "4/6"), ("B", "1/6"), ("A|B", "1/6")])
    return m1, m2


def _three_experts():
    model = Model.shafer(Frame("ABCD"))
    theta = "A|B|C|D"
    return (
        MassFunction.from_pairs(model, [("A", "0.7"), (theta, "0.3")]),
        MassFunction.from_pairs(model, [("B", "0.5"), (theta, "0.5")]),
        MassFunction.from_pairs(model, [("A|C", "0.6"), (theta, "0.4")]),
    )


def _unions_only():
    model = Model.shafer(Frame("ABC"))
    return (
        MassFunction.from_pairs(model, [("A|B", "0.7"), ("A|B|C", "0.3")]),
        MassFunction.from_pairs(model, [("A|C", "0.6"), ("A|B|C", "0.4")]),
        MassFunction.from_pairs(model, [("B|C", "0.5"), ("A|B|C", "0.5")]),
    )


def _labels_ab():
    model = Model.shafer(Frame("AB"))
    q = LabelAlgebra(5)
    return (
        MassFunction.from_pairs(model, [("A", "L1"), ("B", "L3"), ("A|B", "L2")], q),
        MassFunction.from_pairs(model, [("A", "L4"), ("B", "L1"), ("A|B", "L1")], q),
    )


def _mix_inputs(model: Model):
    return (
        MassFunction.from_pairs(model, [("A", "0.3"), ("A|B", "0.4"), ("A|B|C", "0.3")]),
        MassFunction.from_pairs(model, [("B", "0.2"), ("C", "0.2"), ("A|C", "0.3"), ("A|B|C", "0.3")]),
    )


def _shafer_abc():
    return Model.shafer(Frame("ABC"))


def _hybrid_abc():
    return Model.hybrid(Frame("ABC"), ["A&C", "B&C"])


def _labels_two():
    model = _shafer_abc()
    q = LabelAlgebra(5)
    return (
        MassFunction.from_pairs(model, [("A", "L2"), ("A|B", "L4")], q),
        MassFunction.from_pairs(model, [("A", "L3"), ("B", "L2"), ("C", "L1")], q),
    )


def _labels_three():
    # The fourth column of the published table is the whole frame, written as
    # a union with a fourth atom D, so the frame here has four atoms.
    model = Model.shafer(Frame("ABCD"))
    q = LabelAlgebra(5)
    theta = "A|B|C|D"
    return (
        MassFunction.from_pairs(model, [("A", "L2"), (theta, "L4")], q),
        MassFunction.from_pairs(model, [("B", "L3"), (theta, "L3")], q),
        MassFunction.from_pairs(model, [("B|C", "L5"), (theta, "L1")], q),
    )


def _zadeh():
    model = _shafer_abc()
    return (
        MassFunction.from_pairs(model, [("A", "0.9"), ("C", "0.1")]),
        MassFunction.from_pairs(model, [("B", "0.9"), ("C", "0.1")]),
    )


def _weight_table(kind: str):
    model = _shafer_abc()
    names = ["A", "B", "C", "A|B"]

    def run():
        return {
            f"{x},{y}": dissimilarity(kind, [model.focal(x), model.focal(y)])
            for x in names for y in names
        }
    return run


def _table(names, rows) -> dict[str, F]:
    out = {}
    for x, row in zip(names, rows):
        for y, v in zip(names, row):
            out[f"{x},{y}"] = F(v)
    return out


def _lab(**indices) -> tuple[Check, ...]:
    return tuple(Check(k.replace("_", "|"), F(v)) for k, v in indices.items())


def _qual(fn):
    def run():
        return _masses(fn())
    return run


# --- cases ----------------------------------------------------------------

_W = ["A", "B", "C", "A|B"]

CASES: tuple[Case, ...] = (
    Case("1", "conjunctive", lambda: _masses(R.conjunctive(_ab())),
         exact_checks({"A": F(13, 36), "B": F(8, 36), "A|B": F(2, 36), "∅": F(13, 36)}), complete=True),
    Case("1", "disjunctive", lambda: _masses(R.disjunctive(_ab())),
         exact_checks({"A": F(4, 36), "B": F(3, 36), "A|B": F(29, 36)}), complete=True),
    Case("2", "dempster", lambda: _masses(R.dempster(_ab())),
         exact_checks({"A": F(13, 23), "B": F(8, 23), "A|B": F(2, 23)}), complete=True),
    Case("2", "tbm", lambda: _masses(R.tbm_smets(_ab())),
         exact_checks({"∅": F(13, 36), "A": F(13, 36), "B": F(8, 36), "A|B": F(2, 36)}), complete=True),
    Case("2", "betp after dempster", lambda: {"A": betp(R.dempster(_ab()).mass, _ab()[0].model.focal("A"))},
         exact_checks({"A": F(14, 23)}), note="derived by hand"),
    Case("3", "yager", lambda: _masses(R.yager(_ab())),
         exact_checks({"A": F(13, 36), "B": F(8, 36), "A|B": F(15, 36)}), complete=True),
    Case("4", "dubois_prade", lambda: _masses(R.dubois_prade(_ab())),
         exact_checks({"A": F(13, 36), "B": F(8, 36), "A|B": F(15, 36)}), complete=True),
    Case("5", "pcr5", lambda: _masses(R.pcr5(_ab())),
         exact_checks({"A": F(285, 504), "B": F(191, 504), "A|B": F(28, 504)}), complete=True),
    Case("6", "pcr6", lambda: _masses(R.pcr6(_three_experts())),
         rounded_checks({"A": "0.493", "B": "0.194", "A|C": "0.199", "A|B|C|D": "0.114"})),
    Case("6", "dpcr fixed alpha 0.9", lambda: _masses(R.dpcr(_three_experts(), R.AlphaPolicy.fixed("0.9"))),
         rounded_checks({"A": "0.479", "B": "0.181", "A|B|C": "0.021", "A|B|C|D": "0.132"})
         + (Check("A|C", F("0.09") + F("0.21") * F(6, 18) * F("0.9") + F("0.09") * F(6, 14) * F("0.9"),
                  F(0), "recomputed", "0.187"),)),
    Case("6", "dpcr global alpha", lambda: _masses(R.dpcr(_three_experts(), R.AlphaPolicy.global_f())),
         rounded_checks({"A": "0.418", "B": "0.130", "A|C": "0.139", "A|B|C": "0.140", "A|B|C|D": "0.173"})),
    Case("6", "dpcr per-source lambda", lambda: _masses(R.dpcr_lambda(_three_experts())),
         rounded_checks({"A": "0.420", "B": "0.101", "A|C": "0.143", "A|B|C": "0.14"})
         + (Check("A|B|C|D", F("0.06") + F("0.14") * F(4, 16) * F(1, 3) * F(16, 5)
                  + F("0.09") * F(3, 14) * F(1, 3) * F(56, 17) + F("0.14") / 3 + F("0.09") / 3,
                  F(0), "recomputed", "0.196"),)),
    Case("6", "mdpcr delta_min equals dpcr", lambda: _masses(
        R.mdpcr(_three_experts(), "delta_min", R.AlphaPolicy.fixed("0.9"))),
         rounded_checks({"A": "0.479", "B": "0.181", "A|B|C": "0.021", "A|B|C|D": "0.132"})),
    Case("6", "total conflict", lambda: {"k": R.conjunctive(_three_experts()).conflict_k},
         exact_checks({"k": F("0.44")})),
    Case("7", "pcr6 on unions", lambda: _masses(R.pcr6(_unions_only())),
         exact_checks({
             "A": F("0.21"), "B": F("0.14"), "C": F("0.09"),
             "A|B": F("0.14") + F("0.21") * F(7, 18), "B|C": F("0.06") + F("0.21") * F(5, 18),
             "A|C": F("0.16"), "A|B|C": F("0.06"),
         }), complete=True),
    Case("8", "qualitative conjunctive", _qual(lambda: R.conjunctive(_labels_ab())),
         _lab(A=F(13, 6), B=F(8, 6), A_B=F(2, 6)) + (Check("∅", F(13, 6)),), qualitative=True, complete=True),
    Case("8", "qualitative dempster", _qual(lambda: R.dempster(_labels_ab())),
         _lab(A=F(468, 138), B=F(288, 138), A_B=F(72, 138)), qualitative=True, complete=True),
    Case("8", "qualitative yager", _qual(lambda: R.yager(_labels_ab())),
         _lab(A=F(13, 6), B=F(8, 6), A_B=F(15, 6)), qualitative=True, complete=True),
    Case("8", "qualitative pcr5", _qual(lambda: R.pcr5(_labels_ab())),
         _lab(A=F(285, 84), B=F(191, 84), A_B=F(28, 84)), qualitative=True, complete=True),
    Case("8", "qualitative pcr5 approximated", lambda: {
        k: v.approximate() for k, v in _masses(R.pcr5(_labels_ab())).items()},
         _lab(A=3, B=2, A_B=0), qualitative=True),
    Case("9", "delta_min weights", _weight_table("delta_min"),
         exact_checks(_table(_W, [[0, 1, 1, 0], [1, 0, 1, 0], [1, 1, 0, 1], [0, 0, 1, 0]]))),
    Case("9", "eta_max weights", _weight_table("eta_max"),
         exact_checks(_table(_W, [[0, 1, 1, F(1, 2)], [1, 0, 1, F(1, 2)], [1, 1, 0, 1],
                                  [F(1, 2), F(1, 2), 1, 0]]))),
    Case("9", "global alpha", lambda: {
        "A,B,A|C": alpha_global([Model.shafer(Frame("ABCD")).focal(x) for x in ("A", "B", "A|C")]),
        "A,B,A|B|C|D": alpha_global([Model.shafer(Frame("ABCD")).focal(x) for x in ("A", "B", "A|B|C|D")]),
    }, exact_checks({"A,B,A|C": F(1, 3), "A,B,A|B|C|D": F(2, 3)})),
    Case("10", "mix delta_min", lambda: _masses(R.mix(_mix_inputs(_shafer_abc()), "delta_min")),
         rounded_checks({"A": "0.24", "B": "0.14", "A|B": "0.18", "C": "0.06", "A|C": "0.15", "A|B|C": "0.23"}),
         complete=True),
    Case("10", "mix jaccard", lambda: _masses(R.mix(_mix_inputs(_shafer_abc()), "jaccard")),
         rounded_checks({"A": "0.115", "B": "0.06", "A|B": "0.18", "C": "0.02", "A|C": "0.165", "A|B|C": "0.46"}),
         complete=True),
    Case("10", "mix eta_max", lambda: _masses(R.mix(_mix_inputs(_shafer_abc()), "eta_max")),
         rounded_checks({"B": "0.06", "A|B": "0.18", "C": "0.02", "A|C": "0.165"})
         + (Check("A", F("0.135"), F(0), "recomputed", "0.115"),
            Check("A|B|C", F("0.44"), F(0), "recomputed", "0.46")),
         note="the printed column matches the union-normalized weights, not the max-normalized ones"),
    Case("11", "hybrid mix delta_min", lambda: _masses(R.mix(_mix_inputs(_hybrid_abc()), "delta_min")),
         rounded_checks({"A&B": "0.03", "A": "0.26", "B": "0.14", "A|B": "0.15", "C": "0.06",
                         "A|C": "0.15", "A|B|C": "0.21"}), complete=True),
    Case("11", "hybrid mix eta_max", lambda: _masses(R.mix(_mix_inputs(_hybrid_abc()), "eta_max")),
         rounded_checks({"A&B": "0.03", "C": "0.015", "A|C": "0.1575"})
         + (Check("A", F("0.185"), F(0), "recomputed", "0.205"),
            Check("B", F("0.08") + F(1, 300), F(0), "recomputed", "0.084"),
            Check("A|B", F("0.14") + F(2, 300), F(0), "recomputed", "0.146"),
            Check("A|B|C", F("0.3825"), F(0), "recomputed", "0.3625"))),
    Case("11", "hybrid mix jaccard", lambda: _masses(R.mix(_mix_inputs(_hybrid_abc()), "jaccard")),
         rounded_checks({"A&B": "0.02", "C": "0.015", "A|C": "0.1575"})
         + (Check("A", F("0.165"), F(0), "recomputed", "0.185"),
            Check("B", F("0.08") + F(1, 300), F(0), "recomputed", "0.084"),
            Check("A|B", F("0.15") + F(2, 300), F(0), "recomputed", "0.156"),
            Check("A|B|C", F("0.4025"), F(0), "recomputed", "0.3825"))),
    Case("12", "qualitative mix delta_min", _qual(lambda: R.mix(_labels_two(), "delta_min")),
         _lab(A=F(18, 6), B=F(8, 6), C=0, A_B=F(4, 6), A_C=F(2, 6), A_B_C=F(4, 6)), qualitative=True),
    Case("12", "qualitative mix eta_max", _qual(lambda: R.mix(_labels_two(), "eta_max")),
         _lab(A=F(12, 6), B=F(4, 6), A_B=F(14, 6), A_C=F(2, 6), A_B_C=F(4, 6)), qualitative=True, complete=True),
    Case("12", "qualitative dpcr alpha 0.6", _qual(lambda: R.dpcr(_labels_two(), R.AlphaPolicy.fixed("0.6"))),
         _lab(A=F(20, 6), B=F("9.2") / 6, C=F("0.88") / 6, A_B=F("3.52") / 6, A_C=F("0.8") / 6,
              A_B_C=F("1.6") / 6), qualitative=True, complete=True),
    Case("12", "qualitative mdpcr eta_max alpha 0.6",
         _qual(lambda: R.mdpcr(_labels_two(), "eta_max", R.AlphaPolicy.fixed("0.6"))),
         _lab(A=F(14, 6), B=F("5.2") / 6, C=F("0.88") / 6, A_B=F("13.52") / 6, A_C=F("0.8") / 6,
              A_B_C=F("1.6") / 6), qualitative=True, complete=True),
    Case("13", "qualitative conjunctive", _qual(lambda: R.conjunctive(_labels_three())),
         _lab(A=F(1, 6)), qualitative=True),
    Case("13", "qualitative pcr6", _qual(lambda: R.pcr6(_labels_three())),
         _lab(A=F(10, 3) / 6, B=F(14, 6), B_C=F(15, 6), A_B_C_D=F(22, 6) / 6), qualitative=True, complete=True),
    Case("13", "qualitative dpcr alpha 0.6", _qual(lambda: R.dpcr(_labels_three(), R.AlphaPolicy.fixed("0.6"))),
         _lab(A=F("2.4") / 6, B=F("13.2") / 6, B_C=F(13, 6), A_B_C=F(2, 6), A_B_C_D=F("5.4") / 6),
         qualitative=True, complete=True),
    Case("zadeh", "dempster", lambda: _masses(R.dempster(_zadeh())), exact_checks({"C": 1}), complete=True),
    Case("zadeh", "pcr5", lambda: _masses(R.pcr5(_zadeh())),
         exact_checks({"A": F("0.486"), "B": F("0.486"), "C": F(7, 250)}), note="derived by hand", complete=True),
)


def value_of(v, qualitative: bool) -> F:
    if isinstance(v, Label):
        return v.index
    return F(v)
