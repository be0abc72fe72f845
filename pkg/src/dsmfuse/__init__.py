"""Exact fusion of quantitative and qualitative belief masses."""

from .errors import FusionError, InputError, RuleError
from .frame import EMPTY, FocalSet, Frame, Model, canonical_display, dsm_cardinality, parse_set_expr
from .labels import Label, LabelScale, parse_label
from .mass import RATIONAL, LabelAlgebra, MassFunction, RationalAlgebra, bel, betp, discount, pl, total_conflict, validate
from .rules import (
    AlphaPolicy,
    FusionResult,
    RuleConfig,
    combine,
    conjunctive,
    dempster,
    disjunctive,
    dpcr,
    dpcr_lambda,
    dubois_prade,
    florea,
    mdpcr,
    mix,
    pcr5,
    pcr6,
    tbm_smets,
    yager,
)
from .weights import DissimilarityChoice, alpha_global, alpha_per_source, dissimilarity

__all__ = [
    "EMPTY", "RATIONAL", "AlphaPolicy", "DissimilarityChoice", "FocalSet", "Frame", "FusionError",
    "FusionResult", "InputError", "Label", "LabelAlgebra", "LabelScale", "MassFunction", "Model",
    "RationalAlgebra", "RuleConfig", "RuleError", "alpha_global", "alpha_per_source", "bel", "betp",
    "canonical_display", "combine", "conjunctive", "dempster", "discount", "disjunctive", "dissimilarity",
    "dpcr", "dpcr_lambda", "dsm_cardinality", "dubois_prade", "florea", "mdpcr", "mix", "parse_label",
    "parse_set_expr", "pcr5", "pcr6", "pl", "tbm_smets", "total_conflict", "validate", "yager",
]
