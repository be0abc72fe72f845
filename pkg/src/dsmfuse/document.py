"""JSON input documents and fusion reports.

A document names the frame, the model, the kind of masses and the sources::

    {
      "frame": ["A", "B"],
      "model": {"type": "shafer"},
      "mode": "quantitative",
      "world": "closed",
      "sources": {
        "m1": {"A": "1/6", "B": "3/6", "A|B": "2/6"},
        "m2": {"A": "4/6", "B": "1/6", "A|B": "1/6"}
      },
      "rule": {"name": "pcr5"}
    }

Quantitative masses may be JSON numbers or strings such as ``"0.3"`` or
``"13/36"``; all are read exactly. Qualitative documents set ``"mode":
"qualitative"`` and ``"label_scale": n`` and use label literals like
``"L3"`` or ``"L13/6"``. A hybrid model lists the empty intersections:
``{"type": "hybrid", "empty": ["A&C", "B&C"]}``.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from pathlib import Path
from typing import TextIO

from .errors import InputError, ParseError, ValidationError
from .frame import Frame, Model
from .labels import quasi_normalized
from .mass import RATIONAL, LabelAlgebra, MassFunction, betp
from .rules import AlphaPolicy, FusionResult, RuleConfig, combine
from .weights import DissimilarityChoice

_TOP_KEYS = {"frame", "model", "mode", "label_scale", "world", "sources", "rule"}
_RULE_KEYS = {"name", "dissimilarity", "alpha", "approximate_output"}


@dataclass(frozen=True)
class Document:
    frame: Frame
    model: Model
    mode: str
    label_scale: int | None
    world: str
    sources: dict[str, MassFunction]
    config: RuleConfig | None = None

    @property
    def algebra(self):
        return LabelAlgebra(self.label_scale) if self.mode == "qualitative" else RATIONAL


def _no_duplicates(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise ParseError(f"duplicate key {k!r}")
        out[k] = v
    return out


def _parse_json(text: str):
    try:
        return json.loads(text, object_pairs_hook=_no_duplicates, parse_float=Decimal)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from None


def _expect(cond: bool, message: str):
    if not cond:
        raise ValidationError(message)


def _model_from(spec, frame: Frame) -> Model:
    if isinstance(spec, str):
        spec = {"type": spec}
    _expect(isinstance(spec, dict), "model must be an object such as {\"type\": \"shafer\"}")
    kind = spec.get("type")
    if kind == "shafer":
        return Model.shafer(frame)
    if kind == "free":
        return Model.free(frame)
    if kind == "hybrid":
        empty = spec.get("empty", [])
        _expect(isinstance(empty, list), "hybrid model needs an \"empty\" list")
        return Model.hybrid(frame, empty)
    raise ValidationError(f"unknown model type {kind!r}; use shafer, free or hybrid")


def _config_from(spec) -> RuleConfig | None:
    if spec is None:
        return None
    if isinstance(spec, str):
        spec = {"name": spec}
    _expect(isinstance(spec, dict), "rule must be a name or an object")
    unknown = set(spec) - _RULE_KEYS
    _expect(not unknown, f"unknown rule fields: {sorted(unknown)}")
    alpha = spec.get("alpha")
    return RuleConfig(
        spec.get("name"),
        DissimilarityChoice.parse(spec.get("dissimilarity", "delta_min")),
        AlphaPolicy.parse(str(alpha)) if alpha is not None else None,
        bool(spec.get("approximate_output", False)),
    )


def _literal(value, mode: str):
    if mode == "qualitative":
        _expect(isinstance(value, str), f"label mass must be a string like \"L3\", got {value!r}")
        return value
    if isinstance(value, bool) or not isinstance(value, (int, Decimal, str)):
        raise ValidationError(f"mass must be a number or a fraction string, got {value!r}")
    return value


def _source(name: str, entries, model: Model, algebra, mode: str, world: str) -> MassFunction:
    _expect(isinstance(entries, dict), f"source {name!r} must map set expressions to masses")
    pairs = []
    for expr, raw in entries.items():
        try:
            pairs.append((expr, _literal(raw, mode)))
        except InputError as e:
            e.args = (f"source {name!r}, entry {expr!r}: {e}",)
            raise
    try:
        m = MassFunction.from_pairs(model, pairs, algebra, world)
    except InputError as e:
        e.args = (f"source {name!r}: {e}",)
        raise
    total = m.total()
    if mode == "qualitative":
        _expect(quasi_normalized([total]), f"source {name!r} is not quasi-normalized (indices sum to {total})")
    else:
        _expect(total == 1, f"source {name!r} masses sum to {total}, not 1")
    return m


def document_from_dict(data) -> Document:
    _expect(isinstance(data, dict), "document must be a JSON object")
    unknown = set(data) - _TOP_KEYS
    _expect(not unknown, f"unknown top-level fields: {sorted(unknown)}")
    for key in ("frame", "sources"):
        _expect(key in data, f"missing field {key!r}")
    frame = Frame(data["frame"])
    model = _model_from(data.get("model", "shafer"), frame)
    mode = data.get("mode", "quantitative")
    _expect(mode in ("quantitative", "qualitative"), f"mode must be quantitative or qualitative, got {mode!r}")
    scale = data.get("label_scale")
    if mode == "qualitative":
        _expect(isinstance(scale, int) and not isinstance(scale, bool), "qualitative mode needs an integer label_scale")
        algebra = LabelAlgebra(scale)
    else:
        _expect(scale is None, "label_scale only applies to qualitative mode")
        algebra = RATIONAL
    world = data.get("world", "closed")
    _expect(world in ("closed", "open"), f"world must be closed or open, got {world!r}")
    sources_spec = data["sources"]
    _expect(isinstance(sources_spec, dict) and sources_spec, "sources must be a non-empty object")
    sources = {name: _source(name, entries, model, algebra, mode, world) for name, entries in sources_spec.items()}
    return Document(frame, model, mode, scale, world, sources, _config_from(data.get("rule")))


def load_document(source: str | Path | TextIO) -> Document:
    """Read and validate a document from a path or an open text stream."""
    if isinstance(source, (str, Path)):
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as e:
            raise ParseError(f"cannot read {source}: {e.strerror}") from None
    else:
        text = source.read()
    return document_from_dict(_parse_json(text))


def loads_document(text: str) -> Document:
    return load_document(io.StringIO(text))


def document_to_dict(doc: Document) -> dict:
    out = {"frame": list(doc.frame.atoms), "model": doc.model.to_json(), "mode": doc.mode}
    if doc.label_scale is not None:
        out["label_scale"] = doc.label_scale
    out["world"] = doc.world
    out["sources"] = {name: m.as_text() for name, m in doc.sources.items()}
    if doc.config is not None:
        rule = {"name": doc.config.rule, "dissimilarity": doc.config.dissimilarity.value}
        if doc.config.alpha is not None:
            rule["alpha"] = str(doc.config.alpha)
        if doc.config.approximate_output:
            rule["approximate_output"] = True
        out["rule"] = rule
    return out


def dump_document(doc: Document) -> str:
    return json.dumps(document_to_dict(doc), indent=2, ensure_ascii=False) + "\n"


# --- reports ----------------------------------------------------------------

def decimal_text(x: Fraction, places: int = 6) -> str:
    q = Decimal(x.numerator) / Decimal(x.denominator)
    return str(q.quantize(Decimal(1).scaleb(-places)))


def fusion_report(doc: Document, result: FusionResult, config: RuleConfig, with_betp: bool = False) -> dict:
    m = result.mass
    alg = m.algebra
    display = doc.model.display
    report = {
        "rule": config.rule,
        "mode": doc.mode,
        "frame": list(doc.frame.atoms),
        "model": doc.model.to_json(),
        "sources": list(doc.sources),
        "conflict_k": str(result.conflict_k),
        "masses": {display(f): str(v) for f, v in m.items()},
        "decimal": {display(f): decimal_text(alg.to_real(v)) for f, v in m.items()},
    }
    if config.rule in ("mix", "mdpcr"):
        report["dissimilarity"] = config.dissimilarity.value
    if config.alpha is not None and config.rule in ("dpcr", "dpcr_lambda", "mdpcr"):
        report["alpha"] = str(config.alpha)
    total = m.total()
    if doc.mode == "qualitative":
        report["quasi_normalized"] = quasi_normalized([total])
        if config.approximate_output:
            report["approximate"] = {display(f): str(v.approximate()) for f, v in m.items()}
    else:
        report["normalized"] = total == 1
    report["total"] = str(total)
    if with_betp:
        table = {}
        for atom in doc.frame.atoms:
            value = betp(m, doc.model.atom(atom))
            table[atom] = str(value)
        report["betp"] = table
    return report


def run_fusion(doc: Document, config: RuleConfig | None = None, with_betp: bool = False) -> tuple[dict, FusionResult]:
    config = config or doc.config
    if config is None:
        raise ValidationError("no rule given: set \"rule\" in the document or pass --rule")
    result = combine(list(doc.sources.values()), config)
    return fusion_report(doc, result, config, with_betp), result


def dumps_report(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"

