"""Replay the reference cases and report pass/fail per check."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, TextIO

from .corpus import CASES, Case, value_of
from .errors import FusionError, ValidationError


@dataclass(frozen=True)
class Outcome:
    case: Case
    key: str
    status: str  # PASS, FAIL or ERRATUM
    detail: str


def parse_filter(text: str | None):
    """``example=6`` or a bare ``6`` selects one example; ``name=pcr`` matches case names."""
    if not text:
        return lambda case: True
    field_name, _, value = text.partition("=") if "=" in text else ("example", "", text)
    field_name = field_name.strip()
    value = value.strip()
    if field_name == "example":
        return lambda case: case.example == value
    if field_name == "name":
        return lambda case: value in case.name
    raise ValidationError(f"unknown filter field {field_name!r}; use example=K or name=TEXT")


def _fmt(x: Fraction) -> str:
    return f"{x} (~{float(x):.6f})" if x.denominator != 1 else str(x)


def check_case(case: Case) -> list[Outcome]:
    try:
        actual = case.run()
    except FusionError as e:
        return [Outcome(case, "*", "FAIL", f"raised {e.code}: {e}")]
    out = []
    for c in case.checks:
        got = value_of(actual[c.key], case.qualitative) if c.key in actual else Fraction(0)
        diff = abs(got - c.expected)
        ok = diff <= c.tolerance
        if c.kind == "recomputed" and ok:
            status = "ERRATUM"
            detail = f"printed {c.printed}, computed {_fmt(got)}"
        else:
            status = "PASS" if ok else "FAIL"
            detail = f"expected {_fmt(c.expected)}, got {_fmt(got)}"
            if c.tolerance:
                detail += f", |diff| {float(diff):.2e} vs tol {float(c.tolerance):.0e}"
        out.append(Outcome(case, c.key, status, detail))
    if case.complete:
        listed = {c.key for c in case.checks}
        for key in actual:
            if key not in listed:
                out.append(Outcome(case, key, "FAIL", f"unexpected focal element with {actual[key]}"))
    return out


def run(cases: Iterable[Case] = CASES, filter_text: str | None = None, stream: TextIO | None = None) -> int:
    """Print one line per check and return the number of failures."""
    keep = parse_filter(filter_text)
    failures = 0
    selected = 0
    for case in cases:
        if not keep(case):
            continue
        selected += 1
        for o in check_case(case):
            failures += o.status == "FAIL"
            if stream is not None:
                print(f"{o.status:<7} example {case.example} {case.name} [{o.key}]: {o.detail}", file=stream)
    if stream is not None:
        print(f"{selected} cases, {failures} failures", file=stream)
    return failures
