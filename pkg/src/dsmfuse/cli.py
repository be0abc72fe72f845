"""Command line entry point: ``dsmfuse fuse|verify|inspect``."""

from __future__ import annotations

import argparse
import sys

from . import verify
from .document import dumps_report, load_document, run_fusion
from .errors import FusionError, ValidationError
from .frame import EMPTY_SYMBOL
from .rules import RULE_NAMES, AlphaPolicy, RuleConfig
from .weights import DissimilarityChoice

DISSIMILARITIES = {"delta": "delta_min", "eta": "eta_max", "jaccard": "jaccard"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dsmfuse", description="Exact belief-function fusion.")
    sub = parser.add_subparsers(dest="command", required=True)

    fuse = sub.add_parser("fuse", help="combine the sources of a document")
    fuse.add_argument("--input", required=True, help="JSON document")
    fuse.add_argument("--rule", choices=RULE_NAMES, help="overrides the document's rule")
    fuse.add_argument("--dissimilarity", choices=sorted(DISSIMILARITIES))
    fuse.add_argument("--alpha", help="fixed:R, global or lambda")
    fuse.add_argument("--betp", action="store_true", help="add pignistic probabilities of the atoms")
    fuse.add_argument("--approximate", action="store_true", help="also print labels rounded to the scale")
    fuse.add_argument("--figure", metavar="PATH", help="save a bar chart of the fused masses")

    check = sub.add_parser("verify", help="replay the reference examples")
    check.add_argument("--filter", help="example=K or name=TEXT")

    inspect = sub.add_parser("inspect", help="show the frame's regions and set cardinalities")
    inspect.add_argument("--input", required=True)
    return parser


def _config(args, doc) -> RuleConfig:
    base = doc.config
    rule = args.rule or (base.rule if base else None)
    if rule is None:
        raise ValidationError("no rule given: use --rule or set \"rule\" in the document")
    if args.dissimilarity:
        dissim = DissimilarityChoice(DISSIMILARITIES[args.dissimilarity])
    else:
        dissim = base.dissimilarity if base else DissimilarityChoice.DELTA_MIN
    if args.alpha:
        alpha = AlphaPolicy.parse(args.alpha)
    else:
        alpha = base.alpha if base and base.rule == rule else None
    approximate = args.approximate or (base.approximate_output if base else False)
    return RuleConfig(rule, dissim, alpha, approximate)


def _fuse(args, out) -> int:
    doc = load_document(args.input)
    report, _ = run_fusion(doc, _config(args, doc), with_betp=args.betp)
    out.write(dumps_report(report))
    if args.figure:
        from .plotting import plot_masses

        plot_masses(report, args.figure)
    return 0


def _inspect(args, out) -> int:
    doc = load_document(args.input)
    frame, model = doc.frame, doc.model
    out.write(f"frame: {', '.join(frame.atoms)}\nmodel: {model.kind}\n")
    if model.constraints:
        out.write("empty: " + ", ".join("&".join(c) for c in model.constraints) + "\n")
    out.write("regions:\n")
    for s in range(1, 2 ** frame.n):
        state = "forbidden" if model.forbidden >> s & 1 else "allowed"
        out.write(f"  {s:>5}  {'&'.join(frame.region_atoms(s)):<20} {state}\n")
    out.write("focal elements:\n")
    seen = {}
    for m in doc.sources.values():
        for f, _ in m.items():
            seen.setdefault(f.bits, f)
    for bits in sorted(seen):
        f = seen[bits]
        text = model.display(f) if f else EMPTY_SYMBOL
        out.write(f"  {text:<20} cardinality {f.cardinality()}  regions {f.regions()}\n")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "fuse":
            return _fuse(args, sys.stdout)
        if args.command == "inspect":
            return _inspect(args, sys.stdout)
        failures = verify.run(filter_text=args.filter, stream=sys.stdout)
        return 4 if failures else 0
    except FusionError as e:
        print(f"error[{e.code}]: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
