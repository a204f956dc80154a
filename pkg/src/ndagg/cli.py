"""Command-line front door.

Exit codes: 0 success, 1 a property check found a violation, 2 validation
error, 3 I/O error.  Given the same inputs and seed, every command's output
is byte identical across runs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .core import ValidationError, WeightingVector
from .mcgdm import (DecisionProblem, build_collective, load_fixture, problem_from_csv,
                    run_pipeline, sensitivity)
from .ndim_agg import (NDIM_FAMILIES, OrderCompatibilityError, build_ndim_aggregation,
                       check_mw_properties, classify)
from .orders import ORDER_KINDS, order_from_spec, verify_admissibility
from .sampling import DEFAULT_SEED
from .semivector import check_order_compatibility, check_semifield_axioms, check_semivector_axioms

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_VALIDATION = 2
EXIT_IO = 3


def format_number(v: float) -> str:
    """Up to five decimals with trailing zeros trimmed; JSON output keeps
    full precision instead."""
    s = f"{v:.5f}".rstrip("0").rstrip(".")
    return s if s else "0"


def _read_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _parse_inline_json(arg: str) -> dict:
    if arg.startswith("@"):
        return _read_json(arg[1:])
    return json.loads(arg)


def _emit(doc, args) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_text(lines: list[str], args) -> None:
    text = "\n".join(lines) + "\n"
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_problem(args, require_pipeline: bool = True) -> DecisionProblem:
    if getattr(args, "problem", None):
        if args.problem == "paper-example":
            doc = load_fixture("paper_example.json")
        else:
            doc = _read_json(args.problem)
        return DecisionProblem.from_json(doc, require_pipeline=require_pipeline)
    if getattr(args, "expert_csv", None):
        weights = WeightingVector.from_json([float(w) for w in args.weights.split(",")]) if args.weights else None
        order_spec = _parse_inline_json(args.order) if args.order else None
        agg_spec = _parse_inline_json(args.aggregator) if args.aggregator else None
        problem = problem_from_csv(args.expert_csv, weights, order_spec, agg_spec)
        if require_pipeline:
            problem.validate_pipeline()
        return problem
    raise ValidationError("no input: pass --problem FILE or --expert-csv FILE ...")


def _rank_table(result_doc: dict) -> list[str]:
    lines = ["rank  alternative  score"]
    for pos, label in enumerate(result_doc["ranking"]["worst_to_best"], start=1):
        idx = result_doc["alternatives"].index(label)
        score = ", ".join(format_number(v) for v in result_doc["scores"][idx])
        lines.append(f"{pos:<5} {label:<12} ({score})")
    for note in result_doc["annotations"]:
        lines.append(f"note: {note}")
    return lines


def cmd_rank(args) -> int:
    problem = _load_problem(args)
    result = run_pipeline(problem, seed=args.seed).to_json()
    if args.format == "table":
        _emit_text(_rank_table(result), args)
    else:
        _emit(result, args)
    return EXIT_OK


def cmd_score(args) -> int:
    problem = _load_problem(args)
    result = run_pipeline(problem, seed=args.seed).to_json()
    doc = {"alternatives": result["alternatives"], "scores": result["scores"],
           "annotations": result["annotations"]}
    if args.format == "table":
        lines = ["alternative  score"]
        for label, score in zip(doc["alternatives"], doc["scores"]):
            lines.append(f"{label:<12} ({', '.join(format_number(v) for v in score)})")
        _emit_text(lines, args)
    else:
        _emit(doc, args)
    return EXIT_OK


def cmd_collective(args) -> int:
    problem = _load_problem(args, require_pipeline=False)
    collective = build_collective(problem)
    doc = {"alternatives": problem.alternatives, "criteria": problem.criteria,
           "entries": collective.to_json()}
    if args.format == "table":
        lines = []
        for label, row in zip(problem.alternatives, doc["entries"]):
            cells = "  ".join("(" + ",".join(format_number(v) for v in cell) + ")" for cell in row)
            lines.append(f"{label}: {cells}")
        _emit_text(lines, args)
    else:
        _emit(doc, args)
    return EXIT_OK


def cmd_validate(args) -> int:
    problem = _load_problem(args)
    _emit({"valid": True, "alternatives": problem.p, "criteria": problem.m,
           "experts": problem.n, "hash": problem.canonical_hash()}, args)
    return EXIT_OK


def _reports_exit(reports, args, extra: Optional[dict] = None) -> int:
    doc = {"reports": [r.to_json() for r in reports]}
    if extra:
        doc.update(extra)
    _emit(doc, args)
    return EXIT_OK if all(r.holds for r in reports) else EXIT_VIOLATION


def cmd_check_order(args) -> int:
    spec = _parse_inline_json(args.order)
    order = order_from_spec(spec)
    reports = verify_admissibility(order, samples=args.samples, seed=args.seed)
    sv8, sv9 = check_order_compatibility(order, samples=args.samples, seed=args.seed,
                                         saturating=args.saturating)
    return _reports_exit(reports + [sv8, sv9], args, {"order": order.to_json()})


def cmd_check_axioms(args) -> int:
    reports = check_semifield_axioms(samples=args.samples, seed=args.seed,
                                     saturating=args.saturating)
    reports += check_semivector_axioms(dimension=args.dimension, samples=args.samples,
                                       seed=args.seed, saturating=args.saturating)
    return _reports_exit(reports, args)


def cmd_classify(args) -> int:
    order = order_from_spec(_parse_inline_json(args.order))
    spec = _parse_inline_json(args.agg)
    arity = args.arity or len(spec.get("omega", [])) or order.dimension
    try:
        func = build_ndim_aggregation(spec, arity=arity, order=order, seed=args.seed)
    except OrderCompatibilityError as exc:
        _emit({"error": str(exc), "axiom": exc.axiom, "report": exc.report.to_json()}, args)
        return EXIT_VIOLATION
    reports = classify(func, samples=args.samples, seed=args.seed)
    doc = {"aggregation": func.to_json(),
           "classification": {name: r.to_json() for name, r in reports.items()},
           "summary": {name: r.holds for name, r in reports.items()}}
    _emit(doc, args)
    return EXIT_OK


def cmd_sensitivity(args) -> int:
    problem = _load_problem(args)
    edits = []
    for text in args.edit or []:
        edit: dict = {"kind": "cell"}
        for part in text.split(","):
            key, _, value = part.partition("=")
            key = key.strip()
            if key in ("expert", "alt", "crit"):
                edit[key] = int(value)
            elif key == "value":
                edit["value"] = float(value)
            else:
                raise ValidationError(f"unknown edit field {key!r}")
        edits.append(edit)
    for text in args.edit_json or []:
        edits.append(_parse_inline_json(text))
    _emit(sensitivity(problem, edits, seed=args.seed), args)
    return EXIT_OK


def cmd_serve(args) -> int:
    from . import service
    service.run(host=args.host, port=args.port, data_dir=args.data_dir)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ndagg",
        description="Rank alternatives from multi-expert evaluations and check the algebra behind it.")
    sub = parser.add_subparsers(dest="command", required=True)
    default_seed = int(os.environ.get("NDAGG_SEED", DEFAULT_SEED))

    def add_common(p, with_format=True):
        p.add_argument("--seed", type=int, default=default_seed)
        p.add_argument("--output", help="write here instead of stdout")
        if with_format:
            p.add_argument("--format", choices=("json", "table"), default="json")

    def add_problem_inputs(p):
        p.add_argument("--problem", help="problem JSON file, or 'paper-example' for the bundled preset")
        p.add_argument("--expert-csv", action="append",
                       help="per-expert CSV matrix (repeatable, rows=alternatives)")
        p.add_argument("--weights", help="comma-separated criterion weights (CSV input only)")
        p.add_argument("--order", help="order spec, inline JSON or @file (CSV input only)")
        p.add_argument("--aggregator", help="aggregator spec, inline JSON or @file (CSV input only)")

    p = sub.add_parser("rank", help="run the full pipeline and rank the alternatives")
    add_problem_inputs(p)
    add_common(p)
    p.set_defaults(fn=cmd_rank)

    p = sub.add_parser("score", help="compute the per-alternative scores")
    add_problem_inputs(p)
    add_common(p)
    p.set_defaults(fn=cmd_score)

    p = sub.add_parser("collective", help="sort the expert cube into the collective matrix")
    add_problem_inputs(p)
    add_common(p)
    p.set_defaults(fn=cmd_collective)

    p = sub.add_parser("validate", help="validate a problem file")
    add_problem_inputs(p)
    add_common(p, with_format=False)
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("check-order", help="admissibility and algebra compatibility of an order")
    p.add_argument("--order", required=True, help="order spec, inline JSON or @file")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--saturating", action="store_true",
                   help="sample the whole cube instead of the non-saturating cone")
    add_common(p, with_format=False)
    p.set_defaults(fn=cmd_check_order)

    p = sub.add_parser("check-axioms", help="scalar and tuple algebra law suites")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--dimension", type=int, default=4)
    p.add_argument("--saturating", action="store_true",
                   help="sample the whole cube instead of the non-saturating cone")
    add_common(p, with_format=False)
    p.set_defaults(fn=cmd_check_axioms)

    p = sub.add_parser("classify", help="sampled classification of an aggregation operator")
    p.add_argument("--agg", required=True, help="aggregator spec, inline JSON or @file")
    p.add_argument("--order", required=True, help="order spec, inline JSON or @file")
    p.add_argument("--arity", type=int, help="argument count (defaults to the omega length)")
    p.add_argument("--samples", type=int, default=400)
    add_common(p, with_format=False)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("sensitivity", help="what-if diff between a problem and an edited copy")
    add_problem_inputs(p)
    p.add_argument("--edit", action="append",
                   help="cube edit like 'expert=2,alt=4,crit=3,value=0.1' (repeatable)")
    p.add_argument("--edit-json", action="append",
                   help="structured edit, inline JSON or @file (repeatable)")
    add_common(p, with_format=False)
    p.set_defaults(fn=cmd_sensitivity)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=int(os.environ.get("NDAGG_PORT", 8080)))
    p.add_argument("--data-dir", default=os.environ.get("NDAGG_DATA_DIR", "./ndagg-problems"))
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except OrderCompatibilityError as exc:
        sys.stderr.write(f"error: {exc} (axiom {exc.axiom})\n")
        return EXIT_VALIDATION
    except ValidationError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_VALIDATION
    except json.JSONDecodeError as exc:
        sys.stderr.write(f"error: malformed JSON: {exc}\n")
        return EXIT_VALIDATION
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_IO
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
