"""Command-line front end.

Subcommands: solve-pcp, transform, compile, canonical, eval, check, verify,
grid-search.  Every run writes a machine-readable ``key=value`` summary as
the last stdout line.  Exit codes: 0 success or satisfied, 1 definitive
negative (violated check, solved instance in verify), 2 inconclusive
(nothing found within a bound, budget exhausted), 3 usage or format error.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from .canonical import (
    DEFAULT_MAX_NODES,
    ConsistentToDepth,
    Solved,
    build_canonical,
    label_depth,
    node_label,
    verify_theorem,
)
from .concepts import ConceptAssertion, Gci, max_quantifier_depth
from .degrees import parse_degree
from .errors import BudgetExceededError, ParseError, ValidationError
from .interp import check_kb, eval_concept, parse_model, print_model
from .parser import parse_concept, parse_kb, print_concept, print_kb
from .pcp import (
    DEFAULT_MAX_ENUM,
    parse_pcp,
    print_pcp,
    solve_pcp,
    solve_rpcp,
    to_rpcp,
)
from .reduction import ReductionConfig, build_kb, build_kb_prime
from .search import grid_search

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    # Usage problems are exit code 3, not argparse's default 2 (which this
    # tool reserves for inconclusive verdicts).
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        sys.exit(3)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def _config(args: argparse.Namespace) -> ReductionConfig:
    if getattr(args, "epsilon", None) is None:
        return ReductionConfig()
    return ReductionConfig(parse_degree(args.epsilon))


def _axiom_line(axiom) -> str:
    if isinstance(axiom, Gci):
        return f"(gci {print_concept(axiom.lhs)} {print_concept(axiom.rhs)} {axiom.grade})"
    if isinstance(axiom, ConceptAssertion):
        return f"(instance {axiom.individual} {print_concept(axiom.concept)} {axiom.grade})"
    return f"(related {axiom.subject} {axiom.target} {axiom.role} {axiom.grade})"


def _cmd_solve_pcp(args: argparse.Namespace) -> int:
    instance = parse_pcp(_read(args.instance))
    mode = "rpcp" if args.reverse else "pcp"
    solver = solve_rpcp if args.reverse else solve_pcp
    print(f"searching {mode} sequences up to length {args.max_len}")
    sequence = solver(instance, args.max_len, max_enum=args.max_enum)
    if sequence is None:
        print(f"no solution up to length {args.max_len} (not a proof of unsolvability)")
        print(f"verdict=not-found mode={mode} max-len={args.max_len}")
        return 2
    print(f"found solution {node_label(sequence)}")
    print(
        f"verdict=found mode={mode} sequence={node_label(sequence)} length={len(sequence)}"
    )
    return 0


def _cmd_transform(args: argparse.Namespace) -> int:
    instance = parse_pcp(_read(args.instance))
    if args.pal:
        instance = to_rpcp(instance)
    _write(args.out, print_pcp(instance))
    print(f"wrote {len(instance.pairs)} pairs to {args.out}")
    print(f"verdict=ok pairs={len(instance.pairs)} pal={'yes' if args.pal else 'no'}")
    return 0


def _cmd_compile(args: argparse.Namespace) -> int:
    instance = parse_pcp(_read(args.instance))
    if args.pal:
        instance = to_rpcp(instance)
    build = build_kb_prime if args.prime else build_kb
    kb = build(instance, _config(args))
    _write(args.out, print_kb(kb))
    total = len(kb.tbox) + len(kb.abox)
    print(f"compiled knowledge base: {len(kb.tbox)} tbox axioms, {len(kb.abox)} assertions")
    print(f"wrote {args.out}")
    print(
        f"verdict=ok axioms={total} tbox={len(kb.tbox)} abox={len(kb.abox)} "
        f"prime={'yes' if args.prime else 'no'}"
    )
    return 0


def _cmd_canonical(args: argparse.Namespace) -> int:
    instance = parse_pcp(_read(args.instance))
    model = build_canonical(instance, args.depth, _config(args), args.max_nodes)
    _write(args.out, print_model(model.interpretation))
    nodes = len(model.interpretation.domain)
    interior = len(model.interior_elements())
    print(f"built canonical model: {nodes} nodes ({interior} interior), depth {args.depth}")
    print(f"wrote {args.out}")
    print(f"verdict=ok nodes={nodes} interior={interior} depth={args.depth}")
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    interpretation = parse_model(_read(args.model))
    concept = parse_concept(args.concept)
    value = eval_concept(interpretation, concept, args.at)
    print(f"{print_concept(concept)} at {args.at} = {value}")
    print(f"verdict=ok value={value}")
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    kb = parse_kb(_read(args.kb))
    interpretation = parse_model(_read(args.model))
    elements = None
    if args.interior_depth is not None:
        depth = max_quantifier_depth(kb)
        if depth > 1:
            raise ValidationError(
                f"interior-only checking needs quantifier depth <= 1, got {depth}"
            )
        elements = [
            element
            for element in interpretation.domain
            if label_depth(element) < args.interior_depth
        ]
        if not elements:
            raise ValidationError(
                f"no interior elements below depth {args.interior_depth}"
            )
    report = check_kb(interpretation, kb, elements)
    print(
        f"checking {len(report)} axioms on a model with "
        f"{len(interpretation.domain)} elements"
    )
    for position, check in enumerate(report.checks, start=1):
        status = "ok      " if check.satisfied else "VIOLATED"
        print(f"[{position:>3}] {status} value={check.value} {_axiom_line(check.axiom)}")
    violations = report.violations()
    if args.report_dir is not None:
        from .report import write_check_report

        files = write_check_report(report, args.report_dir)
        print("wrote report files: " + ", ".join(str(f) for f in files))
    if violations:
        print(f"{len(violations)} axioms violated")
        print(f"verdict=violated axioms={len(report)} violations={len(violations)}")
        return 1
    print("all axioms satisfied")
    print(f"verdict=satisfied axioms={len(report)} violations=0")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    instance = parse_pcp(_read(args.instance))
    if args.pal:
        instance = to_rpcp(instance)
    config = _config(args)
    result = verify_theorem(
        instance, args.depth, config, max_nodes=args.max_nodes, max_enum=args.max_enum
    )
    print(f"searching rpcp sequences up to length {args.depth}")
    if args.report_dir is not None:
        from .report import write_check_report, write_node_report

        model = build_canonical(instance, args.depth, config, args.max_nodes)
        files = write_node_report(model, args.report_dir)
        if isinstance(result, ConsistentToDepth):
            files += write_check_report(result.report, args.report_dir)
        print("wrote report files: " + ", ".join(str(f) for f in files))
    if isinstance(result, Solved):
        print(f"found solution {node_label(result.sequence)}")
        print(
            f"added axiom for pair {result.violated_axiom} evaluates to "
            f"{result.value} (< 1) at the parent of node {result.node}"
        )
        print("the extended knowledge base has no witnessed model: instance solved")
        print(
            f"verdict=solved depth={args.depth} "
            f"sequence={node_label(result.sequence)} value={result.value}"
        )
        return 1
    print(f"no solution of length <= {args.depth}")
    print(
        f"truncated canonical model satisfies all {len(result.report)} axioms "
        "on interior nodes"
    )
    print("note: this is not a proof of unsolvability; longer solutions may exist")
    print(f"verdict=consistent-to-depth depth={args.depth}")
    return 2


def _cmd_grid_search(args: argparse.Namespace) -> int:
    kb = parse_kb(_read(args.kb))
    print(
        f"searching domains of size {args.size} with degrees in steps of "
        f"1/{args.denominator}"
    )
    model = grid_search(kb, args.size, args.denominator, max_enum=args.max_enum)
    if model is None:
        print("no model of this shape (not a proof of unsatisfiability)")
        print(f"verdict=not-found size={args.size} denominator={args.denominator}")
        return 2
    if args.out is not None:
        _write(args.out, print_model(model))
        print(f"found a model, wrote {args.out}")
    else:
        print("found a model:")
        print(print_model(model), end="")
    print(f"verdict=found size={args.size} denominator={args.denominator}")
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="lukalc",
        description=(
            "Exact-rational toolkit for graded ALC over the Lukasiewicz "
            "operations: model checking, instance compilation, canonical "
            "models, bounded solvers."
        ),
    )
    parser.add_argument("--seed", type=int, default=None, help="seed the process RNG (reserved for randomized workflows; built-in subcommands are deterministic)")
    parser.add_argument("--max-nodes", type=_positive_int, default=DEFAULT_MAX_NODES, help="cap on canonical-model nodes")
    parser.add_argument("--max-enum", type=_positive_int, default=DEFAULT_MAX_ENUM, help="cap on solver/search enumeration")
    commands = parser.add_subparsers(dest="command", required=True, metavar="command")

    sub = commands.add_parser("solve-pcp", help="bounded search for a correspondence solution")
    sub.add_argument("--instance", required=True, help="instance file (.pcp)")
    sub.add_argument("--max-len", required=True, type=_positive_int, help="maximum sequence length")
    sub.add_argument("--reverse", action="store_true", help="concatenate right-to-left")
    sub.set_defaults(handler=_cmd_solve_pcp)

    sub = commands.add_parser("transform", help="rewrite an instance file, optionally reversing every word")
    sub.add_argument("--instance", required=True, help="instance file (.pcp)")
    sub.add_argument("--pal", action="store_true", help="reverse every word")
    sub.add_argument("--out", required=True, help="output instance file")
    sub.set_defaults(handler=_cmd_transform)

    sub = commands.add_parser("compile", help="compile an instance into a knowledge base")
    sub.add_argument("--instance", required=True, help="instance file (.pcp)")
    sub.add_argument("--pal", action="store_true", help="reverse every word first")
    sub.add_argument("--prime", action="store_true", help="add the per-pair separation axioms")
    sub.add_argument("--epsilon", default=None, help="root grade for A (default 1/100)")
    sub.add_argument("--out", required=True, help="output knowledge base file (.flalc)")
    sub.set_defaults(handler=_cmd_compile)

    sub = commands.add_parser("canonical", help="materialize the truncated canonical model")
    sub.add_argument("--instance", required=True, help="instance file (.pcp)")
    sub.add_argument("--depth", required=True, type=_positive_int, help="tree depth")
    sub.add_argument("--epsilon", default=None, help="root grade for A (default 1/100)")
    sub.add_argument("--out", required=True, help="output model file (.fim)")
    sub.set_defaults(handler=_cmd_canonical)

    sub = commands.add_parser("eval", help="evaluate a concept at a model element")
    sub.add_argument("--model", required=True, help="model file (.fim)")
    sub.add_argument("--concept", required=True, help="concept expression")
    sub.add_argument("--at", required=True, help="domain element")
    sub.set_defaults(handler=_cmd_eval)

    sub = commands.add_parser("check", help="check every axiom of a knowledge base on a model")
    sub.add_argument("--kb", required=True, help="knowledge base file (.flalc)")
    sub.add_argument("--model", required=True, help="model file (.fim)")
    sub.add_argument("--interior-depth", type=_positive_int, default=None, help="restrict inclusion infima to node labels shorter than this depth")
    sub.add_argument("--report-dir", default=None, help="write axioms.tsv and figures here")
    sub.set_defaults(handler=_cmd_check)

    sub = commands.add_parser("verify", help="end-to-end: solve, compile, build and check one instance")
    sub.add_argument("--instance", required=True, help="instance file (.pcp)")
    sub.add_argument("--pal", action="store_true", help="reverse every word first")
    sub.add_argument("--depth", required=True, type=_positive_int, help="tree depth and solution-length bound")
    sub.add_argument("--epsilon", default=None, help="root grade for A (default 1/100)")
    sub.add_argument("--report-dir", default=None, help="write nodes.tsv, axioms.tsv and figures here")
    sub.set_defaults(handler=_cmd_verify)

    sub = commands.add_parser("grid-search", help="bounded brute-force model search for a knowledge base")
    sub.add_argument("--kb", required=True, help="knowledge base file (.flalc)")
    sub.add_argument("--size", required=True, type=_positive_int, help="domain size")
    sub.add_argument("--denominator", required=True, type=_positive_int, help="degree grid denominator")
    sub.add_argument("--out", default=None, help="write the found model here")
    sub.set_defaults(handler=_cmd_grid_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.seed is not None:
        random.seed(args.seed)
    try:
        return args.handler(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("verdict=budget-exceeded")
        return 2
    except (ParseError, ValidationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
