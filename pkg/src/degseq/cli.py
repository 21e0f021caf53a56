"""Command line surface for the degseq library.

Subcommands:
  check     closed-form pattern decision, optionally cross-checked by the oracle
  realize   Havel-Hakimi realization printed as an edge list
  witness   realization containing a pattern copy, with the embedding map
  verify    closed-form decisions vs the search oracle over a range of n
  sigma     empirical sum threshold vs the closed formula for one n
  patterns  catalogue of supported pattern tokens

Exit codes are total: 0 yes or verified, 1 no, 2 input error, 3 disagreement
between closed form and oracle, 4 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from degseq.characterize import check_for_pattern
from degseq.core import (
    DegreeSequence,
    first_eg_violation,
    format_sequence,
    havel_hakimi_realize,
    is_graphic_eg,
    parse_sequence,
)
from degseq.extremal import empirical_sigma, verify_characterization
from degseq.oracle import (
    DEFAULT_MAX_NODES,
    BudgetExhaustedError,
    SearchBudget,
    find_witness,
    potentially_oracle,
)
from degseq.patterns import PatternId, find_embedding, pattern_graph

# Every token the CLI accepts, in catalogue order. The library also knows
# K5_E, which has no CLI surface.
_TOKENS = (
    "k5-p3",
    "k5-a3",
    "k5-k3",
    "k5-k13",
    "k5-2k2",
    "c4",
    "c5",
    "k5-c4",
    "k122",
    "k311",
)

# Tokens with a closed-form check (isomorphic aliases included).
_CLOSED_FORM_TOKENS = (
    "k5-p3",
    "k5-a3",
    "k5-k3",
    "k5-k13",
    "k5-2k2",
    "c4",
    "k122",
    "k311",
)

_ALIASES = {"k122": "k5-2k2", "k311": "k5-k3"}


def _emit(args: argparse.Namespace, record: dict, lines: list[str]) -> None:
    """Print either the JSON record or the plain-text lines."""
    if args.json:
        print(json.dumps(record, indent=2))
    else:
        for line in lines:
            print(line)


def _decision_word(decision: bool) -> str:
    return "potentially" if decision else "not-potentially"


def _family_text(exception: dict | None) -> str:
    if exception is None:
        return "none"
    parts = [exception["family"]]
    parts += [f"{key}={exception[key]}" for key in ("i", "j", "k") if key in exception]
    return " ".join(parts)


def cmd_check(args: argparse.Namespace) -> int:
    seq = parse_sequence(args.seq)
    pattern = PatternId.from_token(args.pattern)
    if args.pattern not in _CLOSED_FORM_TOKENS:
        if not args.oracle:
            raise ValueError(
                f"pattern {args.pattern} has no closed-form check; pass --oracle"
            )
        decision = potentially_oracle(seq, pattern)
        record = {
            "schema": "v1",
            "pattern": pattern.token,
            "sequence": format_sequence(seq),
            "decision": decision,
            "source": "oracle",
        }
        lines = [
            f"pattern: {pattern.token}",
            f"sequence: {format_sequence(seq)}",
            f"decision: {_decision_word(decision)}",
            "source: oracle",
        ]
        _emit(args, record, lines)
        return 0 if decision else 1

    verdict = check_for_pattern(seq, pattern)
    record = {"schema": "v1", **verdict.to_record()}
    lines = [
        f"pattern: {verdict.pattern.token}",
        f"sequence: {format_sequence(seq)}",
        f"decision: {_decision_word(verdict.decision)}",
        f"theorem: {verdict.theorem}",
    ]
    if verdict.failed_conditions:
        lines.append("failed: " + "; ".join(verdict.failed_conditions))
    if verdict.exception_match is not None:
        lines.append("exception: " + _family_text(record["exception"]))

    disagree = False
    if args.oracle:
        oracle_decision = potentially_oracle(seq, pattern)
        disagree = oracle_decision != verdict.decision
        record["oracle"] = {
            "decision": oracle_decision,
            "agrees": not disagree,
        }
        lines.append(f"oracle: {_decision_word(oracle_decision)}")
        lines.append(f"agreement: {'no' if disagree else 'yes'}")
    _emit(args, record, lines)
    if disagree:
        return 3
    return 0 if verdict.decision else 1


def cmd_realize(args: argparse.Namespace) -> int:
    seq = parse_sequence(args.seq)
    if not is_graphic_eg(seq):
        if seq.sigma % 2:
            detail = "odd degree sum"
        else:
            detail = f"Erdos-Gallai violation at k={first_eg_violation(seq)}"
        print(f"error: {format_sequence(seq)} is not graphic: {detail}", file=sys.stderr)
        return 2
    graph = havel_hakimi_realize(seq)
    record = {
        "schema": "v1",
        "sequence": format_sequence(seq),
        "n": graph.n,
        "edges": [f"{u}-{v}" for u, v in graph.edges],
    }
    lines = [graph.edge_text()] if graph.edge_count else []
    _emit(args, record, lines)
    return 0


def cmd_witness(args: argparse.Namespace) -> int:
    seq = parse_sequence(args.seq)
    pattern = PatternId.from_token(args.pattern)
    budget = SearchBudget(max_nodes=args.budget_nodes)
    try:
        graph = find_witness(seq, pattern, budget)
    except BudgetExhaustedError:
        record = {
            "schema": "v1",
            "pattern": pattern.token,
            "sequence": format_sequence(seq),
            "found": None,
            "budget_exhausted": True,
        }
        _emit(args, record, ["budget exhausted"])
        return 4
    record = {
        "schema": "v1",
        "pattern": pattern.token,
        "sequence": format_sequence(seq),
        "found": graph is not None,
    }
    if graph is None:
        _emit(args, record, ["no witness"])
        return 1
    embedding = find_embedding(graph, pattern_graph(pattern))
    assert embedding is not None
    record["edges"] = [f"{u}-{v}" for u, v in graph.edges]
    record["embedding"] = list(embedding)
    lines = [graph.edge_text()] if graph.edge_count else []
    lines.append(
        "embedding: " + " ".join(f"{p}->{h}" for p, h in enumerate(embedding))
    )
    _emit(args, record, lines)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    pattern = PatternId.from_token(args.pattern)
    report = verify_characterization(
        pattern, args.n_lo, args.n_hi, workers=args.workers
    )
    record = report.to_record()
    if report.ok:
        result = "verified"
    elif report.mismatches:
        result = "mismatch"
    else:
        result = "budget-exhausted"
    lines = [
        f"pattern: {pattern.token}",
        f"range: n={args.n_lo}..{args.n_hi}",
        f"checked: {report.sequences_checked}",
        f"mismatches: {len(report.mismatches)}",
        f"budget failures: {len(report.budget_failures)}",
    ]
    for seq, theorem, oracle in report.mismatches:
        lines.append(
            f"mismatch: {format_sequence(seq)} "
            f"theorem={_decision_word(theorem)} oracle={_decision_word(oracle)}"
        )
    for seq in report.budget_failures:
        lines.append(f"budget failure: {format_sequence(seq)}")
    lines.append(f"result: {result}")
    _emit(args, record, lines)
    if report.mismatches:
        return 3
    if report.budget_failures:
        return 4
    return 0


def cmd_sigma(args: argparse.Namespace) -> int:
    pattern = PatternId.from_token(args.pattern)
    try:
        result = empirical_sigma(pattern, args.n, workers=args.workers)
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    record = result.to_record()
    # elapsed_ms is the one nondeterministic field; the CLI contract promises
    # byte-identical output across runs and worker counts, so drop it here.
    del record["elapsed_ms"]
    formula = "none" if result.formula is None else str(result.formula)
    match = "n/a" if result.match is None else ("yes" if result.match else "no")
    lines = [
        f"pattern: {pattern.token}",
        f"n: {result.n}",
        f"empirical: {result.empirical}",
        f"formula: {formula}",
        f"match: {match}",
        f"checked: {result.checked}",
        f"witnesses: {result.exceptional_count}",
    ]
    for seq in result.exceptional_sequences:
        lines.append(f"witness: {format_sequence(seq)}")
    _emit(args, record, lines)
    return 3 if result.match is False else 0


def cmd_patterns(args: argparse.Namespace) -> int:
    entries = []
    lines = []
    for token in _TOKENS:
        graph = pattern_graph(PatternId.from_token(token))
        degrees = format_sequence(graph.degree_sequence())
        alias_of = _ALIASES.get(token)
        entries.append(
            {
                "pattern": token,
                "n": graph.n,
                "edges": graph.edge_count,
                "degrees": degrees,
                "alias_of": alias_of,
            }
        )
        line = f"{token:<8} n={graph.n}  edges={graph.edge_count}  degrees={degrees}"
        if alias_of is not None:
            line += f"  (alias of {alias_of})"
        lines.append(line)
    _emit(args, {"schema": "v1", "patterns": entries}, lines)
    return 0


def _add_format_flags(sub: argparse.ArgumentParser) -> None:
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", help="machine-readable output")
    group.add_argument(
        "--text", action="store_true", help="plain text output (default)"
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degseq",
        description="Graphic degree sequences and potentially-H decisions.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    check = subparsers.add_parser(
        "check", help="closed-form decision for one sequence"
    )
    check.add_argument("--pattern", required=True, choices=_TOKENS)
    check.add_argument("--seq", required=True, help='sequence, e.g. "4,3^2,2^3"')
    check.add_argument(
        "--oracle",
        action="store_true",
        help="also run the search oracle and compare",
    )
    _add_format_flags(check)
    check.set_defaults(func=cmd_check)

    realize = subparsers.add_parser("realize", help="print one realization")
    realize.add_argument("--seq", required=True)
    _add_format_flags(realize)
    realize.set_defaults(func=cmd_realize)

    witness = subparsers.add_parser(
        "witness", help="find a realization containing the pattern"
    )
    witness.add_argument("--pattern", required=True, choices=_TOKENS)
    witness.add_argument("--seq", required=True)
    witness.add_argument(
        "--budget-nodes",
        type=int,
        default=DEFAULT_MAX_NODES,
        help="search node budget (default 50 million)",
    )
    _add_format_flags(witness)
    witness.set_defaults(func=cmd_witness)

    verify = subparsers.add_parser(
        "verify", help="compare closed form with the oracle over a range"
    )
    verify.add_argument("--pattern", required=True, choices=_CLOSED_FORM_TOKENS)
    verify.add_argument("--n-lo", type=int, required=True)
    verify.add_argument("--n-hi", type=int, required=True)
    verify.add_argument(
        "--workers",
        type=int,
        default=None,
        help="process count (default from DEGSEQ_WORKERS, else 1)",
    )
    _add_format_flags(verify)
    verify.set_defaults(func=cmd_verify)

    sigma = subparsers.add_parser(
        "sigma", help="empirical vs formula sum threshold for one n"
    )
    sigma.add_argument("--pattern", required=True, choices=_TOKENS)
    sigma.add_argument("--n", type=int, required=True)
    sigma.add_argument("--workers", type=int, default=None)
    _add_format_flags(sigma)
    sigma.set_defaults(func=cmd_sigma)

    patterns = subparsers.add_parser("patterns", help="list supported patterns")
    _add_format_flags(patterns)
    patterns.set_defaults(func=cmd_patterns)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
