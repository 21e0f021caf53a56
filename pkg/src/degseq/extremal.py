"""Threshold machinery: enumerate positive graphic sequences, verify the
closed-form checks against the oracle, and locate empirical sigma thresholds."""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from degseq.core import DegreeSequence, _graphic_sorted, format_sequence
from degseq.characterize import check_for_pattern
from degseq.oracle import BudgetExhaustedError, SearchBudget, potentially_oracle
from degseq.patterns import PatternId

__all__ = [
    "MismatchReport",
    "SigmaResult",
    "empirical_sigma",
    "enumerate_graphic_sequences",
    "extremal_witness",
    "formula_sigma",
    "verify_characterization",
]

SCHEMA_VERSION = "v1"

_MIN_N = 4
_MAX_N = 10

# Patterns whose threshold is 4n-4; the remaining supported pair is the
# complete-tripartite pattern (alias of k5-k3) at 4n-2 with the n=6 bump.
_FOUR_N_MINUS_4 = frozenset({PatternId.K5_P3, PatternId.K5_C4, PatternId.C5})
_TRIPARTITE = frozenset({PatternId.K311, PatternId.K5_K3})


@dataclass(frozen=True)
class MismatchReport:
    """Outcome of comparing a closed-form check against the oracle on a range."""

    pattern: PatternId
    n_lo: int
    n_hi: int
    sequences_checked: int
    mismatches: tuple[tuple[DegreeSequence, bool, bool], ...]
    budget_failures: tuple[DegreeSequence, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.budget_failures

    def to_record(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "pattern": self.pattern.token,
            "n_lo": self.n_lo,
            "n_hi": self.n_hi,
            "checked": self.sequences_checked,
            "mismatches": [
                {
                    "sequence": format_sequence(seq),
                    "theorem": theorem,
                    "oracle": oracle,
                }
                for seq, theorem, oracle in self.mismatches
            ],
            "budget_failures": [format_sequence(seq) for seq in self.budget_failures],
        }


@dataclass(frozen=True)
class SigmaResult:
    """Empirical threshold for one pattern and n.

    empirical is the smallest even s such that every positive graphic sequence
    of length n with sum >= s is potentially pattern-graphic. The witnesses
    are the failing sequences at level empirical - 2 (at most 10 kept, the
    lexicographically greatest; exceptional_count is exact).
    """

    pattern: PatternId
    n: int
    empirical: int
    formula: int | None
    exceptional_sequences: tuple[DegreeSequence, ...]
    exceptional_count: int
    checked: int
    elapsed_ms: int

    @property
    def match(self) -> bool | None:
        if self.formula is None:
            return None
        return self.empirical == self.formula

    def to_record(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "pattern": self.pattern.token,
            "n": self.n,
            "empirical": self.empirical,
            "formula": self.formula,
            "match": self.match,
            "witnesses": [format_sequence(seq) for seq in self.exceptional_sequences],
            "exceptional_count": self.exceptional_count,
            "checked": self.checked,
            "elapsed_ms": self.elapsed_ms,
        }


def _partitions(total: int, length: int, max_part: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing positive tuples of the given length summing to total."""
    if length == 0:
        if total == 0:
            yield ()
        return
    if total < length or total > length * max_part:
        return
    for first in range(min(max_part, total - length + 1), 0, -1):
        for rest in _partitions(total - first, length - 1, first):
            yield (first,) + rest


def _level_terms(n: int, s: int) -> list[tuple[int, ...]]:
    """All positive graphic length-n tuples with sum s, lexicographically decreasing."""
    return [t for t in _partitions(s, n, n - 1) if _graphic_sorted(t)]


def _even_levels(n: int, min_sigma: int | None) -> range:
    top = n * (n - 1)
    bottom = n if n % 2 == 0 else n + 1
    if min_sigma is not None:
        bottom = max(bottom, min_sigma + (min_sigma % 2))
    return range(top, bottom - 1, -2)


def enumerate_graphic_sequences(
    n: int, min_sigma: int | None = None
) -> Iterator[DegreeSequence]:
    """Every positive graphic sequence of length n, in decreasing-sum order.

    Within one sum level the order is lexicographically decreasing. Each
    sequence appears exactly once; 4 <= n <= 10.
    """
    if not _MIN_N <= n <= _MAX_N:
        raise ValueError(f"enumeration supports {_MIN_N} <= n <= {_MAX_N}, got {n}")
    for s in _even_levels(n, min_sigma):
        for terms in _level_terms(n, s):
            yield DegreeSequence(terms)


def _default_workers() -> int:
    raw = os.environ.get("DEGSEQ_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _oracle_worker(
    args: tuple[PatternId, tuple[tuple[int, ...], ...], SearchBudget | None]
) -> list[bool | None]:
    pattern, chunk, budget = args
    out: list[bool | None] = []
    for terms in chunk:
        try:
            out.append(potentially_oracle(DegreeSequence(terms), pattern, budget))
        except BudgetExhaustedError:
            out.append(None)
    return out


def _oracle_map(
    pattern: PatternId,
    terms_list: list[tuple[int, ...]],
    budget: SearchBudget | None,
    executor: ProcessPoolExecutor | None,
    workers: int,
) -> list[bool | None]:
    """Oracle verdicts for each sequence; None marks budget exhaustion.

    Results come back in input order whatever the worker count, so callers
    produce identical reports for any --workers setting.
    """
    if executor is None or len(terms_list) < 2 * workers:
        return _oracle_worker((pattern, tuple(terms_list), budget))
    size = (len(terms_list) + workers - 1) // workers
    chunks = [
        (pattern, tuple(terms_list[i : i + size]), budget)
        for i in range(0, len(terms_list), size)
    ]
    out: list[bool | None] = []
    for part in executor.map(_oracle_worker, chunks):
        out.extend(part)
    return out


def verify_characterization(
    pattern: PatternId,
    n_lo: int,
    n_hi: int,
    workers: int | None = None,
    budget: SearchBudget | None = None,
) -> MismatchReport:
    """Compare the closed-form check with the oracle on every sequence in range.

    Supported patterns are the characterized ones (plus the 4-cycle, which may
    start at n_lo = 4). Budget exhaustion lands in budget_failures, never in
    the verdict columns.
    """
    floor = 4 if pattern is PatternId.C4 else 5
    if not floor <= n_lo <= n_hi <= _MAX_N:
        raise ValueError(
            f"verification range must satisfy {floor} <= n_lo <= n_hi <= {_MAX_N}"
        )
    workers = workers if workers is not None else _default_workers()
    checked = 0
    mismatches: list[tuple[DegreeSequence, bool, bool]] = []
    budget_failures: list[DegreeSequence] = []
    executor = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for n in range(n_lo, n_hi + 1):
            for s in _even_levels(n, None):
                level = _level_terms(n, s)
                if not level:
                    continue
                checked += len(level)
                verdicts = _oracle_map(pattern, level, budget, executor, workers)
                for terms, oracle_verdict in zip(level, verdicts):
                    seq = DegreeSequence(terms)
                    if oracle_verdict is None:
                        budget_failures.append(seq)
                        continue
                    theorem_verdict = check_for_pattern(seq, pattern).decision
                    if theorem_verdict != oracle_verdict:
                        mismatches.append((seq, theorem_verdict, oracle_verdict))
    finally:
        if executor is not None:
            executor.shutdown()
    return MismatchReport(
        pattern, n_lo, n_hi, checked, tuple(mismatches), tuple(budget_failures)
    )


def formula_sigma(pattern: PatternId, n: int) -> int:
    """Closed-form threshold: 4n-4 for the three cycle-like patterns, 4n-2
    (26 at n = 6) for the complete tripartite one."""
    if n < 5:
        raise ValueError(f"thresholds are defined for n >= 5, got {n}")
    if pattern in _FOUR_N_MINUS_4:
        return 4 * n - 4
    if pattern in _TRIPARTITE:
        return 26 if n == 6 else 4 * n - 2
    raise ValueError(f"no threshold formula for pattern {pattern.token}")


def extremal_witness(pattern: PatternId, n: int) -> DegreeSequence:
    """The standard maximal failing sequence below the threshold."""
    if n < 5:
        raise ValueError(f"witnesses are defined for n >= 5, got {n}")
    if pattern in _FOUR_N_MINUS_4:
        return DegreeSequence((n - 1, n - 1) + (2,) * (n - 2))
    if pattern in _TRIPARTITE:
        return DegreeSequence((n - 1,) + (3,) * (n - 1))
    raise ValueError(f"no extremal witness for pattern {pattern.token}")


def empirical_sigma(
    pattern: PatternId,
    n: int,
    workers: int | None = None,
    budget: SearchBudget | None = None,
) -> SigmaResult:
    """Scan sum levels downward until one contains a failing sequence.

    Every level above the reported threshold is checked in full, and the
    failing level itself is fully evaluated so the witness count is exact.
    Raises RuntimeError when the oracle budget runs out mid-scan.
    """
    if not 5 <= n <= 9:
        raise ValueError(f"sigma scan supports 5 <= n <= 9, got {n}")
    workers = workers if workers is not None else _default_workers()
    started = time.perf_counter()
    try:
        formula = formula_sigma(pattern, n)
    except ValueError:
        formula = None
    checked = 0
    empirical = None
    witnesses: tuple[DegreeSequence, ...] = ()
    failing_count = 0
    executor = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        levels = _even_levels(n, None)
        for s in levels:
            level = _level_terms(n, s)
            if not level:
                continue
            checked += len(level)
            verdicts = _oracle_map(pattern, level, budget, executor, workers)
            failing = []
            for terms, verdict in zip(level, verdicts):
                if verdict is None:
                    raise RuntimeError(
                        f"oracle budget exhausted at sigma={s} on {format_sequence(terms)}"
                    )
                if not verdict:
                    failing.append(terms)
            if failing:
                empirical = s + 2
                witnesses = tuple(DegreeSequence(t) for t in failing[:10])
                failing_count = len(failing)
                break
        if empirical is None:
            # Nothing failed anywhere: the lowest scanned level already works.
            empirical = levels.stop + 1
    finally:
        if executor is not None:
            executor.shutdown()
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    return SigmaResult(
        pattern, n, empirical, formula, witnesses, failing_count, checked, elapsed_ms
    )
