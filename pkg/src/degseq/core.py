"""Degree-sequence model, graphicality tests, and the laying-off reduction."""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import groupby
from typing import TYPE_CHECKING, Iterable, Iterator

if TYPE_CHECKING:
    from degseq.patterns import SmallGraph

__all__ = [
    "DegreeSequence",
    "LayOffError",
    "NonGraphicError",
    "ZeroTermsError",
    "format_sequence",
    "graphic_fast_path",
    "havel_hakimi_realize",
    "is_graphic_eg",
    "is_graphic_kw",
    "lay_off",
    "m_h",
    "parse_sequence",
    "sigma",
]


class NonGraphicError(ValueError):
    """The operation requires a graphic sequence but the input is not one."""


class ZeroTermsError(ValueError):
    """The operation requires strictly positive terms but a zero is present.

    Zeros are not silently stripped: dropping them would change n and with it
    every n-dependent membership test.
    """


class LayOffError(ValueError):
    """Laying off the requested term is undefined for this sequence."""


class DegreeSequence:
    """A canonical non-increasing sequence of nonnegative vertex degrees.

    Instances are immutable and hashable. Construction sorts the terms, so any
    ordering may be passed in. Zeros are representable here; operations that
    demand strictly positive terms enforce that themselves.
    """

    __slots__ = ("terms",)

    def __init__(self, values: Iterable[int]) -> None:
        terms = tuple(sorted(values, reverse=True))
        for t in terms:
            if isinstance(t, bool) or not isinstance(t, int):
                raise ValueError(f"degree terms must be integers, got {t!r}")
            if t < 0:
                raise ValueError(f"degree terms must be nonnegative, got {t}")
        self.terms: tuple[int, ...] = terms

    @property
    def n(self) -> int:
        return len(self.terms)

    @property
    def sigma(self) -> int:
        return sum(self.terms)

    @property
    def positive(self) -> bool:
        """True when every term is at least 1 (vacuously true when empty)."""
        return not self.terms or self.terms[-1] >= 1

    def d(self, k: int) -> int:
        """1-based term accessor matching the usual d_k subscript."""
        if not 1 <= k <= len(self.terms):
            raise IndexError(f"d_{k} does not exist in a sequence of length {len(self.terms)}")
        return self.terms[k - 1]

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[int]:
        return iter(self.terms)

    def __getitem__(self, i: int) -> int:
        return self.terms[i]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DegreeSequence):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.terms)

    def __str__(self) -> str:
        return format_sequence(self)

    def __repr__(self) -> str:
        return f"DegreeSequence({format_sequence(self)!r})"


_ITEM_RE = re.compile(r"(\d+)(?:\^(\d+))?")


def parse_sequence(text: str) -> DegreeSequence:
    """Parse comma-separated terms with optional power notation, e.g. "4^2,3^4".

    Whitespace is ignored. Raises ValueError on malformed items (with the
    1-based item position), negative values, or a zero exponent.
    """
    chunks = text.split(",")
    values: list[int] = []
    for pos, chunk in enumerate(chunks, start=1):
        item = "".join(chunk.split())
        match = _ITEM_RE.fullmatch(item)
        if match is None:
            raise ValueError(f"bad sequence item {chunk.strip()!r} at position {pos}")
        base = int(match.group(1))
        if match.group(2) is None:
            values.append(base)
            continue
        exponent = int(match.group(2))
        if exponent == 0:
            raise ValueError(f"zero exponent in item {chunk.strip()!r} at position {pos}")
        if exponent > 1_000_000:
            raise ValueError(f"exponent too large in item {chunk.strip()!r} at position {pos}")
        values.extend([base] * exponent)
    return DegreeSequence(values)


def format_sequence(seq: DegreeSequence | Iterable[int]) -> str:
    """Render in canonical power notation: runs longer than 1 become "r^t"."""
    terms = seq.terms if isinstance(seq, DegreeSequence) else tuple(seq)
    parts = []
    for value, run in groupby(terms):
        count = sum(1 for _ in run)
        parts.append(f"{value}^{count}" if count > 1 else f"{value}")
    return ",".join(parts)


def sigma(seq: DegreeSequence) -> int:
    """Sum of all terms."""
    return seq.sigma


def m_h(seq: DegreeSequence) -> tuple[int, int]:
    """Return (largest positive term, smallest positive term).

    Raises ValueError when the sequence is empty or all-zero.
    """
    positives = [t for t in seq.terms if t > 0]
    if not positives:
        raise ValueError("m and h are undefined for an all-zero or empty sequence")
    return positives[0], positives[-1]


@lru_cache(maxsize=None)
def _graphic_sorted(terms: tuple[int, ...]) -> bool:
    """Erdos-Gallai test over a non-increasing tuple of nonnegative ints."""
    total = 0
    for t in terms:
        total += t
    if total & 1:
        return False
    n = len(terms)
    lhs = 0
    for k in range(1, n + 1):
        dk = terms[k - 1]
        if dk < k:
            # Inequalities beyond the Durfee index hold automatically.
            break
        lhs += dk
        rhs = k * (k - 1)
        for i in range(k, n):
            ti = terms[i]
            rhs += ti if ti < k else k
            if rhs >= lhs:
                break
        if lhs > rhs:
            return False
    return True


def is_graphic_eg(seq: DegreeSequence) -> bool:
    """True iff seq is the degree sequence of a simple graph (zeros allowed)."""
    return _graphic_sorted(seq.terms)


def first_eg_violation(seq: DegreeSequence) -> int | None:
    """Smallest 1-based k whose inequality fails, or None when all hold.

    Checks every index without shortcuts; an odd degree sum is a separate
    condition not reported here.
    """
    terms = seq.terms
    n = len(terms)
    lhs = 0
    for k in range(1, n + 1):
        lhs += terms[k - 1]
        rhs = k * (k - 1)
        for i in range(k, n):
            rhs += min(terms[i], k)
        if lhs > rhs:
            return k
    return None


def is_graphic_kw(seq: DegreeSequence) -> bool:
    """Graphicality via repeatedly laying off the smallest positive term.

    Implemented independently of the inequality-based test so the two can be
    cross-checked against each other.
    """
    terms = [t for t in seq.terms if t > 0]
    if sum(terms) & 1:
        return False
    while terms:
        d = terms.pop()
        if d > len(terms):
            return False
        for i in range(d):
            terms[i] -= 1
        terms.sort(reverse=True)
        while terms and terms[-1] == 0:
            terms.pop()
    return True


def lay_off(seq: DegreeSequence, k: int) -> DegreeSequence:
    """Lay off the k-th term (1-based) and return the residual sequence.

    Branch d_k >= k decrements the first d_k + 1 positions excluding position
    k; branch d_k < k decrements the first d_k positions. Position k is then
    removed and the result re-sorted, so the sum drops by exactly 2 * d_k.

    Raises LayOffError when k is out of range, the k-th term is zero, or the
    decrements are infeasible (not enough positions, or a term would go
    negative; possible only for non-graphic input).
    """
    n = seq.n
    if not 1 <= k <= n:
        raise LayOffError(f"lay-off index {k} out of range for length {n}")
    dk = seq.terms[k - 1]
    if dk == 0:
        raise LayOffError(f"cannot lay off the zero term at position {k}")
    work = list(seq.terms)
    if dk >= k:
        if dk + 1 > n:
            raise LayOffError(f"laying off d_{k}={dk} needs {dk + 1} positions, have {n}")
        for i in range(dk + 1):
            if i != k - 1:
                work[i] -= 1
    else:
        for i in range(dk):
            work[i] -= 1
    del work[k - 1]
    if any(t < 0 for t in work):
        raise LayOffError(f"laying off d_{k}={dk} drives a term negative")
    return DegreeSequence(work)


_L25_EXCEPTIONS = ((3, 3, 3, 1), (3, 3, 1, 1))


def graphic_fast_path(seq: DegreeSequence) -> bool | None:
    """Sufficient conditions for graphicality; None when neither applies.

    Branch one: every positive term is 1 or 2, some term equals 1, and the sum
    is even (zeros permitted). Branch two: all terms positive, n >= 4, largest
    term at most 3, even sum, and the sequence is not (3^3,1) or (3^2,1^2).
    Never contradicts the full graphicality tests.
    """
    terms = seq.terms
    if sum(terms) & 1:
        return None
    positives = [t for t in terms if t > 0]
    if positives and positives[0] <= 2 and positives[-1] == 1:
        return True
    if (
        len(terms) >= 4
        and terms[-1] >= 1
        and terms[0] <= 3
        and terms not in _L25_EXCEPTIONS
    ):
        return True
    return None


def havel_hakimi_realize(seq: DegreeSequence) -> "SmallGraph":
    """Build one deterministic realization of a graphic sequence.

    Vertex i receives degree terms[i]. Each round connects the vertex of
    largest remaining demand (lowest label on ties) to the next-largest
    demands. Raises NonGraphicError on non-graphic input and ValueError for
    n > 16.
    """
    from degseq.patterns import SmallGraph

    n = seq.n
    if n > 16:
        raise ValueError(f"realization supports at most 16 vertices, got {n}")
    if not is_graphic_eg(seq):
        raise NonGraphicError(f"{seq} is not graphic")
    res = list(seq.terms)
    edges: list[tuple[int, int]] = []
    while True:
        v = max(range(n), key=lambda i: (res[i], -i), default=None)
        if v is None or res[v] == 0:
            break
        need, res[v] = res[v], 0
        targets = sorted(
            (u for u in range(n) if u != v and res[u] > 0),
            key=lambda u: (-res[u], u),
        )[:need]
        assert len(targets) == need, "graphic sequence ran out of neighbors"
        for u in targets:
            res[u] -= 1
            edges.append((v, u))
    return SmallGraph(n, edges)
