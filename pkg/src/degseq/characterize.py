"""Closed-form decisions for "potentially contains the pattern".

Each check evaluates simple degree conditions plus a finite (or
parametrized) list of exceptional sequences, and must agree with the search
oracle on every positive graphic sequence in the verified range.
"""

from __future__ import annotations

from dataclasses import dataclass

from degseq.core import (
    DegreeSequence,
    NonGraphicError,
    ZeroTermsError,
    format_sequence,
    is_graphic_eg,
    parse_sequence,
)
from degseq.patterns import PatternId

__all__ = [
    "FamilyMatch",
    "Verdict",
    "check_c4",
    "check_for_pattern",
    "check_k5_2k2",
    "check_k5_a3",
    "check_k5_k13",
    "check_k5_k3",
    "check_k5_p3",
    "matches_family_a3",
    "matches_family_s1",
    "matches_family_s2",
]


@dataclass(frozen=True)
class FamilyMatch:
    """A hit in one of the parametrized exception families.

    A3_FAMILY: (n-1,3^3,2^(n-k),1^(k-4)), params k.
    S1: two-branch family (n-i,n-j,3^...,2^...,1^(i+j-2)), params i, j, k.
    S2: (n-1,3^k,1^(n-1-k)) with k in {5,6}; k stores the count of 3-terms.
    """

    family: str
    i: int | None = None
    j: int | None = None
    k: int | None = None

    def expand(self, n: int) -> DegreeSequence:
        """Rebuild the member of the family for the given length n."""
        if self.family == "A3_FAMILY":
            assert self.k is not None
            return DegreeSequence(
                (n - 1, 3, 3, 3) + (2,) * (n - self.k) + (1,) * (self.k - 4)
            )
        if self.family == "S1":
            assert self.i is not None and self.j is not None and self.k is not None
            rem = n - self.i - self.j
            if rem % 2 == 0:
                body = (3,) * (rem - 2 * self.k) + (2,) * (2 * self.k)
            else:
                body = (3,) * (rem - 2 * self.k - 1) + (2,) * (2 * self.k + 1)
            return DegreeSequence(
                (n - self.i, n - self.j) + body + (1,) * (self.i + self.j - 2)
            )
        if self.family == "S2":
            assert self.k is not None
            return DegreeSequence((n - 1,) + (3,) * self.k + (1,) * (n - 1 - self.k))
        raise ValueError(f"unknown family {self.family!r}")


@dataclass(frozen=True)
class Verdict:
    """Outcome of one closed-form check.

    decision is true exactly when no condition failed and no exception family
    matched; failed_conditions carries one identifier per violated clause.
    """

    pattern: PatternId
    sequence: DegreeSequence
    decision: bool
    failed_conditions: tuple[str, ...]
    exception_match: FamilyMatch | None
    theorem: str

    def to_record(self) -> dict:
        """Stable JSON-style record used by the CLI and test fixtures."""
        exception = None
        if self.exception_match is not None:
            exception = {"family": self.exception_match.family}
            for name in ("i", "j", "k"):
                value = getattr(self.exception_match, name)
                if value is not None:
                    exception[name] = value
        return {
            "pattern": self.pattern.token,
            "sequence": format_sequence(self.sequence),
            "decision": self.decision,
            "failed_conditions": list(self.failed_conditions),
            "exception": exception,
            "theorem": self.theorem,
        }


def _parse_all(texts: tuple[str, ...]) -> tuple[tuple[int, ...], ...]:
    return tuple(parse_sequence(t).terms for t in texts)


# Fixed exceptional sequences, keyed by the clause identifier prefix they are
# reported under.
_FIXED_EXCEPTIONS: dict[str, tuple[tuple[int, ...], ...]] = {
    "3.1(2)": _parse_all(("4,3^2,2^3", "4,3^2,2^4", "4,3^6")),
    "3.2(3)": _parse_all(
        ("3^4,2^2", "3^6", "3^4,2^3", "3^6,2", "4,3^6", "3^7,1", "3^8")
    ),
    "3.3(2)": _parse_all(("4^2,2^4", "4^2,2^5", "4^3,2^3", "4^6")),
    "3.4(2)": _parse_all(("4,3^4,2", "4^6", "4^2,3^4", "4,3^6", "4^7", "4,3^5,1")),
    "3.5(3)": _parse_all(
        (
            "4^2,3^4",
            "4,3^4,2",
            "5,4,3^5",
            "5,3^5,2",
            "4^7",
            "4^3,3^4",
            "4^2,3^4,2",
            "4,3^6",
            "4,3^5,1",
            "4,3^4,2^2",
            "5,3^7",
            "5,3^6,1",
            "4^8",
            "4^2,3^6",
            "4^2,3^5,1",
            "4,3^6,2",
            "4,3^5,2,1",
            "4,3^7,1",
            "4,3^6,1^2",
        )
    ),
}


def _require_positive_graphic(seq: DegreeSequence, min_n: int) -> None:
    if seq.n < min_n:
        raise ValueError(f"characterization needs n >= {min_n}, got n = {seq.n}")
    if not seq.positive:
        raise ZeroTermsError(
            f"{seq} contains zero terms; the characterizations cover positive sequences only"
        )
    if not is_graphic_eg(seq):
        raise NonGraphicError(f"{seq} is not graphic")


def _fixed_hits(prefix: str, seq: DegreeSequence) -> list[str]:
    return [
        f"{prefix}:({format_sequence(exc)})"
        for exc in _FIXED_EXCEPTIONS[prefix]
        if seq.terms == exc
    ]


def _is_high_star(seq: DegreeSequence, threes: int) -> bool:
    """True when seq is exactly (n-1, 3^threes, 1^(n-1-threes))."""
    n = seq.n
    if n - 1 - threes < 0:
        return False
    return seq.terms == (n - 1,) + (3,) * threes + (1,) * (n - 1 - threes)


def matches_family_a3(seq: DegreeSequence) -> FamilyMatch | None:
    """Match against (n-1,3^3,2^(n-k),1^(k-4)), n >= 6, 4 <= k <= n-2, n == k mod 2.

    k is recovered as 4 plus the count of 1-terms, then the whole expansion is
    compared against the input.
    """
    terms = seq.terms
    n = len(terms)
    if n < 6:
        return None
    k = 4 + sum(1 for t in terms if t == 1)
    if not 4 <= k <= n - 2 or (n - k) % 2 != 0:
        return None
    if terms != (n - 1, 3, 3, 3) + (2,) * (n - k) + (1,) * (k - 4):
        return None
    return FamilyMatch("A3_FAMILY", k=k)


def matches_family_s1(seq: DegreeSequence) -> FamilyMatch | None:
    """Match against the two-branch family with 1 <= j <= n-5, 0 <= k <= (n-j-i-4)/2.

    i and j are recovered from the two leading terms (i = n - d1, j = n - d2;
    i <= j is forced by the non-increasing order and i >= 1 keeps d1 <= n-1),
    the branch from the parity of n-i-j, and k from the count of 2-terms.
    """
    terms = seq.terms
    n = len(terms)
    if n < 6:
        return None
    i, j = n - terms[0], n - terms[1]
    if i < 1 or j < i or j > n - 5:
        return None
    rem = n - i - j
    if rem < 4:
        return None
    tail = terms[2:]
    if tail and (tail[0] > 3 or tail[-1] < 1):
        return None
    ones = tail.count(1)
    twos = tail.count(2)
    threes = tail.count(3)
    if ones + twos + threes != n - 2 or ones != i + j - 2:
        return None
    if rem % 2 == 0:
        if twos % 2 != 0:
            return None
        k = twos // 2
        if threes != rem - 2 * k:
            return None
    else:
        if twos % 2 != 1:
            return None
        k = (twos - 1) // 2
        if threes != rem - 2 * k - 1:
            return None
    if not 0 <= k <= (rem - 4) // 2:
        return None
    match = FamilyMatch("S1", i=i, j=j, k=k)
    assert match.expand(n) == seq, "S1 counting must reproduce the input"
    return match


def matches_family_s2(seq: DegreeSequence) -> FamilyMatch | None:
    """Match against (n-1,3^5,1^(n-6)) or (n-1,3^6,1^(n-7))."""
    for threes in (5, 6):
        if _is_high_star(seq, threes):
            return FamilyMatch("S2", k=threes)
    return None


def check_k5_p3(seq: DegreeSequence) -> Verdict:
    """Potentially-containment check for the 7-edge pattern with degrees (4,3,3,2,2)."""
    return _check_k5_p3(seq, PatternId.K5_P3)


def _check_k5_p3(seq: DegreeSequence, pattern: PatternId) -> Verdict:
    _require_positive_graphic(seq, 5)
    failed: list[str] = []
    if seq.d(1) < 4:
        failed.append("3.1(1):d1<4")
    if seq.d(3) < 3:
        failed.append("3.1(1):d3<3")
    if seq.d(5) < 2:
        failed.append("3.1(1):d5<2")
    failed.extend(_fixed_hits("3.1(2)", seq))
    return Verdict(pattern, seq, not failed, tuple(failed), None, "3.1")


def check_k5_a3(seq: DegreeSequence) -> Verdict:
    """Potentially-containment check for the 7-edge pattern with degrees (3,3,3,3,2)."""
    return _check_k5_a3(seq, PatternId.K5_A3)


def _check_k5_a3(seq: DegreeSequence, pattern: PatternId) -> Verdict:
    _require_positive_graphic(seq, 5)
    failed: list[str] = []
    if seq.d(4) < 3:
        failed.append("3.2(1):d4<3")
    if seq.d(5) < 2:
        failed.append("3.2(1):d5<2")
    family = matches_family_a3(seq)
    if family is not None:
        failed.append("3.2(2):A3_FAMILY")
    failed.extend(_fixed_hits("3.2(3)", seq))
    tail = matches_family_s2(seq)
    if tail is not None:
        failed.append(f"3.2(3):(n-1,3^{tail.k},1^(n-{tail.k + 1}))")
    return Verdict(pattern, seq, not failed, tuple(failed), family or tail, "3.2")


def check_k5_k3(seq: DegreeSequence) -> Verdict:
    """Potentially-containment check for the 7-edge pattern with degrees (4,4,2,2,2)."""
    return _check_k5_k3(seq, PatternId.K5_K3)


def _check_k5_k3(seq: DegreeSequence, pattern: PatternId) -> Verdict:
    _require_positive_graphic(seq, 5)
    failed: list[str] = []
    if seq.d(2) < 4:
        failed.append("3.3(1):d2<4")
    if seq.d(5) < 2:
        failed.append("3.3(1):d5<2")
    failed.extend(_fixed_hits("3.3(2)", seq))
    return Verdict(pattern, seq, not failed, tuple(failed), None, "3.3")


def check_k5_k13(seq: DegreeSequence) -> Verdict:
    """Potentially-containment check for the 7-edge pattern with degrees (4,3,3,3,1)."""
    return _check_k5_k13(seq, PatternId.K5_K13)


def _check_k5_k13(seq: DegreeSequence, pattern: PatternId) -> Verdict:
    _require_positive_graphic(seq, 5)
    failed: list[str] = []
    if seq.d(1) < 4:
        failed.append("3.4(1):d1<4")
    if seq.d(4) < 3:
        failed.append("3.4(1):d4<3")
    failed.extend(_fixed_hits("3.4(2)", seq))
    exception: FamilyMatch | None = None
    if _is_high_star(seq, 4):
        failed.append("3.4(2):(n-1,3^4,1^(n-5))")
    if _is_high_star(seq, 5):
        failed.append("3.4(2):(n-1,3^5,1^(n-6))")
        exception = FamilyMatch("S2", k=5)
    return Verdict(pattern, seq, not failed, tuple(failed), exception, "3.4")


def check_k5_2k2(seq: DegreeSequence) -> Verdict:
    """Potentially-containment check for the 8-edge pattern with degrees (4,3,3,3,3)."""
    return _check_k5_2k2(seq, PatternId.K5_2K2)


def _check_k5_2k2(seq: DegreeSequence, pattern: PatternId) -> Verdict:
    _require_positive_graphic(seq, 5)
    failed: list[str] = []
    if seq.d(1) < 4:
        failed.append("3.5(1):d1<4")
    if seq.d(5) < 3:
        failed.append("3.5(1):d5<3")
    family = matches_family_s1(seq)
    if family is not None:
        failed.append("3.5(2):S1")
    failed.extend(_fixed_hits("3.5(3)", seq))
    tail = matches_family_s2(seq)
    if tail is not None:
        failed.append(f"3.5(3):(n-1,3^{tail.k},1^(n-{tail.k + 1}))")
    return Verdict(pattern, seq, not failed, tuple(failed), family or tail, "3.5")


def check_c4(seq: DegreeSequence) -> Verdict:
    """Potentially-containment check for the 4-cycle."""
    _require_positive_graphic(seq, 4)
    failed: list[str] = []
    if seq.d(4) < 2:
        failed.append("2.3(1):d4<2")
    if seq.d(1) == seq.n - 1 and seq.d(2) < 3:
        failed.append("2.3(2):d1=n-1,d2<3")
    if seq.n in (5, 6) and seq.terms == (2,) * seq.n:
        failed.append("2.3(3):(2^n)")
    return Verdict(PatternId.C4, seq, not failed, tuple(failed), None, "2.3")


_DISPATCH = {
    PatternId.K5_P3: _check_k5_p3,
    PatternId.K5_A3: _check_k5_a3,
    PatternId.K5_K3: _check_k5_k3,
    PatternId.K311: _check_k5_k3,
    PatternId.K5_K13: _check_k5_k13,
    PatternId.K5_2K2: _check_k5_2k2,
    PatternId.K122: _check_k5_2k2,
}


def check_for_pattern(seq: DegreeSequence, pattern: PatternId) -> Verdict:
    """Dispatch to the closed-form check for the pattern.

    Isomorphic aliases share a check. Raises ValueError for patterns without a
    closed-form decision here (C5, K5_C4, K5_E).
    """
    if pattern is PatternId.C4:
        return check_c4(seq)
    impl = _DISPATCH.get(pattern)
    if impl is None:
        raise ValueError(f"no closed-form characterization for pattern {pattern.token}")
    return impl(seq, pattern)
