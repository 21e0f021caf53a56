"""Graphic degree sequences and potentially-H subgraph decisions.

The package answers two families of questions about a non-increasing integer
sequence pi:

* is pi the degree sequence of some simple graph (graphic), and
* does some realization of pi contain a fixed small pattern graph
  (potentially H-graphic)?

Closed-form checks cover six 5-vertex patterns obtained from K5 by deleting a
small subgraph, plus the 4-cycle. An independent backtracking oracle decides
the same questions by explicit realization search, and the extremal module
compares the two over exhaustive ranges and locates sum thresholds.
"""

from degseq.characterize import FamilyMatch, Verdict, check_for_pattern
from degseq.core import (
    DegreeSequence,
    LayOffError,
    NonGraphicError,
    ZeroTermsError,
    first_eg_violation,
    format_sequence,
    graphic_fast_path,
    havel_hakimi_realize,
    is_graphic_eg,
    is_graphic_kw,
    lay_off,
    m_h,
    parse_sequence,
)
from degseq.extremal import (
    MismatchReport,
    SigmaResult,
    empirical_sigma,
    enumerate_graphic_sequences,
    extremal_witness,
    formula_sigma,
    verify_characterization,
)
from degseq.oracle import (
    BudgetExhaustedError,
    SearchBudget,
    enumerate_realizations,
    find_witness,
    placement_agrees,
    potentially_oracle,
)
from degseq.patterns import (
    PatternId,
    SmallGraph,
    contains_subgraph,
    find_embedding,
    is_isomorphic,
    pattern_graph,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExhaustedError",
    "DegreeSequence",
    "FamilyMatch",
    "LayOffError",
    "MismatchReport",
    "NonGraphicError",
    "PatternId",
    "SearchBudget",
    "SigmaResult",
    "SmallGraph",
    "Verdict",
    "ZeroTermsError",
    "check_for_pattern",
    "contains_subgraph",
    "empirical_sigma",
    "enumerate_graphic_sequences",
    "enumerate_realizations",
    "extremal_witness",
    "find_embedding",
    "find_witness",
    "first_eg_violation",
    "format_sequence",
    "formula_sigma",
    "graphic_fast_path",
    "havel_hakimi_realize",
    "is_graphic_eg",
    "is_graphic_kw",
    "is_isomorphic",
    "lay_off",
    "m_h",
    "parse_sequence",
    "pattern_graph",
    "placement_agrees",
    "potentially_oracle",
    "verify_characterization",
]
