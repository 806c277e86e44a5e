"""Exact k-matching counts of graphs from degree-based invariants.

The enumeration oracle (:func:`count_matchings_oracle`) is the ground truth;
closed forms (:func:`p_formula`), the edge-deletion recurrence and the family
formulas are checked against it.
"""

from .families import FamilyCountQuery, family_count
from .formulas import GirthPreconditionError, p_formula
from .graph import (
    INFINITE,
    FamilySpec,
    Girth,
    Graph,
    delete_vertex_pair,
    generate,
    girth,
    parse_edge_list,
    random_with_min_girth,
)
from .invariants import degree_invariants, incidence_invariants
from .lemmas import lemma_sums
from .matchings import (
    MatchCount,
    Method,
    count_containing_edge,
    count_matchings_oracle,
    count_matchings_recurrence,
    matching_polynomial,
)

__version__ = "0.1.0"

__all__ = [
    "INFINITE",
    "FamilyCountQuery",
    "FamilySpec",
    "Girth",
    "GirthPreconditionError",
    "Graph",
    "MatchCount",
    "Method",
    "count_containing_edge",
    "count_matchings_oracle",
    "count_matchings_recurrence",
    "degree_invariants",
    "delete_vertex_pair",
    "family_count",
    "generate",
    "girth",
    "incidence_invariants",
    "lemma_sums",
    "matching_polynomial",
    "p_formula",
    "parse_edge_list",
    "random_with_min_girth",
]
