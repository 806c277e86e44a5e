"""Counting k-matchings by enumeration and by the edge-deletion recurrence.

The enumeration oracle is the ground truth every closed form is checked
against; it shares no code with the formula path beyond :class:`Graph`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .graph import Graph, GraphError, delete_vertex_pair

__all__ = [
    "Method",
    "MatchCount",
    "MatchingPolynomial",
    "InexactDivisionError",
    "count_matchings_oracle",
    "count_matchings_recurrence",
    "count_containing_edge",
    "matching_polynomial",
]


class Method(str, enum.Enum):
    ORACLE = "oracle"
    RECURRENCE = "recurrence"
    FORMULA = "formula"


class InexactDivisionError(ArithmeticError):
    """A count that must be an integer came out fractional."""


@dataclass(frozen=True)
class MatchCount:
    """Number of k-matchings together with how it was obtained.

    ``value`` is an ``int`` whenever ``girth_ok`` is true. A formula forced
    outside its girth hypothesis may produce a non-integral
    :class:`~fractions.Fraction`, kept as-is.
    """

    k: int
    value: Union[int, Fraction]
    method: Method
    girth_ok: bool = True

    def __int__(self) -> int:
        if isinstance(self.value, Fraction) and self.value.denominator != 1:
            raise InexactDivisionError(f"p(G,{self.k}) = {self.value} is not an integer")
        return int(self.value)


@dataclass(frozen=True)
class MatchingPolynomial:
    """Coefficients ``p(G;0..floor(n/2))``; ``p(G;k)`` pairs with ``w1**(n-2k) * w2**k``."""

    n: int
    coefficients: tuple[int, ...]

    def __call__(self, w1=1, w2=1):
        return sum(c * w1 ** (self.n - 2 * k) * w2**k for k, c in enumerate(self.coefficients))

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0


def _count(edges: tuple[tuple[int, int], ...], k: int, memo: dict) -> int:
    if k == 0:
        return 1
    if len(edges) < k:
        return 0
    key = (edges, k)
    hit = memo.get(key)
    if hit is not None:
        return hit
    (u, v), rest = edges[0], edges[1:]
    # matchings avoiding the first edge + matchings using it
    total = _count(rest, k, memo)
    total += _count(tuple(e for e in rest if u not in e and v not in e), k - 1, memo)
    memo[key] = total
    return total


def count_matchings_oracle(g: Graph, k: int) -> MatchCount:
    """Count k-subsets of pairwise disjoint edges by deletion/contraction."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if 2 * k > g.n:
        return MatchCount(k, 0, Method.ORACLE)
    return MatchCount(k, _count(g.edges, k, {}), Method.ORACLE)


def _edges_without(edges: frozenset, u: int, v: int) -> frozenset:
    return frozenset(e for e in edges if u not in e and v not in e)


def _recurrence(edges: frozenset, k: int, memo: dict) -> int:
    if k == 0:
        return 1
    if k == 1:
        return len(edges)
    key = (edges, k)
    hit = memo.get(key)
    if hit is not None:
        return hit
    total = sum(_recurrence(_edges_without(edges, u, v), k - 1, memo) for u, v in edges)
    q, r = divmod(total, k)
    if r:
        raise InexactDivisionError(
            f"sum over edges of p(G-{{u,v}};{k - 1}) = {total} is not divisible by {k}"
        )
    memo[key] = q
    return q


def count_matchings_recurrence(g: Graph, k: int) -> MatchCount:
    """``p(G;k) = (1/k) * sum over edges uv of p(G-{u,v}; k-1)``, down to ``p(G;1) = m``.

    Sub-graphs are keyed by their surviving edge set, so each distinct
    ``G - S`` is evaluated once per k.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if 2 * k > g.n:
        return MatchCount(k, 0, Method.RECURRENCE)
    return MatchCount(k, _recurrence(frozenset(g.edges), k, {}), Method.RECURRENCE)


def count_containing_edge(g: Graph, edge: tuple[int, int], k: int) -> MatchCount:
    u, v = edge
    if not g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) is not in the graph")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    sub = count_matchings_oracle(delete_vertex_pair(g, u, v), k - 1)
    return MatchCount(k, sub.value, Method.ORACLE)


def matching_polynomial(g: Graph) -> MatchingPolynomial:
    memo: dict = {}
    coeffs = tuple(_count(g.edges, k, memo) for k in range(g.n // 2 + 1))
    return MatchingPolynomial(g.n, coeffs)
