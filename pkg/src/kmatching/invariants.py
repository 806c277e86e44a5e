"""Degree-based and incidence-based invariants, all exact integers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph

__all__ = [
    "DegreeInvariants",
    "IncidenceInvariants",
    "degree_invariants",
    "incidence_invariants",
    "neighbor_degree_sums",
    "incident_edge_pairs",
    "edge_degree",
    "DEFAULT_LAMBDAS",
    "MAX_LAMBDA",
]

DEFAULT_LAMBDAS = (1, 2, 3, 4, 5)
MAX_LAMBDA = 8


@dataclass(frozen=True)
class DegreeInvariants:
    """Zagreb-type indices of a graph.

    ``m1_general[lam]`` is the sum of ``d(u)**lam`` over vertices and
    ``m2_general[lam]`` the sum of ``(d(u) d(v))**lam`` over edges.
    """

    m: int
    m1: int
    m2: int
    f: int
    m1_general: dict[int, int]
    m2_general: dict[int, int]
    em1: int
    em2: int


@dataclass(frozen=True)
class IncidenceInvariants:
    alpha: int
    alpha_general: dict[int, int]
    beta: int
    gamma: int
    lambda_count: int


def _check_lambdas(lambdas: Iterable[int]) -> list[int]:
    lams = sorted(set(int(x) for x in lambdas) | set(DEFAULT_LAMBDAS))
    bad = [x for x in lams if not 0 <= x <= MAX_LAMBDA]
    if bad:
        raise ValueError(f"exponents must lie in 0..{MAX_LAMBDA}, got {bad}")
    return lams


def edge_degree(g: Graph, u: int, v: int) -> int:
    return g.degree(u) + g.degree(v) - 2


def neighbor_degree_sums(g: Graph) -> list[int]:
    """Per vertex, the sum of its neighbours' degrees.

    This is ``d(u) * m_G(u)`` where ``m_G(u)`` is the average neighbour degree;
    keeping the product avoids a division.
    """
    deg = g.degrees()
    return [sum(deg[w] for w in g.adjacency[u]) for u in range(g.n)]


def incident_edge_pairs(g: Graph):
    """Yield ``(shared, e, f)`` for each unordered pair of distinct incident edges.

    Two distinct edges of a simple graph share at most one vertex, so
    grouping by the shared vertex lists every pair exactly once.
    """
    for v in range(g.n):
        nbrs = sorted(g.adjacency[v])
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1:]:
                yield v, (v, a), (v, b)


def degree_invariants(g: Graph, lambdas: Iterable[int] = DEFAULT_LAMBDAS) -> DegreeInvariants:
    lams = _check_lambdas(lambdas)
    deg = g.degrees()
    m1_general = {lam: sum(d**lam for d in deg) for lam in lams}
    m2_general = {lam: sum((deg[u] * deg[v]) ** lam for u, v in g.edges) for lam in lams}
    em1 = sum((deg[u] + deg[v] - 2) ** 2 for u, v in g.edges)
    em2 = 0
    for v, (_, a), (_, b) in incident_edge_pairs(g):
        em2 += (deg[v] + deg[a] - 2) * (deg[v] + deg[b] - 2)
    return DegreeInvariants(
        m=g.m,
        m1=m1_general[2],
        m2=m2_general[1],
        f=m1_general[3],
        m1_general=m1_general,
        m2_general=m2_general,
        em1=em1,
        em2=em2,
    )


def incidence_invariants(g: Graph, lambdas: Iterable[int] = DEFAULT_LAMBDAS) -> IncidenceInvariants:
    """alpha, beta, gamma and the size of the vertex/edge incidence set.

    gamma counts each pair ``{v, xy}`` once, even when ``v`` is adjacent to
    both ``x`` and ``y`` (a triangle).
    """
    lams = _check_lambdas(lambdas)
    deg = g.degrees()
    alpha_general = {
        lam: sum(deg[u] * deg[v] * (deg[u] ** lam + deg[v] ** lam) for u, v in g.edges)
        for lam in lams
    }

    beta = 0
    for v, (_, a), (_, b) in incident_edge_pairs(g):
        beta += deg[v] * ((deg[v] + deg[a] - 2) + (deg[v] + deg[b] - 2))

    gamma = 0
    lambda_count = 0
    for x, y in g.edges:
        near = (g.adjacency[x] | g.adjacency[y]) - {x, y}
        lambda_count += len(near)
        gamma += (deg[x] + deg[y]) * sum(deg[v] for v in near)

    return IncidenceInvariants(
        alpha=alpha_general[1],
        alpha_general=alpha_general,
        beta=beta,
        gamma=gamma,
        lambda_count=lambda_count,
    )
