"""Edge-deletion aggregate sums and their closed forms.

Every sum here ranges over the edges ``uv`` of ``G`` and measures the graph
``G - {u, v}``. :func:`lemma_sums` computes them literally; the
``*_closed`` functions evaluate the degree-based expressions that replace
them in the k-matching formulas. The two routes are independent and are
compared in the test-suite and by :mod:`kmatching.verify`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, delete_vertex_pair
from .invariants import (
    DegreeInvariants,
    IncidenceInvariants,
    degree_invariants,
    incidence_invariants,
)

__all__ = [
    "LemmaSums",
    "Aux5",
    "lemma_sums",
    "mu_closed",
    "xi_closed",
    "varrho1_closed",
    "eta1_closed",
    "beta_minus_alpha_closed",
    "gamma_closed",
    "em1_closed",
    "LEMMA_GIRTH",
]

# minimum girth under which each closed form is claimed
LEMMA_GIRTH = {
    "mu1": 3, "mu2": 3, "mu3": 3, "mu4": 3,
    "xi1": 4, "xi2": 4, "xi3": 4,
    "varrho1": 4,
    "eta1": 5,
    "beta_alpha": 3,
    "em1": 3,
    "gamma": 4,
}


@dataclass(frozen=True)
class Aux5:
    """The five deletion sums the 5-matching formula keeps un-simplified."""

    m1_squared: int  # sum M1(H)^2
    m_times_f: int  # sum m(H) F(H)
    m_squared_times_m1: int  # sum m(H)^2 M1(H)
    em2: int  # sum EM2(H)
    m_times_m2: int  # sum m(H) M2(H)


@dataclass(frozen=True)
class LemmaSums:
    mu: tuple[int, int, int, int]
    xi: tuple[int, int, int]
    varrho1: int
    eta1: int
    aux5: Aux5


def lemma_sums(g: Graph) -> LemmaSums:
    """Evaluate all deletion sums by building each ``G - {u, v}``.

    O(m (n + m)); nothing here uses a closed form.
    """
    mu = [0, 0, 0, 0]
    xi = [0, 0, 0]
    varrho1 = eta1 = 0
    a_m1sq = a_mf = a_m2m1 = a_em2 = a_mm2 = 0
    for u, v in g.edges:
        h = delete_vertex_pair(g, u, v)
        inv = degree_invariants(h)
        mh = h.m
        for i in range(4):
            mu[i] += mh ** (i + 1)
        xi[0] += inv.m1
        xi[1] += inv.f
        xi[2] += inv.m1_general[4]
        varrho1 += mh * inv.m1
        eta1 += inv.m2
        a_m1sq += inv.m1**2
        a_mf += mh * inv.f
        a_m2m1 += mh**2 * inv.m1
        a_em2 += inv.em2
        a_mm2 += mh * inv.m2
    return LemmaSums(
        mu=tuple(mu),
        xi=tuple(xi),
        varrho1=varrho1,
        eta1=eta1,
        aux5=Aux5(a_m1sq, a_mf, a_m2m1, a_em2, a_mm2),
    )


def _invs(g: Graph) -> tuple[DegreeInvariants, IncidenceInvariants]:
    return degree_invariants(g), incidence_invariants(g)


def mu_closed(g: Graph, k: int, invs=None) -> int:
    """Sum over edges of ``m(G - {u,v})**k`` for k = 1..4, any simple graph."""
    d, i = invs or _invs(g)
    m, M1, M2, F = d.m, d.m1, d.m2, d.f
    M14, M15, M22 = d.m1_general[4], d.m1_general[5], d.m2_general[2]
    a, a2 = i.alpha, i.alpha_general[2]
    if k == 1:
        return m**2 + m - M1
    if k == 2:
        return m**3 + F - 2 * m * M1 + 2 * M2 + 2 * m**2 - 2 * M1 + m
    if k == 3:
        return (
            m**4 - 3 * m**2 * M1 + 3 * m * F + 6 * m * M2 - M14 - 3 * a + 3 * m**3
            - 6 * m * M1 + 3 * F + 6 * M2 + 3 * m**2 - 3 * M1 + m
        )
    if k == 4:
        return (
            M15 + 4 * a2 - 4 * m * M14 + 6 * M22 - 12 * m * a + 6 * m**2 * F
            + 12 * m**2 * M2 - 4 * m**3 * M1 - 4 * M14 - 12 * a + 12 * m * F
            + 24 * m * M2 - 12 * m**2 * M1 + 6 * F + 12 * M2 - 12 * m * M1 - 4 * M1
            + m**5 + 4 * m**4 + 6 * m**3 + 4 * m**2 + m
        )
    raise ValueError(f"k must be in 1..4, got {k}")


def xi_closed(g: Graph, j: int, invs=None) -> int:
    """Sum over edges of ``M1^(j+1)(G - {u,v})``, valid at girth >= 4."""
    d, i = invs or _invs(g)
    m, M1, M2, F = d.m, d.m1, d.m2, d.f
    M14, M15 = d.m1_general[4], d.m1_general[5]
    a, a2 = i.alpha, i.alpha_general[2]
    if j == 1:
        return (m + 3) * M1 - F - 4 * M2 - 2 * m
    if j == 2:
        return (m + 3) * F - M14 - 3 * a + 6 * M2 - 4 * M1 + 2 * m
    if j == 3:
        return (m + 4) * M14 - M15 + 5 * M1 - 2 * m - 4 * a2 + 6 * a - 6 * F - 8 * M2
    raise ValueError(f"j must be in 1..3, got {j}")


def varrho1_closed(g: Graph, invs=None) -> int:
    """Sum over edges of ``m(H) M1(H)`` with ``H = G - {u,v}``, valid at girth >= 4."""
    d, i = invs or _invs(g)
    m, M1, M2, F = d.m, d.m1, d.m2, d.f
    return (
        (m**2 + 4 * m + 5) * M1 - (m + 2) * F - (4 * m + 6) * M2 + d.m1_general[4]
        - M1**2 + i.alpha - 2 * m**2 - 2 * m + 2 * i.gamma
    )


def eta1_closed(g: Graph, invs=None) -> int:
    """Sum over edges of ``M2(G - {u,v})``, valid at girth >= 5."""
    d, i = invs or _invs(g)
    m = d.m
    return m * d.m2 - 2 * d.em2 + i.beta - 2 * d.f - 7 * d.m2 + 9 * d.m1 - 8 * m


def beta_minus_alpha_closed(g: Graph, invs=None) -> int:
    d, _ = invs or _invs(g)
    return d.m1_general[4] - 3 * d.f + 2 * d.m1 - 2 * d.m2


def gamma_closed(g: Graph, invs=None) -> int:
    """gamma through reformulated Zagreb indices, valid when triangle-free."""
    d, i = invs or _invs(g)
    return 2 * d.em2 - i.beta + 4 * d.em1 - 2 * d.f + 6 * d.m1 - 8 * d.m


def em1_closed(g: Graph, invs=None) -> int:
    d, _ = invs or _invs(g)
    return d.f + 2 * d.m2 - 4 * d.m1 + 4 * d.m
