"""Closed-form k-matching counts for k = 2..5 from degree-based invariants.

All arithmetic is over :class:`fractions.Fraction`; no floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction as Fr

from .graph import Graph, Girth, girth
from .invariants import degree_invariants, incidence_invariants
from .lemmas import lemma_sums
from .matchings import InexactDivisionError, MatchCount, Method

__all__ = ["GirthPreconditionError", "REQUIRED_GIRTH", "p_formula", "formula_applies"]

# smallest girth for which the formula for p(G,k) is proved
REQUIRED_GIRTH = {2: 3, 3: 4, 4: 5, 5: 5}


class GirthPreconditionError(ValueError):
    def __init__(self, k: int, required: int, actual: Girth):
        self.k, self.required, self.actual = k, required, actual
        super().__init__(
            f"formula for p(G,{k}) requires girth >= {required}, graph has girth {actual}"
        )


def formula_applies(k: int, g_girth: Girth) -> bool:
    return g_girth >= REQUIRED_GIRTH[k]


def _p2(d) -> Fr:
    m = d.m
    return Fr(m * m + m - d.m1, 2)


def _p3(d) -> Fr:
    m, M1 = d.m, d.m1
    return (
        Fr(m**3, 6) + Fr(m**2, 2) + Fr(2 * m, 3) - Fr(m * M1, 2) - M1
        + Fr(d.f, 3) + d.m2
    )


def _p4(d) -> Fr:
    m, M1, M2, F = d.m, d.m1, d.m2, d.f
    return (
        Fr(m**4, 24) + Fr(m**3, 4) + Fr(19 * m**2, 24) - Fr(11 * m, 4)
        + Fr(M1**2, 8) + Fr(m * F, 3) - Fr(m**2 * M1, 4)
        + m * M2 + Fr(d.m1_general[4], 4)
        - 2 * M2 - Fr(5 * m * M1, 4) + Fr(7 * M1, 2) - d.em2 - Fr(3 * F, 2)
    )


def _p5(g: Graph, d) -> Fr:
    inc = incidence_invariants(g)
    aux = lemma_sums(g).aux5
    m, M1, M2, F = d.m, d.m1, d.m2, d.f
    M14, M15, M22 = d.m1_general[4], d.m1_general[5], d.m2_general[2]
    inner = (
        Fr(m * (m**4 + 10 * m**3 + 43 * m**2 + 54 * m - 328), 24)
        + Fr(5 * M1**2, 4)
        - Fr(inc.alpha * (m - 7), 2)
        - Fr(5 * inc.alpha_general[2], 6)
        - Fr(M1 * (2 * m**3 + 30 * m**2 + 61 * m - 225), 12)
        + Fr(inc.beta, 2)
        + Fr(M2 * (6 * m**2 + 66 * m - 239), 12)
        + Fr(F * (6 * m**2 + 24 * m - 149), 24)
        + Fr(M14 * (m + 10), 12)
        + Fr(M22, 4)
        - d.em2
        - Fr(5 * M15, 24)
        + Fr(aux.m1_squared, 8)
        + Fr(aux.m_times_f, 3)
        - Fr(aux.m_squared_times_m1, 4)
        - aux.em2
        + aux.m_times_m2
    )
    return inner / 5


def p_formula(g: Graph, k: int, force: bool = False) -> MatchCount:
    """Number of k-matchings from the closed-form expressions, k in 2..5.

    The expression for k=3 needs girth > 3 and those for k=4, 5 need girth
    >= 5. Outside that range a :class:`GirthPreconditionError` is raised
    unless ``force`` is set, in which case the value is computed anyway and
    flagged with ``girth_ok=False`` (it may then be wrong or fractional).
    """
    if k not in REQUIRED_GIRTH:
        raise ValueError(f"closed forms exist for k in 2..5, got {k}")
    g_girth = girth(g)
    ok = formula_applies(k, g_girth)
    if not ok and not force:
        raise GirthPreconditionError(k, REQUIRED_GIRTH[k], g_girth)

    d = degree_invariants(g)
    value = {2: _p2, 3: _p3, 4: _p4}[k](d) if k < 5 else _p5(g, d)

    if value.denominator == 1:
        value = int(value)
        if ok and value < 0:
            raise InexactDivisionError(f"p(G,{k}) evaluated to negative {value}")
    elif ok:
        raise InexactDivisionError(f"p(G,{k}) evaluated to non-integer {value}")
    return MatchCount(k, value, Method.FORMULA, girth_ok=ok)
