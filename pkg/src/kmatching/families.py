"""Closed-form matching counts for paths, cycles, stars, caterpillars and sunlets.

These are independent of the general formulas and of the oracle, and serve
as a third check layer. The caterpillar ``P_{k,k-4}`` and sunlet ``C_{k,k}``
are built by :func:`kmatching.graph.generate` with kinds ``"caterpillar"``
and ``"sunlet"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Fr
from math import comb

from .graph import FamilySpec
from .matchings import InexactDivisionError, MatchCount, Method

__all__ = [
    "FamilyCountQuery",
    "NoClosedFormError",
    "family_count",
    "path_count",
    "cycle_count",
    "cycle_polynomial",
    "caterpillar_count",
    "sunlet_count",
    "sunlet_via_caterpillars",
    "CATERPILLAR_MIN_K",
    "SUNLET_MIN_K",
]


class NoClosedFormError(ValueError):
    """No closed form covers the requested family/size combination."""


@dataclass(frozen=True)
class FamilyCountQuery:
    spec: FamilySpec
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"matching size must be non-negative, got {self.k}")


def _binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def _exact(x: Fr, what: str) -> int:
    if x.denominator != 1:
        raise InexactDivisionError(f"{what} evaluated to non-integer {x}")
    return int(x)


def path_count(n: int, k: int) -> int:
    """``C(n-k, k)``: k-matchings of the n-vertex path."""
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return _binom(n - k, k)


def cycle_count(n: int, k: int) -> int:
    """``(n/k) C(n-k-1, k-1)``: k-matchings of the n-cycle, k >= 1."""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    if k < 1:
        raise ValueError(f"cycle formula needs k >= 1, got {k}")
    return _exact(Fr(n, k) * _binom(n - k - 1, k - 1), f"p(C_{n};{k})")


def cycle_polynomial(n: int, k: int) -> int:
    """Expanded polynomial forms of ``p(C_n;k)`` for k = 3..6.

    They agree with :func:`cycle_count` for ``n >= k + 1``; at ``n = k`` the
    polynomial does not vanish although the count is 0.
    """
    if not 3 <= k <= 6:
        raise NoClosedFormError(f"no expanded cycle polynomial for k={k}")
    if n < max(3, k + 1):
        raise ValueError(f"cycle polynomial for k={k} holds for n >= {max(3, k + 1)}, got {n}")
    if k == 3:
        x = Fr(n, 6) * (n - 4) * (n - 5)
    elif k == 4:
        x = Fr(n, 24) * (n - 5) * (n - 6) * (n - 7)
    elif k == 5:
        x = Fr(n, 120) * (n - 6) * (n - 7) * (n - 8) * (n - 9)
    else:
        x = Fr(n, 720) * (n - 7) * (n - 8) * (n - 9) * (n - 10) * (n - 11)
    return _exact(x, f"p(C_{n};{k})")


# smallest caterpillar parameter k for which each r-matching formula holds
CATERPILLAR_MIN_K = {2: 4, 3: 5, 4: 6, 5: 7}
SUNLET_MIN_K = {3: 4, 4: 5, 5: 6, 6: 7}


def caterpillar_count(k: int, r: int) -> int:
    """r-matchings of ``P_{k,k-4}`` for r = 2..5."""
    if r not in CATERPILLAR_MIN_K:
        raise NoClosedFormError(f"no caterpillar closed form for {r}-matchings")
    if k < CATERPILLAR_MIN_K[r]:
        raise ValueError(f"caterpillar {r}-matching formula needs k >= {CATERPILLAR_MIN_K[r]}, got {k}")
    if r == 2:
        return 2 * k * (k - 7) + 25
    if r == 3:
        x = Fr(1, 3) * (2 * k - 9) * (2 * k**2 - 18 * k + 43)
    elif r == 4:
        x = Fr(2, 3) * k * (k - 11) * (k**2 - 11 * k + 64) + 681
    else:
        x = Fr(1, 15) * (2 * k - 13) * (2 * k**4 - 52 * k**3 + 522 * k**2 - 2392 * k + 4215)
    return _exact(x, f"p(P_{{{k},{k - 4}}};{r})")


def sunlet_count(k: int, r: int) -> int:
    """r-matchings of the sunlet ``C_{k,k}`` for r = 3..6."""
    if r not in SUNLET_MIN_K:
        raise NoClosedFormError(f"no sunlet closed form for {r}-matchings")
    if k < SUNLET_MIN_K[r]:
        raise ValueError(f"sunlet {r}-matching formula needs k >= {SUNLET_MIN_K[r]}, got {k}")
    if r == 3:
        x = Fr(2, 3) * k * (2 * k**2 - 12 * k + 19)
    elif r == 4:
        x = Fr(2, 3) * k * (k - 4) * (k**2 - 8 * k + 18)
    elif r == 5:
        x = Fr(2, 15) * k * (2 * k**4 - 40 * k**3 + 310 * k**2 - 1100 * k + 1503)
    else:
        x = Fr(2, 45) * k * (k - 6) * (2 * k**4 - 48 * k**3 + 452 * k**2 - 1968 * k + 3335)
    return _exact(x, f"p(C_{{{k},{k}}};{r})")


def sunlet_via_caterpillars(k: int, r: int) -> int:
    """``(k/r) [p(P_{k+1,k-3}; r-1) + p(P_{k,k-4}; r-1)]``.

    Deleting a rim vertex with its pendant leaves ``P_{k+1,k-3}``; deleting
    a rim edge leaves ``P_{k,k-4}`` plus two isolated vertices.
    """
    total = caterpillar_count(k + 1, r - 1) + caterpillar_count(k, r - 1)
    return _exact(Fr(k, r) * total, f"p(C_{{{k},{k}}};{r})")


def family_count(q: FamilyCountQuery) -> MatchCount:
    kind, params, k = q.spec.kind, q.spec.params, q.k
    if kind == "path":
        value = path_count(params[0], k)
    elif kind == "cycle":
        value = cycle_count(params[0], k)
    elif kind == "star":
        n = params[0]
        if k > 2:
            raise NoClosedFormError(f"star closed form covers k <= 2, got {k}")
        value = (1, n - 1, 0)[k]
    elif kind == "caterpillar":
        value = caterpillar_count(params[0], k)
    elif kind == "sunlet":
        value = sunlet_count(params[0], k)
    else:
        raise NoClosedFormError(f"no closed form for family {kind!r}")
    return MatchCount(k, value, Method.FORMULA)
