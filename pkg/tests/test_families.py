from math import comb

import pytest

from kmatching.families import (
    CATERPILLAR_MIN_K,
    SUNLET_MIN_K,
    FamilyCountQuery,
    NoClosedFormError,
    caterpillar_count,
    cycle_count,
    cycle_polynomial,
    family_count,
    path_count,
    sunlet_count,
    sunlet_via_caterpillars,
)
from kmatching.graph import FamilySpec
from kmatching.matchings import Method, count_matchings_oracle

from conftest import fam


def q(kind, *params, k):
    return family_count(FamilyCountQuery(FamilySpec(kind, params), k))


def oracle(kind, *params, k):
    return count_matchings_oracle(fam(kind, *params), k).value


class TestExamples:
    def test_path(self):
        assert q("path", 10, k=3).value == comb(7, 3) == 35

    def test_cycle(self):
        n = 6
        assert q("cycle", n, k=3).value == n * (n - 4) * (n - 5) // 6 == 2

    def test_caterpillar(self):
        assert q("caterpillar", 5, k=2).value == 2 * 5 * (5 - 7) + 25 == 5 == oracle("caterpillar", 5, k=2)

    def test_sunlet(self):
        k = 4
        assert q("sunlet", k, k=3).value == 2 * k * (2 * k * k - 12 * k + 19) // 3 == 8
        assert oracle("sunlet", 4, k=3) == 8

    def test_method(self):
        assert q("path", 5, k=2).method is Method.FORMULA


@pytest.mark.parametrize("n", range(2, 21))
def test_path_table(n):
    for k in range(0, n // 2 + 1):
        assert path_count(n, k) == oracle("path", n, k=k)


@pytest.mark.parametrize("n", range(3, 21))
def test_cycle_table(n):
    for k in range(1, n // 2 + 1):
        assert cycle_count(n, k) == oracle("cycle", n, k=k)


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_cycle_polynomials(k):
    for n in range(k + 1, 21):
        assert cycle_polynomial(n, k) == cycle_count(n, k) == oracle("cycle", n, k=k)


def test_cycle_polynomial_range():
    with pytest.raises(ValueError):
        cycle_polynomial(3, 3)
    with pytest.raises(NoClosedFormError):
        cycle_polynomial(10, 7)


def test_small_paths_two_matchings_are_zero():
    for n in (1, 2, 3):
        assert path_count(n, 2) == 0 == oracle("path", n, k=2)


def test_star():
    for n in range(1, 10):
        for k in (0, 1, 2):
            assert q("star", n, k=k).value == oracle("star", n, k=k)
    with pytest.raises(NoClosedFormError):
        q("star", 5, k=3)


@pytest.mark.parametrize("r", sorted(CATERPILLAR_MIN_K))
def test_caterpillar_formulas(r):
    for k in range(CATERPILLAR_MIN_K[r], 13):
        assert caterpillar_count(k, r) == oracle("caterpillar", k, k=r)


@pytest.mark.parametrize("r", sorted(SUNLET_MIN_K))
def test_sunlet_formulas(r):
    for k in range(SUNLET_MIN_K[r], 13):
        assert sunlet_count(k, r) == oracle("sunlet", k, k=r)
        assert sunlet_via_caterpillars(k, r) == sunlet_count(k, r)


def test_below_threshold():
    with pytest.raises(ValueError):
        caterpillar_count(6, 5)
    with pytest.raises(ValueError):
        sunlet_count(4, 4)
    with pytest.raises(ValueError):
        q("cycle", 5, k=0)


def test_no_closed_form():
    with pytest.raises(NoClosedFormError):
        q("complete", 5, k=2)
    with pytest.raises(NoClosedFormError):
        q("complete_bipartite", 2, 3, k=1)
    with pytest.raises(NoClosedFormError):
        caterpillar_count(10, 6)
    with pytest.raises(NoClosedFormError):
        sunlet_count(10, 2)


def test_query_validation():
    with pytest.raises(ValueError):
        FamilyCountQuery(FamilySpec("path", (4,)), -1)


def test_large_values_stay_exact():
    # far beyond 64 bits
    assert path_count(400, 100) == comb(300, 100)
    assert cycle_count(401, 150) * 150 == 401 * comb(250, 149)
