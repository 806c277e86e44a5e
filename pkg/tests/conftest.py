import sys
import random

import pytest

from kmatching.graph import FamilySpec, Graph, generate, random_with_min_girth


def fam(kind, *params):
    return generate(FamilySpec(kind, params))


def random_suite(count, seed, n_range=(4, 12), gmins=(3, 4, 5, None)):
    """Seeded list of small random graphs spread over girth constraints."""
    rng = random.Random(seed)
    out = []
    for t in range(count):
        n = rng.randint(*n_range)
        gmin = gmins[t % len(gmins)]
        m = rng.randint(0, 2 * n) if gmin in (3,) else rng.randint(n - 1, (14 * n) // 10)
        out.append(random_with_min_girth(n, m, gmin, rng.getrandbits(32)))
    return out


@pytest.fixture
def c4():
    return fam("cycle", 4)


@pytest.fixture
def p4():
    return fam("path", 4)


@pytest.fixture
def s4():
    return fam("star", 4)


@pytest.fixture
def k4():
    return fam("complete", 4)


@pytest.fixture(scope="session")
def small_graphs():
    return random_suite(300, seed=2024)


@pytest.fixture
def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in results.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  ({detail})")
