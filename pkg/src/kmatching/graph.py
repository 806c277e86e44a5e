"""Simple undirected graphs, edge-list parsing, family generators and girth.

Vertices are the integers ``0..n-1``. Graphs are immutable; every operation
that "modifies" a graph returns a new one.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from functools import total_ordering
from typing import Iterable, Optional

__all__ = [
    "Graph",
    "Girth",
    "INFINITE",
    "FamilySpec",
    "GraphError",
    "EdgeListError",
    "MalformedLineError",
    "SelfLoopError",
    "DuplicateEdgeError",
    "VertexRangeError",
    "parse_edge_list",
    "generate",
    "girth",
    "delete_vertex_pair",
    "random_with_min_girth",
]


class GraphError(ValueError):
    """Invalid graph construction or operation argument."""


class EdgeListError(GraphError):
    """Base class for edge-list parse failures; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


class MalformedLineError(EdgeListError):
    pass


class SelfLoopError(EdgeListError):
    pass


class DuplicateEdgeError(EdgeListError):
    pass


class VertexRangeError(EdgeListError):
    pass


def _canon(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``edges`` is stored canonically: each pair is ``(min, max)`` and the
    tuple is sorted, so iteration order is deterministic.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[frozenset[int], ...] = field(repr=False, compare=False)

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            e = _canon(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in seen:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "adjacency", tuple(frozenset(a) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adjacency[u]

    def to_edge_list(self) -> str:
        """Serialize in the format accepted by :func:`parse_edge_list`."""
        lines = [f"{self.n} {self.m}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"


@total_ordering
class Girth:
    """Length of a shortest cycle, or :data:`INFINITE` for forests.

    Compares against plain integers, with the infinite girth larger than
    every integer, so ``girth(g) >= 5`` reads naturally for forests too.
    """

    __slots__ = ("value",)

    def __init__(self, value: Optional[int]):
        if value is not None and value < 3:
            raise GraphError(f"finite girth must be >= 3, got {value}")
        self.value = value

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def _key(self, other):
        if isinstance(other, Girth):
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        return NotImplemented

    def __eq__(self, other):
        o = self._key(other)
        if o is NotImplemented:
            return NotImplemented
        return self.value == o

    def __lt__(self, other):
        o = self._key(other)
        if o is NotImplemented:
            return NotImplemented
        if self.value is None:
            return False
        return o is None or self.value < o

    def __hash__(self):
        return hash(("girth", self.value))

    def __repr__(self):
        return "Girth(INFINITE)" if self.value is None else f"Girth({self.value})"

    def __str__(self):
        return "infinite" if self.value is None else str(self.value)


INFINITE = Girth(None)


_FAMILY_ARITY = {
    "path": 1,
    "cycle": 1,
    "star": 1,
    "complete": 1,
    "complete_bipartite": 2,
    "caterpillar": 1,
    "sunlet": 1,
}

_FAMILY_MIN = {
    "path": (1,),
    "cycle": (3,),
    "star": (1,),
    "complete": (1,),
    "complete_bipartite": (1, 1),
    "caterpillar": (4,),
    "sunlet": (3,),
}


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family member, e.g. ``FamilySpec("cycle", (6,))``.

    ``caterpillar(k)`` is the k-vertex path with one pendant vertex at each
    of positions 3..k-2; ``sunlet(k)`` is the k-cycle with a pendant at
    every cycle vertex.
    """

    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in _FAMILY_ARITY:
            raise GraphError(
                f"unknown family {self.kind!r}; expected one of {sorted(_FAMILY_ARITY)}"
            )
        params = tuple(int(p) for p in self.params)
        object.__setattr__(self, "params", params)
        if len(params) != _FAMILY_ARITY[self.kind]:
            raise GraphError(
                f"{self.kind} takes {_FAMILY_ARITY[self.kind]} parameter(s), got {len(params)}"
            )
        for p, lo in zip(params, _FAMILY_MIN[self.kind]):
            if p < lo:
                raise GraphError(f"{self.kind} parameter must be >= {lo}, got {p}")


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines of ``"u v"``.

    Blank lines are ignored, CRLF line endings are accepted. Each kind of
    defect raises its own :class:`EdgeListError` subclass naming the line.
    """
    rows: list[tuple[int, list[str]]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if tokens:
            rows.append((lineno, tokens))
    if not rows:
        raise MalformedLineError(1, "empty input, expected header 'n m'")

    lineno, header = rows[0]
    n, m = _parse_int_pair(lineno, header, "header 'n m'")
    if n < 0 or m < 0:
        raise MalformedLineError(lineno, f"negative count in header: {' '.join(header)}")
    body = rows[1:]
    if len(body) > m:
        raise MalformedLineError(body[m][0], f"header declares {m} edges, found more")

    seen: set[tuple[int, int]] = set()
    for lineno, tokens in body:
        u, v = _parse_int_pair(lineno, tokens, "edge 'u v'")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(lineno, f"vertex label out of range 0..{n - 1}: {u} {v}")
        if u == v:
            raise SelfLoopError(lineno, f"self-loop at vertex {u}")
        e = _canon(u, v)
        if e in seen:
            raise DuplicateEdgeError(lineno, f"duplicate edge {u} {v}")
        seen.add(e)
    if len(body) < m:
        last = body[-1][0] if body else rows[0][0]
        raise MalformedLineError(last + 1, f"header declares {m} edges, found {len(body)}")
    return Graph(n, seen)


def _parse_int_pair(lineno: int, tokens: list[str], what: str) -> tuple[int, int]:
    if len(tokens) != 2:
        raise MalformedLineError(lineno, f"expected {what}, got {' '.join(tokens)!r}")
    try:
        return int(tokens[0]), int(tokens[1])
    except ValueError:
        raise MalformedLineError(lineno, f"expected integers for {what}, got {' '.join(tokens)!r}") from None


def generate(spec: FamilySpec) -> Graph:
    kind, params = spec.kind, spec.params
    if kind == "path":
        (n,) = params
        return Graph(n, ((i, i + 1) for i in range(n - 1)))
    if kind == "cycle":
        (n,) = params
        return Graph(n, ((i, (i + 1) % n) for i in range(n)))
    if kind == "star":
        (n,) = params
        return Graph(n, ((0, i) for i in range(1, n)))
    if kind == "complete":
        (n,) = params
        return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))
    if kind == "complete_bipartite":
        p, q = params
        return Graph(p + q, ((i, p + j) for i in range(p) for j in range(q)))
    if kind == "caterpillar":
        (k,) = params
        edges = [(i, i + 1) for i in range(k - 1)]
        # path positions are 1-based: position i is vertex i-1
        edges += [(pos - 1, k + j) for j, pos in enumerate(range(3, k - 1))]
        return Graph(2 * k - 4, edges)
    if kind == "sunlet":
        (k,) = params
        edges = [(i, (i + 1) % k) for i in range(k)]
        edges += [(i, k + i) for i in range(k)]
        return Graph(2 * k, edges)
    raise AssertionError(kind)


def _bfs_shortest_cycle_through(g: Graph, root: int, best: Optional[int]) -> Optional[int]:
    dist = {root: 0}
    parent = {root: -1}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        # no shorter cycle can be found deeper than this
        if best is not None and 2 * dist[x] >= best:
            break
        for y in g.adjacency[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                parent[y] = x
                queue.append(y)
            elif parent[x] != y:
                length = dist[x] + dist[y] + 1
                if best is None or length < best:
                    best = length
    return best


def girth(g: Graph) -> Girth:
    """Exact girth by breadth-first search from every vertex, O(n(n+m))."""
    best: Optional[int] = None
    for root in range(g.n):
        best = _bfs_shortest_cycle_through(g, root, best)
        if best == 3:
            break
    return Girth(best)


def delete_vertex_pair(g: Graph, u: int, v: int) -> Graph:
    """Return ``g - {u, v}`` relabelled order-preservingly onto ``0..n-3``."""
    if u == v:
        raise GraphError(f"vertices to delete must differ, got {u} twice")
    for w in (u, v):
        if not 0 <= w < g.n:
            raise GraphError(f"vertex {w} out of range for n={g.n}")
    lo, hi = min(u, v), max(u, v)

    def relabel(w: int) -> int:
        return w - (w > lo) - (w > hi)

    return Graph(
        g.n - 2,
        ((relabel(a), relabel(b)) for a, b in g.edges if a not in (u, v) and b not in (u, v)),
    )


def _distance(adj: list[set[int]], src: int, dst: int, limit: Optional[int]) -> Optional[int]:
    """BFS distance from src to dst, or None if farther than ``limit`` / unreachable."""
    if src == dst:
        return 0
    dist = {src: 0}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if limit is not None and dist[x] >= limit:
            continue
        for y in adj[x]:
            if y not in dist:
                if y == dst:
                    return dist[x] + 1
                dist[y] = dist[x] + 1
                queue.append(y)
    return None


def random_with_min_girth(n: int, target_m: int, gmin: Optional[int], seed: int) -> Graph:
    """Seeded random graph with girth at least ``gmin``.

    Candidate vertex pairs are visited in a seeded random order; a pair is
    added unless it would close a cycle shorter than ``gmin``. ``gmin=None``
    (or :data:`INFINITE`) requests a forest. Stops after ``target_m`` edges or
    once every pair has been tried, so fewer edges may be returned.
    """
    if n < 1:
        raise GraphError(f"n must be >= 1, got {n}")
    if isinstance(gmin, Girth):
        gmin = gmin.value
    if gmin is not None and gmin < 3:
        raise GraphError(f"gmin must be >= 3 or None, got {gmin}")
    rng = random.Random(seed)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(pairs)
    adj: list[set[int]] = [set() for _ in range(n)]
    edges: list[tuple[int, int]] = []
    for u, v in pairs:
        if len(edges) >= target_m:
            break
        # adding uv closes a cycle of length dist(u, v) + 1
        limit = None if gmin is None else gmin - 2
        d = _distance(adj, u, v, limit)
        if d is not None:
            continue
        adj[u].add(v)
        adj[v].add(u)
        edges.append((u, v))
    return Graph(n, edges)
