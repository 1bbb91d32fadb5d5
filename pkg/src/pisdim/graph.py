"""Simple undirected graphs on ``0..n-1`` with integer bit-set adjacency.

Row ``adj[v]`` has bit ``u`` set iff ``u ~ v``.  Python ints are used as
bit-sets so neighborhood intersection is a single ``&``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

import numpy as np

UNREACHABLE = -1


class GraphError(ValueError):
    pass


class DisconnectedGraphError(GraphError):
    """The operation needs a connected graph."""


class Disconnected(enum.Enum):
    """Returned by :func:`diameter` instead of a number."""

    DISCONNECTED = "disconnected"

    def __repr__(self) -> str:
        return "DISCONNECTED"


DISCONNECTED = Disconnected.DISCONNECTED


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << int(v)
    return mask


@dataclass(frozen=True, eq=False)
class Graph:
    adj: tuple[int, ...]

    def __post_init__(self):
        adj = tuple(int(row) for row in self.adj)
        n = len(adj)
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"row {v} references vertices outside 0..{n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at {v}")
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at ({v}, {u})")
        object.__setattr__(self, "adj", adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(tuple(adj))

    @classmethod
    def from_matrix(cls, matrix) -> "Graph":
        a = np.asarray(matrix, dtype=bool)
        return cls(tuple(to_mask(np.flatnonzero(row)) for row in a))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls((0,) * n)

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def vertex_count(self) -> int:
        return len(self.adj)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.adj)) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | 1 << v

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def induced(self, vertices: Iterable[int]) -> "Graph":
        keep = list(vertices)
        pos = {v: i for i, v in enumerate(keep)}
        return Graph(
            tuple(to_mask(pos[u] for u in bits(self.adj[v]) if u in pos) for v in keep)
        )

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(u, v) for u, v in combinations(vs, 2))

    def is_vertex_cover(self, vertices: Iterable[int]) -> bool:
        cover = to_mask(vertices)
        return all(cover >> u & 1 or cover >> v & 1 for u, v in self.edges())

    def to_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.edges():
            a[u, v] = a[v, u] = True
        return a

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self) -> int:
        return hash(self.adj)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, edges={self.edge_count})"


# ---------------------------------------------------------------------------
# distances


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    seen = frontier = 1 << source
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
        for v in bits(frontier):
            dist[v] = d
    return dist


def all_pairs_distances(g: Graph) -> np.ndarray:
    """Hop-count matrix; ``UNREACHABLE`` (-1) marks pairs in different components."""
    return np.array([bfs_distances(g, s) for s in range(g.n)], dtype=np.int64).reshape(g.n, g.n)


def is_connected(g: Graph) -> bool:
    return g.n == 0 or UNREACHABLE not in bfs_distances(g, 0)


def diameter(g: Graph, d: np.ndarray | None = None) -> int | Disconnected:
    if g.n == 0:
        return 0
    if d is None:
        d = all_pairs_distances(g)
    if (d == UNREACHABLE).any():
        return DISCONNECTED
    return int(d.max())


# ---------------------------------------------------------------------------
# closed-neighborhood reduction


@dataclass(frozen=True)
class ReducedGraph:
    """Quotient of ``source`` by ``x ~ y  <=>  N[x] == N[y]``.

    ``classes[i]`` lists the members of class ``i`` and
    ``representatives[i] == min(classes[i])``; ``graph`` is the subgraph
    induced by the representatives, with vertex ``i`` standing for class ``i``.
    """

    source: Graph
    classes: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]
    graph: Graph

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def class_of(self, v: int) -> int:
        for i, members in enumerate(self.classes):
            if v in members:
                return i
        raise IndexError(v)


def reduce_by_closed_neighborhoods(g: Graph) -> ReducedGraph:
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.closed_neighborhood(v), []).append(v)
    classes = tuple(tuple(members) for members in groups.values())
    reps = tuple(c[0] for c in classes)
    return ReducedGraph(g, classes, reps, g.induced(reps))


# ---------------------------------------------------------------------------
# strong resolving graph


def strong_resolving_graph(g: Graph, d: np.ndarray | None = None) -> Graph:
    """Graph joining every mutually maximally distant pair of ``g``.

    ``u`` is maximally distant from ``v`` when no neighbor of ``v`` is
    farther from ``u`` than ``v`` is.
    """
    if d is None:
        d = all_pairs_distances(g)
    if (d == UNREACHABLE).any():
        raise DisconnectedGraphError("strong resolving graph needs a connected graph")
    n = g.n
    # farthest[u, v] = max over w in N(v) of d(u, w)
    farthest = np.full((n, n), -1, dtype=np.int64)
    for v in range(n):
        nbrs = g.neighbors(v)
        if nbrs:
            farthest[:, v] = d[:, nbrs].max(axis=1)
    maximal = d >= farthest
    mmd = maximal & maximal.T
    np.fill_diagonal(mmd, False)
    return Graph.from_matrix(mmd)
