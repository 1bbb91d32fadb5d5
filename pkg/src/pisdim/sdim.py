"""Strong metric dimension by three independent routes.

* ``sdim_bruteforce`` searches subsets by increasing size.
* ``sdim_via_vertex_cover`` takes a minimum vertex cover of the strong
  resolving graph; valid for every connected graph.
* ``sdim_via_reduction`` uses ``|V| - omega(reduced graph)``, valid only
  for graphs of diameter exactly two.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from .clique import max_clique, min_vertex_cover
from .graph import (
    UNREACHABLE,
    DisconnectedGraphError,
    Graph,
    all_pairs_distances,
    diameter,
    reduce_by_closed_neighborhoods,
    strong_resolving_graph,
    to_mask,
)

DEFAULT_BRUTEFORCE_CAP = 14


class TooLargeError(ValueError):
    pass


class Method(str, enum.Enum):
    REDUCTION = "reduction"
    VERTEX_COVER = "vertex_cover"
    BRUTEFORCE = "bruteforce"


@dataclass(frozen=True)
class SdimResult:
    method: Method
    value: int | None
    witness: tuple[int, ...] | None = None
    applicable: bool = True
    reason: str = ""

    @classmethod
    def not_applicable(cls, method: Method, reason: str) -> "SdimResult":
        return cls(method, None, None, applicable=False, reason=reason)


def _distances(g: Graph, d: np.ndarray | None) -> np.ndarray:
    if d is None:
        d = all_pairs_distances(g)
    if (d == UNREACHABLE).any():
        raise DisconnectedGraphError("strong resolvability needs a connected graph")
    return d


def strongly_resolves(d: np.ndarray, w: int, u: int, v: int) -> bool:
    """Does ``w`` lie beyond ``v`` on a geodesic from ``u`` (or vice versa)?"""
    if UNREACHABLE in (d[w, u], d[w, v], d[u, v]):
        raise DisconnectedGraphError(f"vertices {w}, {u}, {v} are not in one component")
    return bool(d[w, u] == d[w, v] + d[v, u] or d[w, v] == d[w, u] + d[u, v])


def is_strong_resolving_set(g: Graph, s: Iterable[int], d: np.ndarray | None = None) -> bool:
    d = _distances(g, d)
    s = sorted(set(s))
    return all(
        any(strongly_resolves(d, w, u, v) for w in s) for u, v in combinations(range(g.n), 2)
    )


def is_resolving_set(g: Graph, s: Iterable[int], d: np.ndarray | None = None) -> bool:
    """Plain (non-strong) resolving: some ``z`` in ``s`` has ``d(x, z) != d(y, z)``."""
    d = _distances(g, d)
    s = sorted(set(s))
    return all(any(d[x, z] != d[y, z] for z in s) for x, y in combinations(range(g.n), 2))


def resolver_masks(g: Graph, d: np.ndarray | None = None) -> list[int]:
    """For each unordered pair, the bit-set of vertices strongly resolving it."""
    d = _distances(g, d)
    masks = []
    for u, v in combinations(range(g.n), 2):
        hit = (d[:, u] == d[:, v] + d[v, u]) | (d[:, v] == d[:, u] + d[u, v])
        masks.append(to_mask(np.flatnonzero(hit)))
    return masks


def sdim_bruteforce(g: Graph, cap: int = DEFAULT_BRUTEFORCE_CAP) -> SdimResult:
    if g.n > cap:
        raise TooLargeError(f"{g.n} vertices exceeds the brute-force cap of {cap}")
    # fewest resolvers first: failing pairs are found sooner
    masks = sorted(set(resolver_masks(g)), key=int.bit_count)
    for k in range(g.n + 1):
        for subset in combinations(range(g.n), k):
            chosen = to_mask(subset)
            if all(m & chosen for m in masks):
                return SdimResult(Method.BRUTEFORCE, k, subset)
    raise AssertionError("the full vertex set always strongly resolves")


def sdim_via_vertex_cover(g: Graph, d: np.ndarray | None = None) -> SdimResult:
    d = _distances(g, d)
    size, cover = min_vertex_cover(strong_resolving_graph(g, d))
    return SdimResult(Method.VERTEX_COVER, size, cover)


def sdim_via_reduction(g: Graph, d: np.ndarray | None = None) -> SdimResult:
    """``|V| - omega(R_G)`` for diameter-two graphs.

    At diameter two the strong resolving graph is the complement of ``g``
    plus the edges between true twins, so removing one maximum clique of
    the reduced graph (by its representatives) leaves a minimum strong
    resolving set.  That remainder is the witness.
    """
    diam = diameter(g, d)
    if diam != 2:
        return SdimResult.not_applicable(
            Method.REDUCTION, f"diameter is {diam!r}, the reduction formula needs exactly 2"
        )
    reduced = reduce_by_closed_neighborhoods(g)
    omega, clique = max_clique(reduced.graph)
    dropped = {reduced.representatives[i] for i in clique}
    witness = tuple(v for v in range(g.n) if v not in dropped)
    return SdimResult(Method.REDUCTION, g.n - omega, witness)


def all_methods(
    g: Graph, *, bruteforce: bool = False, cap: int = DEFAULT_BRUTEFORCE_CAP
) -> dict[Method, SdimResult]:
    d = _distances(g, None)
    results = {
        Method.REDUCTION: sdim_via_reduction(g, d),
        Method.VERTEX_COVER: sdim_via_vertex_cover(g, d),
    }
    if bruteforce:
        if g.n <= cap:
            results[Method.BRUTEFORCE] = sdim_bruteforce(g, cap)
        else:
            results[Method.BRUTEFORCE] = SdimResult.not_applicable(
                Method.BRUTEFORCE, f"{g.n} vertices exceeds the brute-force cap of {cap}"
            )
    return results
