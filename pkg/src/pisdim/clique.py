"""Exact maximum clique and minimum vertex cover.

Branch and bound over bit-set candidate sets with a greedy-coloring
upper bound.  Both searches return the lexicographically least optimal
witness (as a sorted tuple of vertex indices), so results are stable
across runs.
"""

from __future__ import annotations

from .graph import Graph


def _color_order(adj: tuple[int, ...], cand: int) -> list[tuple[int, int]]:
    """Greedy coloring of ``cand``; returns ``(vertex, color)`` in color order.

    ``color`` bounds the clique size reachable from the vertices up to
    and including that position.
    """
    order = []
    uncolored = cand
    color = 0
    while uncolored:
        color += 1
        q = uncolored
        while q:
            low = q & -q
            v = low.bit_length() - 1
            q &= ~adj[v] & ~low
            uncolored &= ~low
            order.append((v, color))
    return order


def _max_clique_mask(adj: tuple[int, ...], cand: int) -> int:
    best_mask = 0
    best_size = 0

    def expand(current: int, size: int, p: int) -> None:
        nonlocal best_mask, best_size
        for v, color in reversed(_color_order(adj, p)):
            if size + color <= best_size:
                return
            bit = 1 << v
            newp = p & adj[v]
            if newp:
                expand(current | bit, size + 1, newp)
            elif size + 1 > best_size:
                best_mask, best_size = current | bit, size + 1
            p &= ~bit

    expand(0, 0, cand)
    return best_mask


def _has_clique(adj: tuple[int, ...], cand: int, k: int) -> bool:
    """True iff ``cand`` contains a clique of ``k`` vertices."""
    if k <= 0:
        return True
    if cand.bit_count() < k:
        return False

    def expand(size: int, p: int) -> bool:
        for v, color in reversed(_color_order(adj, p)):
            if size + color < k:
                return False
            if size + 1 == k:
                return True
            if expand(size + 1, p & adj[v]):
                return True
            p &= ~(1 << v)
        return False

    return expand(0, cand)


def clique_number(g: Graph) -> int:
    return _max_clique_mask(g.adj, g.full_mask).bit_count()


def max_clique(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Size and lexicographically least witness of a maximum clique."""
    if g.n == 0:
        return 0, ()
    adj = g.adj
    omega = clique_number(g)
    chosen: list[int] = []
    cand = g.full_mask
    for v in range(g.n):
        if len(chosen) == omega:
            break
        if not cand >> v & 1:
            continue
        later = adj[v] & cand & ~((2 << v) - 1)
        if _has_clique(adj, later, omega - len(chosen) - 1):
            chosen.append(v)
            cand = later
    return omega, tuple(chosen)


def max_independent_set(g: Graph) -> tuple[int, tuple[int, ...]]:
    return max_clique(g.complement())


def min_vertex_cover(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Size and lexicographically least witness of a minimum vertex cover.

    A cover is the complement of an independent set, so the search runs
    on the complement graph.  The witness is built greedily: each vertex
    goes into the cover whenever an optimal cover with the choices made
    so far still exists.
    """
    n = g.n
    if n == 0:
        return 0, ()
    comp = g.complement().adj
    alpha = _max_clique_mask(comp, (1 << n) - 1).bit_count()
    size = 0
    # undecided vertices compatible with every vertex left out of the cover
    cand = (1 << n) - 1
    cover = []
    for v in range(n):
        later = cand & ~((2 << v) - 1)
        if _has_clique(comp, later, alpha - size):
            cover.append(v)
            cand = cand & ~(1 << v)
        else:
            size += 1
            cand = later & comp[v]
    assert size == alpha, "greedy cover construction lost optimality"
    return n - alpha, tuple(cover)


def independence_number(g: Graph) -> int:
    return clique_number(g.complement())

