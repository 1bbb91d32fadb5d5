"""
Three small rings, three ways to the strong metric dimension
============================================================

Build the prime ideal sum graph of F1 x F2 x F3, Z4 x Z9 and Z8 x Z27 and
compute sdim by brute force, by a vertex cover of the strong resolving
graph, and by |V| minus the clique number of the reduced graph.
"""

from pisdim import (
    build_pis,
    diameter,
    is_strong_resolving_set,
    max_clique,
    parse_ring_spec,
    reduce_by_closed_neighborhoods,
    sdim_bruteforce,
    sdim_via_reduction,
    sdim_via_vertex_cover,
)

for text in ["F x F x F", "Z(4) x Z(9)", "Z(8) x Z(27)"]:
    g = build_pis(parse_ring_spec(text))
    omega, clique = max_clique(g)
    reduced = reduce_by_closed_neighborhoods(g)
    print(f"\n{text}: {g.n} vertices, {g.edge_count} edges, diameter {diameter(g)}")
    print(f"  clique number {omega}: {g.labels_of(clique)}")
    print(f"  reduced graph keeps {reduced.class_count} of {g.n} vertices")

    # the three routes
    brute = sdim_bruteforce(g)
    cover = sdim_via_vertex_cover(g)
    reduction = sdim_via_reduction(g)
    print(f"  sdim: brute force {brute.value}, vertex cover {cover.value}, reduction {reduction.value}")
    print(f"  least strong resolving set: {g.labels_of(brute.witness)}")

# The set printed with the F1 x F2 x F3 example: the three maximal ideals.
g = build_pis((1, 1, 1))
s = [g.index(v) for v in [(0, 0, 1), (0, 1, 0), (1, 0, 0)]]
print("\nmaximal ideals of F1 x F2 x F3 strongly resolve:", is_strong_resolving_set(g, s))

# %%
# Export a graph for graphviz: ``dot -Tpng z4z9.dot -o z4z9.png``
from pisdim import to_dot

print(to_dot(build_pis(parse_ring_spec("Z(4) x Z(9)")), "Z(4) x Z(9)"))
