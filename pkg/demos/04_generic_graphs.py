"""
The engines on arbitrary graphs
===============================

Nothing in the graph layer is specific to rings.  On random connected
graphs the brute-force search and the vertex-cover route always agree,
and the reduction formula joins them whenever the diameter is two.
"""

import numpy as np

from pisdim import Graph, diameter, is_connected
from pisdim.sdim import sdim_bruteforce, sdim_via_reduction, sdim_via_vertex_cover

rng = np.random.default_rng(0)
rows = []
while len(rows) < 12:
    n = int(rng.integers(4, 12))
    upper = np.triu(rng.random((n, n)) < rng.uniform(0.2, 0.8), 1)
    g = Graph.from_matrix(upper | upper.T)
    if not is_connected(g):
        continue
    red = sdim_via_reduction(g)
    rows.append(
        (n, g.edge_count, diameter(g), sdim_bruteforce(g).value,
         sdim_via_vertex_cover(g).value, red.value if red.applicable else "-")
    )

print(f"{'n':>3} {'m':>4} {'diam':>5} {'brute':>6} {'cover':>6} {'reduction':>10}")
for row in rows:
    print("{:>3} {:>4} {:>5} {:>6} {:>6} {:>10}".format(*row))
