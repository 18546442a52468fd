"""
From a total coloring to an edge coloring
=========================================

Every vertex v_i of G becomes two vertices u_i, w_i of a bipartite graph H
joined by a diagonal edge, and every edge v_iv_j becomes the two edges
u_iw_j and u_jw_i. A total coloring of G lifts to an edge coloring of H
whose colors at each vertex are still consecutive.
"""

from intervaltotal import graph as G
from intervaltotal.constructions import color_complete_max
from intervaltotal.transform import lift_coloring, verify_interval_edge

g = G.complete(3)
c = color_complete_max(3)
print("K_3 with t =", c.t, "vertex colors", c.vertex_colors, "edge colors", c.edge_colors)

aux, ec = lift_coloring(g, c)
h = aux.graph
print(f"H has {h.n} vertices and {h.m} edges")
for k, (a, b) in enumerate(h.edges):
    kind = aux.provenance[k][0]
    print(f"  {h.label(a)}{h.label(b)}  color {ec.colors[k]}  ({kind})")

for v in range(h.n):
    print(f"  colors at {h.label(v)}:", sorted(ec.colors[k] for _, k in h.adjacency[v]))
print("interval edge coloring:", verify_interval_edge(h, ec).valid)

# the largest number of colors a connected graph can use is bounded by H
print("\nt <= 2|V|-1 on the largest complete-graph colorings")
for n in range(2, 9):
    t = color_complete_max(n).t
    print(f"  K_{n}: t={t}, 2n-1={2 * n - 1}")
