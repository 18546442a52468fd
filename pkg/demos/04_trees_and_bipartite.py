"""
Trees and regular bipartite graphs
==================================

Trees get Delta+2 colors by attaching one leaf at a time. Regular bipartite
graphs get r+2 colors from a decomposition into perfect matchings. Neither
is always the least possible t, and the search shows where it is not.
"""

from intervaltotal import graph as G
from intervaltotal.coloring import verify_interval_total
from intervaltotal.constructions import color_regular_bipartite, color_tree, proper_edge_color_regular_bipartite
from intervaltotal.search import compute_spectrum

for seed in range(5):
    tree = G.random_tree(9, seed)
    c = color_tree(tree)
    spec = compute_spectrum(tree)
    print(f"tree seed={seed}: Delta={G.max_degree(tree)}  constructed t={c.t}  "
          f"valid={verify_interval_total(tree, c).valid}  searched w_tau={spec.w_tau}")

# a ten-thousand vertex tree is no problem for the construction
big = G.random_tree(10_000, 7)
print("\n10k-vertex tree: t =", color_tree(big).t, "valid:", verify_interval_total(big, color_tree(big)).valid)

cube = G.hypercube(3)
print("\n3-cube edge coloring:", proper_edge_color_regular_bipartite(cube))
c = color_regular_bipartite(cube)
print("3-cube total coloring with t =", c.t, "valid:", verify_interval_total(cube, c).valid)

c6 = G.cycle(6)
print("C_6 from the matching construction: t =", color_regular_bipartite(c6).t,
      "but the search finds w_tau =", compute_spectrum(c6).w_tau)
