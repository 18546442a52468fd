"""
Cycles, palettes and the verifier
=================================

Color a few cycles with the smallest and largest constructions, look at the
palette of every vertex, and watch the verifier reject a broken certificate.
"""

from intervaltotal import graph as G
from intervaltotal.coloring import TotalColoring, invert, palette, verify_interval_total
from intervaltotal.constructions import color_cycle_max, color_cycle_min

# C_6 needs only three colors: vertices and edges alternate 1, 2, 3 around the ring
g = G.cycle(6)
c = color_cycle_min(6)
print("C_6 with", c.t, "colors")
print("  vertex colors:", c.vertex_colors)
print("  edge colors:  ", c.edge_colors)
for v in range(g.n):
    print(f"  palette of {g.label(v)}:", sorted(palette(g, c, v)))
print("  valid:", verify_interval_total(g, c).valid)

# the same colors with t=4 declared leave color 4 unused
print("\nDeclaring t=4 instead:")
for failure in verify_interval_total(g, TotalColoring(c.vertex_colors, c.edge_colors, 4)).failures:
    print("  ", failure)

# the largest coloring of C_n uses n+2 colors
print("\nLargest colorings")
for n in range(3, 9):
    big = color_cycle_max(n)
    print(f"  C_{n}: t={big.t}  valid={verify_interval_total(G.cycle(n), big).valid}")

# x -> t+1-x turns any valid certificate into another one
flipped = invert(color_cycle_max(5))
print("\nInverted C_5 certificate:", flipped.vertex_colors, flipped.edge_colors)
print("  still valid:", verify_interval_total(G.cycle(5), flipped).valid)
