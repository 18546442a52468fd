"""
Which t work for a wheel?
=========================

The constructions give an interval total coloring of the wheel W_n for every
t in its spectrum. On small wheels the exhaustive search confirms that no
other t is possible. Both answers are compared with the bound report.
"""

import time

from intervaltotal import graph as G
from intervaltotal.bounds import bound_report, known_exact_values
from intervaltotal.coloring import verify_interval_total
from intervaltotal.constructions import color_wheel, wheel_spectrum
from intervaltotal.graph import FamilySpec
from intervaltotal.search import compute_spectrum

for n in (5, 6):
    g = G.wheel(n)
    lo, hi = wheel_spectrum(n)
    built = [t for t in range(lo, hi + 1) if verify_interval_total(g, color_wheel(n, t)).valid]
    print(f"W_{n}: constructions cover t = {built}")

    start = time.perf_counter()
    result = compute_spectrum(g)
    print(f"  search over t = {result.t_range[0]}..{result.t_range[1]} took {time.perf_counter() - start:.2f}s")
    print("  " + result.to_table().replace("\n", "\n  ").rstrip())

    known = known_exact_values(FamilySpec("wheel", n=n))
    print(f"  known values: w_tau={known.w_tau} W_tau={known.W_tau}")

# larger wheels are out of reach for the search, but the certificates still check
print("\nConstruction-only range for bigger wheels")
for n in (9, 15, 30):
    lo, hi = wheel_spectrum(n)
    ok = all(verify_interval_total(G.wheel(n), color_wheel(n, t)).valid for t in range(lo, hi + 1))
    cap = bound_report(G.wheel(n))["unique_universal_vertex"].value
    print(f"  W_{n}: t = {lo}..{hi} all valid: {ok}; upper bound from the hub: {cap}")
