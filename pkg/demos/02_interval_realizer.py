"""Realize power-law degree intervals as multigraphs with certified-small
independent sets.

Run: python demos/02_interval_realizer.py
"""

import numpy as np

from plg import (
    PowerLawParams,
    clique_cover_bound,
    exact_mis,
    interval_degree_sequence,
    realize,
)


def section(title):
    print("\n" + "=" * 66)
    print(title)
    print("=" * 66)


section("A tiny sequence by hand")
g, cert = realize([1, 1, 2, 2, 2])
print("degree targets:   [1, 1, 2, 2, 2]")
print("realized degrees:", sorted(int(d) for d in g.degrees()))
print("cliques:", [list(c) for c in cert.cliques])
print("certificate bound:", cert.size, " exact MIS:", exact_mis(g).size)

section("Odd degree totals leave one recorded parity deficit")
g, cert = realize([1, 2, 2, 2, 2])
print("targets [1,2,2,2,2] (sum 9):")
print("realized:", sorted(int(d) for d in g.degrees()))
print("deficit vertex:", cert.parity_deficit_vertex, "(one unit short)")

section("Full power-law range, alpha=3, beta=1")
p = PowerLawParams(3.0, 1.0)
d = interval_degree_sequence(p, 1, p.delta)
g, cert = realize(d)
hist = np.bincount(g.degrees())
print(f"n = {g.vertex_count}, delta = {p.delta}, cliques = {cert.size}")
res = exact_mis(g)
print(f"exact MIS = {res.size} <= certificate {cert.size}")
bound = clique_cover_bound(p, 1, p.delta)
print(f"per-class ceiling sum = {bound.ceiling_sum}, integral form = {bound.integral_form:.2f}")

section("Aggregate mode scales where edges cannot be stored")
p = PowerLawParams(4.0, 0.3)
d = interval_degree_sequence(p, 1, p.delta)
_, cert = realize(d, materialize=False)
print(f"alpha=4, beta=0.3: n = {len(d):,}, delta = {p.delta:,}")
print(f"cliques = {cert.size}, parity deficit = {cert.parity_deficit}")
print("realized histogram equals the target counts (the edge set itself")
print("would hold ~1e11 distinct clique edges, so it is never materialized)")
