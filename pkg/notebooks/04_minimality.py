"""
Minimal k-connectivity on finite graphs
=======================================

Check the six minimality notions with re-verifiable witnesses, count small
degree vertices and sweep all small graphs for the classical bounds.
"""

from endgraphs.gallery import make, make_presentation
from endgraphs.graph import FiniteGraph
from endgraphs.minimality import (
    MODES,
    check_minimality,
    cycles_degree_k,
    degree_census,
    reverify,
    small_degree_witness,
    sweep,
)

# K_{2,3} is edge-minimally 2-connected but deleting a degree-2 vertex leaves C_4, still 2-connected.
k23 = FiniteGraph(range(5), [(a, b) for a in (0, 1) for b in (2, 3, 4)])
for mode in MODES:
    rep = check_minimality(k23, 2, mode)
    print(f"{mode:22s} {rep.verdict!s:5s} reverified {reverify(k23, rep)}")

# O_{4,4}: vertex-minimally 4-connected with every degree equal to 3k/2 - 1.
o, _ = make("O", {"k": 4, "l": 4})
print("O_(4,4) small-degree vertices:", len(degree_census(o, 4).small), "of", len(o))

# Every cycle of an edge-minimal graph meets a vertex of degree k.
print("C_5 cycles ok:", cycles_degree_k(make("cycle", {"n": 5})[0], 2).ok)

# On infinite graphs the witness may be an end rather than a vertex.
w = small_degree_witness(make_presentation("R2"), 3, "edge-min-kedge", 6)
print("R2 witness:", w.kind, w.end, "d_e <=", w.estimate["upper"])

# Exhaustive sweep over connected graphs with at most 7 vertices.
s = sweep(7, 3)
print("sweep n<=7, k=3:", s.edge_min, "edge-min,", s.vertex_min, "vertex-min, ok", s.ok)
