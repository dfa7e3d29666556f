"""
End degrees on gallery graphs
=============================

Build a few infinite graphs from the gallery, pick an end and bracket its
vertex- and edge-degree with certified lower and upper bounds.
"""

from endgraphs.enddeg import edge_degree, relative_degree, vertex_degree
from endgraphs.gallery import make_presentation
from endgraphs.presentation import ball, default_handle, handles

# Y(2): a tree of thick paths whose ends all have vertex-degree 3*2+1.
p = make_presentation("Y", {"l": 2})
print("ball sizes:", [len(ball(p, r).graph) for r in range(5)])

# An end handle is a nested chain of components; the default one follows
# the first infinite component at each radius.
h = default_handle(p)
print("handle:", h.to_spec())

# Lower bound: disjoint paths through an annulus. Upper bound: a separator.
d = vertex_degree(p, h, 6)
print("Y(2) d_v in", [str(d.lower), str(d.upper)], "exact:", d.exact)
print("  separator:", sorted(d.upper_cert.separator))

# The plane strip R^2 has two ends, each with d_v = 2 and d_e = 3.
r2 = make_presentation("R2")
for h in handles(r2, 1):
    print("R2", h.to_spec(), "d_v", vertex_degree(r2, h, 6).lower, "d_e", edge_degree(r2, h, 6).lower)

# Relative degree is a ratio of edge to vertex boundaries along nested regions.
a = make_presentation("chain_a", {"k": 4})
rel = relative_degree(a, default_handle(a), 5)
print("chain-a relative degree in", [str(rel.lower), str(rel.upper)])
