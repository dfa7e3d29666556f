"""
Grid minors near an end
=======================

Pack disjoint rays through an annulus, order them by connectivity and
assemble a [k] x [m] grid minor certificate that can be checked on its own.
"""

from endgraphs.gallery import make_presentation
from endgraphs.gridminor import (
    annulus,
    branch_sets,
    disjoint_rays,
    exhaustive_grid_search,
    grid_minor_extract,
    verify_grid_cert,
)
from endgraphs.presentation import ball, default_handle

# The quarter plane contains every finite grid.
p = make_presentation("grid")
h = default_handle(p)
ex = grid_minor_extract(p, h, 4, 3, 12, 1, 4)
g, _, _ = annulus(p, h, 3, 12)
print("grid: k", ex.cert.k, "m", ex.cert.m, "verified", verify_grid_cert(ex.cert, g))
print("  branch set (0, 0):", sorted(branch_sets(ex.cert)[(0, 0)]))

# A smaller certificate is obtained by dropping columns and rows.
print("  restricted 2x2 still valid:", verify_grid_cert(ex.cert.restrict(2, 2), g))

# When rays run out, the failure carries a separator of matching size.
y = make_presentation("Y", {"l": 2})
hy = default_handle(y)
fail = disjoint_rays(y, hy, 8, 2, 6)
print("Y(2): asked for 8 rays, got", fail.achieved, "cut verifies", fail.verify(annulus(y, hy, 2, 6)[0]))

# Y(2) has enough rays for k = 6 but they cannot be ordered into a grid.
ex6 = grid_minor_extract(y, hy, 6, 1, 9, 2, 4)
print("Y(2) k=6:", ex6.failure.stage)

# A bounded exhaustive search backs this up on a small ball (a few seconds).
b = ball(y, 6).graph
lvl = {v: y.lvl(v) for v in b.vertices}
src = [v for v in b.vertices if lvl[v] == 0]
snk = [v for v in b.vertices if lvl[v] == 6]
res = exhaustive_grid_search(b, lvl, 6, 3, 2, src, snk)
print("exhaustive:", res.systems, "column systems,", res.candidates, "candidates, found", res.found is not None)
