"""
From infinite hypotheses to finite subgraphs
============================================

Rayless reduction and relative-degree reduction turn degree assumptions on an
infinite graph into a finite, re-verifiable subgraph, or report honest
evidence when the budget runs out.
"""

from endgraphs.gallery import make_presentation
from endgraphs.reduction import (
    BudgetExhausted,
    force_minor_pipeline,
    rayless_reduce,
    relative_reduce,
    replay_transcript,
    thresholds,
)

# K_{4,aleph0} has no rays, so the reduction terminates with min degree 4.
p = make_presentation("Kkaleph", {"k": 4})
cert = rayless_reduce(p, 4, 10)
print("K_(4,aleph0):", sorted(cert.vertices), "min degree", cert.min_degree, "verified", cert.verify(p))

# The double ray violates the hypothesis in a subtle way: the layers never stop.
res = rayless_reduce(make_presentation("double_ray"), 2, 50)
print("double ray:", type(res).__name__, res.reason, "layers", len(res.evidence))

# Relative reduction on the K^4-chain reaches average degree at least 3.
a = make_presentation("chain_a", {"k": 4})
cert = relative_reduce(a, 3)
print("chain-a: average degree", cert.average_degree, "replay ok", replay_transcript(a, cert.transcript))

# On the 3-regular tree every region ratio is 1, so k = 2 is never reached.
t = relative_reduce(make_presentation("T", {"k": 3}), 2, 10)
assert isinstance(t, BudgetExhausted)
print("T_3 ratios:", [d["ratio"] for d in t.evidence])

# The pipeline chains a reduction with a bounded K^r minor search.
run = force_minor_pipeline(make_presentation("Kkaleph", {"k": 12}), 4, m=12)
print("K_(12,aleph0) pipeline:", run.status, "re-verified", run.verify(make_presentation("Kkaleph", {"k": 12})))

# Thresholds use placeholder constants; only their shape is meaningful.
t2 = thresholds(2)
print("thresholds k=2: girth", t2["girth"], "constants", t2["constants"])
