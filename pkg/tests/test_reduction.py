from fractions import Fraction

import pytest
from conftest import complete

from endgraphs.gallery import make_presentation
from endgraphs.graph import GraphInputError
from endgraphs.minors import verify_branch_sets
from endgraphs.presentation import finite_presentation
from endgraphs.reduction import (
    BudgetExhausted,
    ReductionCert,
    force_minor_pipeline,
    layers_linked,
    rayless_reduce,
    relative_reduce,
    replay_transcript,
    thresholds,
)


def test_rayless_k4_aleph():
    p = make_presentation("Kkaleph", {"k": 4})
    res = rayless_reduce(p, 4, 10)
    assert isinstance(res, ReductionCert) and res.verify(p)
    assert res.min_degree >= 4 and len(res.transcript) - 1 <= 10


def test_rayless_star_from_leaf():
    p = make_presentation("Kkaleph", {"k": 1})
    res = rayless_reduce(p, 1, 10, start="b3")
    assert res.vertices == {"a0", "b3"}


def test_rayless_double_ray_exhausts_with_linked_layers():
    p = make_presentation("double_ray")
    res = rayless_reduce(p, 2, 50)
    assert isinstance(res, BudgetExhausted)
    assert sum(1 for t in res.transcript if t["S"]) >= 50
    assert layers_linked(p, res.transcript)


def test_rayless_hypothesis_violation_reported():
    p = make_presentation("ray")
    res = rayless_reduce(p, 3, 10)
    assert isinstance(res, BudgetExhausted) and res.reason == "hypothesis violated"


def test_relative_finite_k5():
    p = finite_presentation(complete(5))
    res = relative_reduce(p, 4)
    assert isinstance(res, ReductionCert) and res.verify(p)
    assert res.average_degree == 4 and len(res.vertices) == 5


def test_relative_chain_a():
    p = make_presentation("chain_a", {"k": 4})
    res = relative_reduce(p, 3)
    assert isinstance(res, ReductionCert) and res.verify(p)
    assert res.average_degree >= 3
    assert replay_transcript(p, res.transcript)


def test_relative_tree_exhausts_with_ratio_one_chain():
    p = make_presentation("T", {"k": 3})
    res = relative_reduce(p, 2, 10)
    assert isinstance(res, BudgetExhausted)
    assert res.evidence and all(Fraction(d["ratio"]) == 1 < 2 for d in res.evidence)
    assert replay_transcript(p, res.transcript)


def test_relative_terminates_on_finite_inputs():
    for g in [complete(4), complete(6)]:
        p = finite_presentation(g)
        res = relative_reduce(p, 1, len(g))
        assert isinstance(res, ReductionCert)


def test_relative_rejects_non_locally_finite():
    with pytest.raises(GraphInputError):
        relative_reduce(make_presentation("Kkaleph", {"k": 3}), 2)


def test_replay_detects_tampering():
    p = make_presentation("chain_a", {"k": 4})
    res = relative_reduce(p, 3)
    bad = [dict(r) for r in res.transcript]
    bad[0]["S_next"] = list(bad[0]["S_next"])[:-1]
    assert not replay_transcript(p, bad)


def test_thresholds():
    t2 = thresholds(2)
    assert t2["girth"] == 19 and t2["hcs_vertex"] == 12 and t2["constants"] == "illustrative placeholders"
    assert thresholds(4)["lick"] == 5


def test_pipeline_k12_aleph():
    p = make_presentation("Kkaleph", {"k": 12})
    res = force_minor_pipeline(p, 4, m=12)
    assert res.status == "minor found" and res.verify(p)
    g = res.reduction.graph(p)
    assert len(g) <= 24 and verify_branch_sets(g, res.minor.branch_sets)


def test_pipeline_finite_k6():
    res = force_minor_pipeline(complete(6), 5)
    assert res.certified


@pytest.mark.parametrize("budget", [2, 3, 4])
def test_pipeline_planar_never_certifies(budget):
    p = make_presentation("Gp", {"k": 4})
    res = force_minor_pipeline(p, 5, budget)
    assert not res.certified
