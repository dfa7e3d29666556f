from fractions import Fraction

import pytest

from endgraphs.enddeg import (
    UNBOUNDED,
    edge_degree,
    punctured_chain,
    ratio_degree,
    relative_degree,
    vertex_degree,
)
from endgraphs.gallery import make_presentation
from endgraphs.graph import GraphInputError
from endgraphs.presentation import default_handle, handles


def est(name, params, fn, budget=6, h=None):
    p = make_presentation(name, params)
    return p, (h or default_handle(p)), fn(p, h or default_handle(p), budget)


def test_double_ray():
    _, _, v = est("double_ray", {}, vertex_degree)
    assert v.lower == v.upper == 1
    _, _, r = est("double_ray", {}, ratio_degree)
    assert r.lower == r.upper == 1


@pytest.mark.parametrize("l", [2, 3])
def test_y_vertex_degree(l):
    _, _, v = est("Y", {"l": l}, vertex_degree)
    assert v.exact and v.lower == 3 * l + 1


def test_chain_a():
    _, _, e = est("chain_a", {"k": 4}, edge_degree)
    assert e.lower == e.upper == 2
    _, _, r = est("chain_a", {"k": 4}, ratio_degree)
    assert r.lower == r.upper == 2


def test_r2_both_ends():
    p = make_presentation("R2")
    for h in handles(p, 1):
        e = edge_degree(p, h, 6)
        v = vertex_degree(p, h, 6)
        assert e.lower == e.upper == 3 and v.lower == v.upper == 2


def test_gpp_ends():
    p = make_presentation("Gpp", {"k": 4})
    for h in handles(p, 2):
        v, e, r = vertex_degree(p, h, 6), edge_degree(p, h, 6), ratio_degree(p, h, 6)
        assert v.upper != UNBOUNDED and v.upper <= 3
        assert e.lower >= 4
        assert r.lower >= Fraction(4, 3)


def test_duality_and_certificates_on_gallery():
    for name in ["Y", "J", "R2", "chain_a", "chain_b", "Tr", "hatH", "LargeEndDeg", "strongex"]:
        p = make_presentation(name)
        h = default_handle(p)
        v, e = vertex_degree(p, h, 6), edge_degree(p, h, 6)
        assert v.lower <= e.lower  # vertex-degree never exceeds edge-degree
        for d in (v, e):
            assert len(d.lower_cert.paths) == d.lower
            assert d.lower_cert.verify(p, h)
            if d.upper != UNBOUNDED:
                assert d.upper_cert.size == d.upper >= d.lower
                assert d.upper_cert.verify(p, h)


def test_certificates_reverify():
    p = make_presentation("Y", {"l": 2})
    h = default_handle(p)
    v = vertex_degree(p, h, 6)
    assert v.lower_cert.verify(p, h) and v.upper_cert.verify(p, h)


def test_determinism():
    a = est("J", {"k": 3}, vertex_degree)[2].to_json()
    b = est("J", {"k": 3}, vertex_degree)[2].to_json()
    assert a == b


def test_relative_degree_examples():
    _, _, a = est("chain_a", {"k": 4}, relative_degree, 5)
    assert a.contains(4) and a.upper - a.lower <= Fraction(1, 2)
    _, _, b = est("chain_b", {"k": 4}, relative_degree, 5)
    assert b.lower == b.upper == 1
    _, _, h3 = est("H", {"g": 3}, relative_degree, 5)
    assert h3.upper != UNBOUNDED and h3.upper <= Fraction(6, 5)
    assert "enumeration truncated" in h3.flags  # lower bound is only over enumerated candidates
    assert a.upper_cert.verify()


def test_relative_chain_on_tree_is_one():
    _, _, t = est("T", {"k": 3}, relative_degree, 6)
    assert t.lower == t.upper == 1


def test_punctured_chain_degenerates():
    p = make_presentation("Tr", {"r": 3, "k": 3})
    h = default_handle(p)
    chain = punctured_chain(p, h, 9)
    assert chain.verify(check_minimal=True)
    assert min(chain.ratios()) <= Fraction(11, 10)
    assert not all(s.minimal for s in chain.steps[1:])
    honest = relative_degree(p, h, 9)
    assert honest.lower >= 3 - Fraction(1, 5)


def test_rejects_bad_input():
    p = make_presentation("Kkaleph", {"k": 3})
    with pytest.raises(GraphInputError):
        vertex_degree(p, default_handle(make_presentation("ray")), 6)
