import random
from itertools import combinations

from conftest import cycle, path, petersen

from endgraphs.graph import FiniteGraph
from endgraphs.separators import (
    brute_force_minimal_separators,
    is_minimal_separator,
    minimal_separators,
)


def test_path_separators_are_interior_singletons():
    seps = set(minimal_separators(path(4), {0}, {3}).separators)
    assert seps == {frozenset({1}), frozenset({2})}


def test_c4_opposite_pairs():
    seps = set(minimal_separators(cycle(4), {0}, {2}).separators)
    assert seps == {frozenset({1, 3})}
    c6 = set(minimal_separators(cycle(6), {0}, {3}).separators)
    assert c6 == {frozenset({a, b}) for a in (1, 2) for b in (4, 5)}


def test_petersen_antipodal_cap_4():
    g = petersen()
    a, b = 0, 7  # non-adjacent
    ours = {s for s in minimal_separators(g, {a}, {b}).separators if len(s) <= 4}
    assert ours == brute_force_minimal_separators(g, {a}, {b}, 4)


def test_random_graphs_against_brute_force():
    rng = random.Random(11)
    for _ in range(150):
        n = rng.randint(3, 8)
        g = FiniteGraph(range(n), [(u, v) for u, v in combinations(range(n), 2) if rng.random() < 0.45])
        a, b = {0}, {n - 1}
        if n - 1 in g.adj[0]:
            continue
        res = minimal_separators(g, a, b)
        assert res.complete
        assert set(res.separators) == brute_force_minimal_separators(g, a, b, n - 2)
        assert all(is_minimal_separator(g, a, b, s) for s in res.separators)


def test_size_cap_and_limit():
    g = cycle(8)
    capped = minimal_separators(g, {0}, {4}, size_cap=1).separators
    assert capped == []
    limited = minimal_separators(g, {0}, {4}, limit=2)
    assert len(limited.separators) <= 2 and not limited.complete
