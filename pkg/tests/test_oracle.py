import random
from collections import Counter

import pytest

from intervalk.graph import ColoredGraph, PatternGraph, is_connected
from intervalk.oracle import (
    InstanceTooLarge,
    brute_force_recognize,
    enumerate_instances,
    find_exobiclique,
    is_exobiclique,
    matches_fig7_obstruction,
    naive_recognize,
    subset_recognize,
)
from intervalk.representation import verify_ordering

from conftest import fixture, random_graph


def labels(G, names):
    return [G.vertex_by_label(x) for x in names]


def test_small_examples():
    assert brute_force_recognize(ColoredGraph([0], [], k=2)) == [0]
    G, H = fixture("k3")
    assert brute_force_recognize(G, H) is not None
    G, H = fixture("c6")
    assert brute_force_recognize(G, H) is None
    assert naive_recognize(G, H) is None


def test_bound():
    G, H = fixture("fig5")
    with pytest.raises(InstanceTooLarge):
        brute_force_recognize(G, H)
    G, H = fixture("c6")
    with pytest.raises(InstanceTooLarge):
        brute_force_recognize(G, H, bound=5)
    assert brute_force_recognize(G, H, bound=6) is None


def test_pruned_equals_naive_exhaustively():
    for k in (2, 3):
        for G in enumerate_instances(6 if k == 2 else 5, k, connected=False):
            fast = brute_force_recognize(G)
            assert (fast is None) == (naive_recognize(G) is None)
            if fast is not None:
                assert verify_ordering(G, PatternGraph.complete(G.k), fast) is None


def test_subset_search_matches_backtracking():
    rng = random.Random(8)
    for _ in range(400):
        G = random_graph(rng, n_max=8, k_max=4)
        found = subset_recognize(G)
        assert (found is None) == (brute_force_recognize(G) is None)
        if found is not None:
            assert verify_ordering(G, PatternGraph.complete(G.k), found) is None


def test_exobiclique_fig5():
    G, _ = fixture("fig5")
    B1, W1 = labels(G, "def"), labels(G, "123")
    # the biclique side d,e,f carries color 0 in the fixture
    assert {G.color[v] for v in B1} == {0}
    assert is_exobiclique(G, B1, W1)
    assert not is_exobiclique(G, B1[:1], W1)
    found = find_exobiclique(G)
    assert found is not None and is_exobiclique(G, *found)


def test_exobiclique_negative_cases():
    K33 = ColoredGraph([0] * 3 + [1] * 3, [(u, v) for u in range(3) for v in range(3, 6)])
    assert find_exobiclique(K33) is None
    assert not is_exobiclique(K33, [0], [3, 4])
    for name in ("p4", "c6"):
        G, _ = fixture(name)
        assert find_exobiclique(G) is None
    with pytest.raises(ValueError):
        find_exobiclique(fixture("k3")[0])
    with pytest.raises(InstanceTooLarge):
        find_exobiclique(fixture("fig6")[0])


def test_fig7_matcher():
    G, _ = fixture("fig7")
    assert matches_fig7_obstruction(G)
    f, v = labels(G, "fv")
    edges = [e for e in G.edges() if set(e) != {f, v}]
    assert not matches_fig7_obstruction(ColoredGraph(G.color, edges, k=G.k))
    assert not matches_fig7_obstruction(fixture("fig5")[0])
    perm = [3, 7, 0, 5, 1, 6, 2, 4]
    shuffled = ColoredGraph(
        [G.color[perm.index(i)] for i in range(8)],
        [(perm[a], perm[b]) for a, b in G.edges()],
        k=4,
    )
    assert matches_fig7_obstruction(shuffled)


def test_enumeration_counts():
    sizes = Counter(G.n for G in enumerate_instances(4, 2))
    # n=4: the star K_{1,3} once, then C4 and its four spanning paths
    assert sizes[1] == 1 and sizes[2] == 1 and sizes[3] == 1
    assert sizes[4] == 1 + 5
    assert all(is_connected(G) for G in enumerate_instances(5, 3))
    assert sum(1 for _ in enumerate_instances(3, 3, connected=False)) > 0
