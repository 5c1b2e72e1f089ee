import random

from plg import MultiGraph, exact_mis, greedy_maximal_is, is_independent

from conftest import brute_mis, random_simple_graph


def test_c5(c5):
    res = exact_mis(c5)
    assert res.size == 2
    assert res.optimal
    assert is_independent(c5, res.witness)


def test_petersen(petersen):
    assert brute_mis(petersen) == 4  # oracle over 2^10 subsets
    res = exact_mis(petersen)
    assert res.size == 4
    assert res.optimal


def test_edgeless():
    g = MultiGraph(9)
    res = exact_mis(g)
    assert res.size == 9
    assert res.witness == list(range(9))


def test_loops_excluded():
    g = MultiGraph(3, {(0, 0): 1, (1, 2): 1})
    res = exact_mis(g)
    assert res.size == 1
    assert 0 not in res.witness


def test_against_oracle_random():
    rng = random.Random(2)
    for _ in range(60):
        g = random_simple_graph(rng, rng.randint(1, 13), rng.random())
        res = exact_mis(g)
        assert res.optimal
        assert res.size == brute_mis(g)
        assert is_independent(g, res.witness)
        assert len(res.witness) == res.size


def test_relabeling_invariance():
    rng = random.Random(9)
    for _ in range(25):
        n = rng.randint(2, 11)
        g = random_simple_graph(rng, n, 0.4)
        perm = list(range(n))
        rng.shuffle(perm)
        edges = {}
        for (u, v), m in g.edge_dict().items():
            a, b = perm[u], perm[v]
            edges[(min(a, b), max(a, b))] = m
        h = MultiGraph(n, edges)
        assert exact_mis(g).size == exact_mis(h).size


def test_budget_exhaustion_returns_best_found():
    rng = random.Random(4)
    g = random_simple_graph(rng, 30, 0.2)
    res = exact_mis(g, budget=5)
    assert not res.optimal
    assert is_independent(g, res.witness)
    assert res.nodes_explored >= 5


def test_witness_deterministic():
    rng = random.Random(13)
    g = random_simple_graph(rng, 12, 0.35)
    a = exact_mis(g)
    b = exact_mis(g)
    assert a.witness == b.witness


def test_greedy_maximal_is():
    rng = random.Random(6)
    for _ in range(25):
        g = random_simple_graph(rng, rng.randint(1, 12), 0.4)
        s = greedy_maximal_is(g)
        assert is_independent(g, s)
        adj = g.adjacency_sets()
        covered = set(s) | {u for v in s for u in adj[v]}
        assert covered == set(range(g.vertex_count))  # maximality
