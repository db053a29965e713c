"""Regularity-driven triangle listing pipeline and its wrappers."""

import random

import pytest

from cliquelab.core import KPartiteGraph
from cliquelab.errors import InvalidParameterError
from cliquelab.listing import (list_all_triangles, list_triangles,
                               list_triangles_detailed,
                               list_triangles_threshold)
from cliquelab.oracles import brute_triangles
from cliquelab.regularity import RegularityConfig
from tests.test_core import random_graph
from tests.test_oracles import complete_kpartite

FAST_CFG = RegularityConfig(epsilon=0.15, rng_seed=0, sample_count=60,
                            refinement_budget=4, max_pieces=8)


def test_requires_three_parts():
    with pytest.raises(InvalidParameterError):
        list_triangles(KPartiteGraph([2, 2]), None)


def test_triangle_free_construction_empty():
    g = KPartiteGraph([4, 4, 4])
    for u in g.part_vertices(0):
        for v in g.part_vertices(1):
            g.adjacency[u] |= 1 << v
            g.adjacency[v] |= 1 << u
    assert len(list_triangles(g, None, FAST_CFG)) == 0


def test_unbounded_matches_oracle():
    rng = random.Random(17)
    for _ in range(15):
        sizes = [rng.randint(2, 12) for _ in range(3)]
        g = random_graph(rng, sizes, rng.choice([0.2, 0.5, 0.8]))
        want = brute_triangles(g).as_set()
        assert list_triangles(g, None, FAST_CFG).as_set() == want


def test_bounded_prefix_property():
    rng = random.Random(23)
    for _ in range(10):
        g = random_graph(rng, [8, 8, 8], 0.5)
        want = brute_triangles(g).as_set()
        t = rng.randint(0, len(want) + 2)
        res = list_triangles(g, t, FAST_CFG)
        assert len(res) == min(t, len(want))
        assert res.as_set() <= want
        assert len(res.as_set()) == len(res.witnesses)   # no duplicates
        assert res.truncated == (len(want) > t)


def test_pair_plans_argmin_and_density():
    g = random_graph(random.Random(3), [6, 10, 10], 0.45)
    detail = list_triangles_detailed(g, None, FAST_CFG)
    assert detail.piece_count >= 1
    for plan in detail.plans:
        assert 0.0 <= plan.density <= 1.0
        expected = ("pivot-v1" if plan.cost_pivot_v1 <= plan.cost_pivot_v2
                    else "pivot-v2")
        assert plan.strategy == expected
        assert plan.estimated_cost == min(plan.cost_pivot_v1,
                                          plan.cost_pivot_v2)
        assert plan.low_density == (plan.density <= FAST_CFG.epsilon ** 0.5)


def test_threshold_t_zero():
    g = complete_kpartite([2, 2, 2])
    res = list_triangles_threshold(g, 0, FAST_CFG)
    assert len(res) == 0 and res.truncated
    empty = KPartiteGraph([2, 2, 2])
    res2 = list_triangles_threshold(empty, 0, FAST_CFG)
    assert len(res2) == 0 and not res2.truncated


def test_threshold_complete_exact_count():
    g = complete_kpartite([8, 8, 8])
    res = list_triangles_threshold(g, 100, FAST_CFG)
    assert len(res) == 100 and res.truncated
    assert len(res.as_set()) == 100
    for w in res.witnesses:
        a, b, c = w
        assert g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)


def test_threshold_no_duplicates_across_block_triples():
    rng = random.Random(31)
    for _ in range(8):
        g = random_graph(rng, [9, 9, 9], 0.55)
        want = brute_triangles(g).as_set()
        res = list_triangles_threshold(g, None, FAST_CFG)
        assert len(res.witnesses) == len(res.as_set())
        assert res.as_set() == want


def test_list_all_doubling():
    g = complete_kpartite([3, 3, 3])
    res = list_all_triangles(g, FAST_CFG)
    assert len(res) == 27 and not res.truncated
    assert len(list_all_triangles(KPartiteGraph([3, 3, 3]), FAST_CFG)) == 0


def test_planted_disjoint_triangles_truncation():
    # 20 vertex-disjoint planted triangles in light noise, t = 12
    rng = random.Random(2)
    g = random_graph(rng, [24, 24, 24], 0.02)
    for i in range(20):
        a, b, c = i, 24 + i, 48 + i
        for (x, y) in ((a, b), (a, c), (b, c)):
            g.adjacency[x] |= 1 << y
            g.adjacency[y] |= 1 << x
    want = brute_triangles(g).as_set()
    assert len(want) >= 20
    res = list_triangles(g, 12, FAST_CFG)
    assert len(res) == 12 and res.truncated
    assert res.as_set() <= want and len(res.as_set()) == 12
