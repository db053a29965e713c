"""Counter-based RNG and instance generators."""

from itertools import combinations

import numpy as np
import pytest

from cliquelab.errors import InvalidParameterError
from cliquelab.generate import GenSpec, generate
from cliquelab.rng import CounterRng, splitmix64, splitmix64_array


def test_splitmix64_pure_function_of_seed_and_counter():
    assert splitmix64(1, 5) == splitmix64(1, 5)
    assert splitmix64(1, 5) != splitmix64(1, 6)
    assert splitmix64(2, 5) != splitmix64(1, 5)
    assert 0 <= splitmix64(123, 456) < (1 << 64)


def test_splitmix64_array_matches_scalar():
    arr = splitmix64_array(99, 3, 16)
    assert arr.dtype == np.uint64
    for i in range(16):
        assert int(arr[i]) == splitmix64(99, 3 + i)


def test_counter_rng_stream_position():
    a = CounterRng(7)
    first = [a.next64() for _ in range(4)]
    b = CounterRng(7)
    assert [b.next64() for _ in range(4)] == first


def test_below_and_sample():
    rng = CounterRng(5)
    draws = [rng.below(10) for _ in range(200)]
    assert set(draws) <= set(range(10))
    picked = CounterRng(5).sample(range(20), 20)
    assert sorted(picked) == list(range(20))
    with pytest.raises(ValueError):
        CounterRng(5).sample(range(3), 4)


def test_bernoulli_words_extremes_and_determinism():
    rng = CounterRng(1)
    assert rng.bernoulli_words(100, 0.0) == 0
    assert rng.bernoulli_words(100, 1.0) == (1 << 100) - 1
    a = CounterRng(2)
    b = CounterRng(2)
    assert a.bernoulli_words(64, 0.3) == b.bernoulli_words(64, 0.3)


def test_genspec_validation():
    with pytest.raises(InvalidParameterError):
        GenSpec("nope", 4, 3, 0.5, 0)
    with pytest.raises(InvalidParameterError):
        GenSpec("gnp-kpartite", 4, 3, 1.5, 0)
    with pytest.raises(InvalidParameterError):
        GenSpec("gnp-kpartite", 4, 3, 0.5, 0, r=2)       # r without hyper kind
    with pytest.raises(InvalidParameterError):
        GenSpec("gnp-hypergraph", 4, 3, 0.5, 0)          # hyper without r
    with pytest.raises(InvalidParameterError):
        GenSpec("planted-clique", 4, 3, 0.5, 0)          # no plant_count
    with pytest.raises(InvalidParameterError):
        GenSpec("gnp-kpartite", 4, 3, 0.5, 0, plant_count=1)


def test_gnp_extremes():
    g0 = generate(GenSpec("gnp-kpartite", 4, 3, 0.0, 1)).graph
    assert g0.edge_count() == 0
    g1 = generate(GenSpec("gnp-kpartite", 4, 3, 1.0, 1)).graph
    assert g1.edge_count() == 3 * 16
    g1.validate()


def test_same_seed_bit_identical():
    a = generate(GenSpec("gnp-kpartite", 16, 3, 0.37, 42)).graph
    b = generate(GenSpec("gnp-kpartite", 16, 3, 0.37, 42)).graph
    assert a.adjacency == b.adjacency
    c = generate(GenSpec("gnp-kpartite", 16, 3, 0.37, 43)).graph
    assert a.adjacency != c.adjacency

    ha = generate(GenSpec("gnp-hypergraph", 6, 4, 0.5, 9, r=3)).graph
    hb = generate(GenSpec("gnp-hypergraph", 6, 4, 0.5, 9, r=3)).graph
    assert ha.edges == hb.edges


def test_planted_clique_witnesses_present():
    for seed in range(6):
        inst = generate(GenSpec("planted-clique", 9, 4, 0.1, seed,
                                plant_count=3))
        assert len(inst.witnesses) == 3
        assert len(set(inst.witnesses)) == 3
        for w in inst.witnesses:
            for a, b in combinations(w, 2):
                assert inst.graph.has_edge(a, b)
        inst.graph.validate()


def test_planted_hyperclique_witnesses_present():
    for seed in range(4):
        inst = generate(GenSpec("planted-hyperclique", 6, 4, 0.05, seed,
                                r=3, plant_count=2))
        assert len(inst.witnesses) == 2
        for w in inst.witnesses:
            assert inst.graph.is_hyperclique(w)


def test_plants_drawn_before_noise():
    # the witness tuple only depends on (seed, sizes), not on p
    w_low = generate(GenSpec("planted-clique", 9, 4, 0.0, 5, plant_count=2))
    w_high = generate(GenSpec("planted-clique", 9, 4, 0.9, 5, plant_count=2))
    assert w_low.witnesses == w_high.witnesses


def test_gnp_graph_structure_valid():
    g = generate(GenSpec("gnp-kpartite", 10, 4, 0.5, 0)).graph
    g.validate()
    h = generate(GenSpec("gnp-hypergraph", 5, 4, 0.5, 0, r=3)).graph
    for e in h.edges:
        assert len({h.part_of(v) for v in e}) == 3
