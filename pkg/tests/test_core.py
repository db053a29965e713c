"""Graph/hypergraph representation and induced-subgraph behaviour."""

import random

import pytest

from cliquelab.bitops import iter_bits, mask_from_vertices, mask_range
from cliquelab.core import (KPartiteGraph, UniformHypergraph,
                            VertexSubsetFamily, degree_product,
                            induced_subgraph, kpartify, neighbors_in_part)
from cliquelab.errors import InvalidParameterError


def random_graph(rng, sizes, p):
    g = KPartiteGraph(sizes)
    n = g.n_total
    for u in range(n):
        for v in range(u + 1, n):
            if g.part_of(u) != g.part_of(v) and rng.random() < p:
                g.adjacency[u] |= 1 << v
                g.adjacency[v] |= 1 << u
    return g


def test_bitops_basics():
    assert mask_range(2, 5) == 0b11100
    assert mask_from_vertices([0, 3]) == 0b1001
    assert list(iter_bits(0b10110)) == [1, 2, 4]
    assert list(iter_bits(0)) == []


def test_part_layout():
    g = KPartiteGraph([2, 3, 1])
    assert g.k == 3 and g.n_total == 6
    assert list(g.part_vertices(1)) == [2, 3, 4]
    assert [g.part_of(v) for v in range(6)] == [0, 0, 1, 1, 1, 2]
    assert g.part_masks[1] == 0b011100


def test_from_edges_rejects_intra_part():
    with pytest.raises(InvalidParameterError):
        KPartiteGraph.from_edges([2, 2], [(0, 1)])
    with pytest.raises(InvalidParameterError):
        KPartiteGraph.from_edges([2, 2], [(0, 9)])


def test_validate_catches_asymmetry():
    g = KPartiteGraph([1, 1])
    g.adjacency[0] = 0b10   # edge 0->1 without the mirror
    with pytest.raises(InvalidParameterError):
        g.validate()


def test_edges_and_count():
    g = KPartiteGraph.from_edges([2, 2], [(0, 2), (1, 3), (0, 3)])
    assert sorted(g.edges()) == [(0, 2), (0, 3), (1, 3)]
    assert g.edge_count() == 3
    g.validate()


def test_induced_subgraph_reindexes_and_maps_back():
    rng = random.Random(7)
    g = random_graph(rng, [4, 4, 4], 0.5)
    keep = VertexSubsetFamily.of({1, 3}, {5, 6}, {9, 11})
    sub = induced_subgraph(g, keep)
    assert sub.part_sizes == [2, 2, 2]
    for u in range(sub.n_total):
        for v in range(sub.n_total):
            if u != v and sub.part_of(u) != sub.part_of(v):
                assert sub.has_edge(u, v) == g.has_edge(sub.to_original(u),
                                                        sub.to_original(v))


def test_induced_subgraph_empty_part():
    g = random_graph(random.Random(1), [3, 3, 3], 0.5)
    sub = induced_subgraph(g, VertexSubsetFamily.of({0, 1}, set(), {6}))
    assert sub.part_sizes == [2, 0, 1]


def test_subset_family_validation():
    g = KPartiteGraph([2, 2])
    with pytest.raises(InvalidParameterError):
        VertexSubsetFamily.of({0, 2}).validate(g)     # spans two parts
    with pytest.raises(InvalidParameterError):
        VertexSubsetFamily.of({0}, {0}).validate(g)   # overlap


def test_neighbors_and_degree_product():
    g = KPartiteGraph.from_edges([1, 2, 2], [(0, 1), (0, 2), (0, 3)])
    assert neighbors_in_part(g, 0, 1).degree == 2
    assert neighbors_in_part(g, 0, 2).vertices() == [3]
    assert degree_product(g, 0) == 2


def test_kpartify_has_cross_clique_iff_clique():
    # triangle 0-1-2 plus isolated 3
    adj = [0b0110, 0b0101, 0b0011, 0]
    g = kpartify(adj, 3)
    assert g.part_sizes == [4, 4, 4]
    assert g.has_edge(0, 5) and g.has_edge(0, 6)
    assert not g.has_edge(0, 4)     # same source vertex, no self-pairing
    g.validate()


def test_hypergraph_edge_validation():
    h = UniformHypergraph(3, [2, 2, 2, 2])
    h.add_edge((0, 2, 4))
    assert h.has_edge((4, 0, 2))
    with pytest.raises(InvalidParameterError):
        h.add_edge((0, 1, 4))       # two vertices in part 0
    with pytest.raises(InvalidParameterError):
        h.add_edge((0, 2))          # wrong arity


def test_is_hyperclique():
    h = UniformHypergraph(3, [1, 1, 1, 1])
    for e in [(0, 1, 2), (0, 1, 3), (0, 2, 3)]:
        h.add_edge(e)
    assert not h.is_hyperclique((0, 1, 2, 3))
    h.add_edge((1, 2, 3))
    assert h.is_hyperclique((0, 1, 2, 3))
    assert h.is_hyperclique((0, 1, 2))
