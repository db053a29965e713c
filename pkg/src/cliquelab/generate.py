"""Seed-deterministic random instance generators.

Supported kinds: G(n, p) k-partite graphs, the same with planted
cross-part cliques, r-uniform random hypergraphs, and hypergraphs with
planted hypercliques.  Plants are chosen before any noise edge is drawn,
so noise can only add witnesses, never remove a plant.
"""

from dataclasses import dataclass
from itertools import combinations, product
from typing import List, Optional, Tuple, Union

from .core import KPartiteGraph, UniformHypergraph
from .errors import InvalidParameterError
from .rng import CounterRng

KINDS = ("gnp-kpartite", "planted-clique", "gnp-hypergraph",
         "planted-hyperclique")


@dataclass(frozen=True)
class GenSpec:
    """Instance recipe; the same spec always yields the same instance."""

    kind: str
    n_per_part: int
    k: int
    p: float
    seed: int
    r: Optional[int] = None      # uniformity, hypergraph kinds only
    plant_count: int = 0         # planted kinds only

    @property
    def part_sizes(self) -> Tuple[int, ...]:
        return (self.n_per_part,) * self.k

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidParameterError(f"unknown kind {self.kind!r}")
        if not 0.0 <= self.p <= 1.0:
            raise InvalidParameterError("p must be in [0, 1]")
        if self.n_per_part < 1 or self.k < 2:
            raise InvalidParameterError("need n_per_part >= 1 and k >= 2")
        hyper = self.kind in ("gnp-hypergraph", "planted-hyperclique")
        if hyper:
            if self.r is None or not 2 <= self.r <= self.k:
                raise InvalidParameterError("need 2 <= r <= k for hypergraphs")
        elif self.r is not None:
            raise InvalidParameterError("r only applies to hypergraph kinds")
        planted = self.kind in ("planted-clique", "planted-hyperclique")
        if planted and self.plant_count < 1:
            raise InvalidParameterError("planted kinds need plant_count >= 1")
        if not planted and self.plant_count != 0:
            raise InvalidParameterError("plant_count only applies to planted kinds")
        if planted and self.plant_count > self.n_per_part ** self.k:
            raise InvalidParameterError("plant_count exceeds distinct tuples")


@dataclass
class GeneratedInstance:
    spec: GenSpec
    graph: Union[KPartiteGraph, UniformHypergraph]
    witnesses: List[Tuple[int, ...]]     # the planted tuples, [] otherwise


def _plant_tuples(rng: CounterRng, g, count: int) -> List[Tuple[int, ...]]:
    """count distinct one-vertex-per-part tuples, drawn before any noise."""
    plants: List[Tuple[int, ...]] = []
    seen = set()
    while len(plants) < count:
        t = tuple(g.part_start[i] + rng.below(g.part_sizes[i])
                  for i in range(g.k))
        if t not in seen:
            seen.add(t)
            plants.append(t)
    return plants


def _gnp_rows(rng: CounterRng, G: KPartiteGraph, p: float) -> None:
    n = G.n_total
    for u in range(n):
        # only draw bits above u so each cross pair is decided once
        bits = rng.bernoulli_words(n, p)
        upper = bits & ~((1 << (u + 1)) - 1) & ~G.part_masks[G.part_of(u)]
        G.adjacency[u] |= upper
    for u in range(n):
        row = G.adjacency[u]
        while row:
            low = row & -row
            v = low.bit_length() - 1
            row ^= low
            G.adjacency[v] |= 1 << u


def generate(spec: GenSpec) -> GeneratedInstance:
    """Materialize a spec into a graph or hypergraph instance."""
    rng = CounterRng(spec.seed)
    if spec.kind in ("gnp-kpartite", "planted-clique"):
        G = KPartiteGraph(list(spec.part_sizes))
        witnesses: List[Tuple[int, ...]] = []
        if spec.kind == "planted-clique":
            witnesses = _plant_tuples(rng, G, spec.plant_count)
            for w in witnesses:
                for u, v in combinations(w, 2):
                    G.adjacency[u] |= 1 << v
                    G.adjacency[v] |= 1 << u
        _gnp_rows(rng, G, spec.p)
        return GeneratedInstance(spec=spec, graph=G, witnesses=witnesses)

    H = UniformHypergraph(spec.r, list(spec.part_sizes))
    witnesses = []
    if spec.kind == "planted-hyperclique":
        witnesses = _plant_tuples(rng, H, spec.plant_count)
        for w in witnesses:
            for sub in combinations(w, spec.r):
                H.add_edge(sub)
    for part_combo in combinations(range(H.k), spec.r):
        ranges = [H.part_vertices(i) for i in part_combo]
        for verts in product(*ranges):
            if rng.uniform() < spec.p:
                H.edges.add(tuple(sorted(verts)))
    return GeneratedInstance(spec=spec, graph=H, witnesses=witnesses)
