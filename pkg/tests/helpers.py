"""Shared corpus builders and brute-force reference implementations.

The reference implementations here stay deliberately naive (permutation
scans, subset scans) so that the library's cleverer code has something
independent to be checked against.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, permutations

import networkx as nx

from iasi import Graph


def from_networkx(G, prefix: str = "v") -> Graph:
    return Graph(
        (f"{prefix}{u}" for u in G.nodes),
        ((f"{prefix}{u}", f"{prefix}{v}") for u, v in G.edges),
    )


@lru_cache(maxsize=None)
def connected_atlas(min_n: int, max_n: int) -> tuple[Graph, ...]:
    """All connected graphs with min_n..max_n vertices, one per isomorphism
    class, from the graph atlas."""
    assert max_n <= 7
    out = []
    for G in nx.graph_atlas_g():
        n = G.number_of_nodes()
        if min_n <= n <= max_n and n >= 1 and nx.is_connected(G):
            out.append(from_networkx(G))
    return tuple(out)


def random_graph(rng: random.Random, n: int, p: float, prefix: str = "v") -> Graph:
    """G(n, p) with isolated vertices patched by one extra edge each (except
    the degenerate single-vertex graph, which stays bare)."""
    names = [f"{prefix}{i}" for i in range(n)]
    if n == 1:
        return Graph(names)
    edges = {e for e in combinations(names, 2) if rng.random() < p}
    covered = {x for e in edges for x in e}
    for v in names:
        if v not in covered:
            w = rng.choice([u for u in names if u != v])
            edges.add((min(v, w), max(v, w)))
            covered.update((v, w))
    return Graph(names, edges)


def random_graph_corpus(count: int, seed: int, max_n: int = 50) -> list[Graph]:
    rng = random.Random(seed)
    probs = [0.1, 0.3, 0.6]
    return [
        random_graph(rng, rng.randint(2, max_n), probs[i % len(probs)])
        for i in range(count)
    ]


def brute_maximal_cliques(g: Graph) -> set[frozenset[str]]:
    """Maximal cliques by scanning every vertex subset.  Only for tiny graphs."""
    verts = g.sorted_vertices()
    cliques = [
        frozenset(sub)
        for size in range(1, len(verts) + 1)
        for sub in combinations(verts, size)
        if all(g.has_edge(u, v) for u, v in combinations(sub, 2))
    ]
    return {c for c in cliques if not any(c < d for d in cliques)}


def is_isomorphic_brute(g1: Graph, g2: Graph) -> bool:
    v1, v2 = g1.sorted_vertices(), g2.sorted_vertices()
    if len(v1) != len(v2) or len(g1.edges) != len(g2.edges):
        return False
    for perm in permutations(v2):
        mapping = dict(zip(v1, perm))
        if all(g2.has_edge(mapping[u], mapping[v]) for u, v in g1.edges):
            return True
    return False


def automorphisms(g: Graph) -> list[dict[str, str]]:
    verts = g.sorted_vertices()
    out = []
    for perm in permutations(verts):
        mapping = dict(zip(verts, perm))
        if all(g.has_edge(mapping[u], mapping[v]) for u, v in g.edges) and all(
            g.has_edge(u, v) == g.has_edge(mapping[u], mapping[v])
            for u, v in combinations(verts, 2)
        ):
            out.append(mapping)
    return out


def random_induced_subgraph(rng: random.Random, g: Graph, tries: int = 50) -> Graph | None:
    """A random induced subgraph with at least one edge and no isolated
    vertices, or None if the sampler keeps missing."""
    verts = g.sorted_vertices()
    for _ in range(tries):
        k = rng.randint(2, len(verts))
        sub = g.induced(rng.sample(verts, k))
        live = [v for v in sub.vertices if sub.degree(v) > 0]
        if len(live) >= 2:
            trimmed = sub.induced(live)
            if trimmed.edges:
                return trimmed
    return None
