"""Finite simple graphs and the operations studied by the library.

Vertices are opaque string names; a graph is an immutable (vertices, edges)
pair.  Besides the five binary operations (union, intersection, join,
Cartesian product, corona) and complement, the module houses the clique
machinery: pivoted Bron-Kerbosch enumeration of maximal cliques over a
degeneracy ordering, the clique number, and a triangle test.  Worst-case
exponential clique search is accepted; the intended inputs are desk scale.
"""

from __future__ import annotations

import functools
from itertools import combinations
from typing import Callable, Iterable, Mapping

from .errors import ParseError

__all__ = [
    "Graph",
    "union",
    "intersection",
    "join",
    "complement",
    "cartesian_product",
    "corona",
    "maximal_cliques",
    "clique_number",
    "max_clique",
    "is_triangle_free",
    "read_graph",
    "write_graph",
    "complete_graph",
    "path_graph",
    "cycle_graph",
    "star_graph",
    "complete_bipartite_graph",
    "petersen_graph",
    "PRODUCT_SEP",
    "CORONA_SEP",
]

PRODUCT_SEP = "×"
CORONA_SEP = "⊙"


def _check_name(name: str) -> str:
    if not isinstance(name, str) or not name:
        raise ValueError(f"vertex name must be a non-empty string, got {name!r}")
    if any(c.isspace() for c in name):
        raise ValueError(f"vertex name {name!r} contains whitespace")
    return name


def _norm_edge(u: str, v: str) -> tuple[str, str]:
    if u == v:
        raise ValueError(f"self-loop at vertex {u!r}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable finite simple graph with string vertex identifiers."""

    __slots__ = ("vertices", "edges", "_adj")

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str]] = ()):
        vs = frozenset(_check_name(v) for v in vertices)
        es = set()
        adj: dict[str, set[str]] = {v: set() for v in vs}
        for u, v in edges:
            e = _norm_edge(u, v)
            for x in e:
                if x not in vs:
                    raise ValueError(f"edge endpoint {x!r} is not a declared vertex")
            es.add(e)
            adj[e[0]].add(e[1])
            adj[e[1]].add(e[0])
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", frozenset(es))
        object.__setattr__(self, "_adj", {v: frozenset(ns) for v, ns in adj.items()})

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[str, str]], isolated: Iterable[str] = ()) -> "Graph":
        edges = list(edges)
        vs = {x for e in edges for x in e} | set(isolated)
        return cls(vs, edges)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"Graph(|V|={len(self.vertices)}, |E|={len(self.edges)})"

    def neighbors(self, v: str) -> frozenset[str]:
        return self._adj[v]

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def has_edge(self, u: str, v: str) -> bool:
        return u != v and _norm_edge(u, v) in self.edges

    def sorted_vertices(self) -> list[str]:
        return sorted(self.vertices)

    def sorted_edges(self) -> list[tuple[str, str]]:
        return sorted(self.edges)

    def isolated_vertices(self) -> list[str]:
        return sorted(v for v in self.vertices if not self._adj[v])

    def induced(self, keep: Iterable[str]) -> "Graph":
        """Subgraph induced by the given vertices."""
        ks = set(keep)
        missing = ks - self.vertices
        if missing:
            raise ValueError(f"not vertices of this graph: {sorted(missing)}")
        return Graph(ks, (e for e in self.edges if e[0] in ks and e[1] in ks))

    def relabel(self, mapping: Mapping[str, str] | Callable[[str], str]) -> "Graph":
        """New graph with every vertex renamed through `mapping` (must stay injective)."""
        f = mapping if callable(mapping) else mapping.__getitem__
        new = {v: _check_name(f(v)) for v in self.vertices}
        if len(set(new.values())) != len(new):
            raise ValueError("relabeling is not injective")
        return Graph(new.values(), ((new[u], new[v]) for u, v in self.edges))

    def rename(self, prefix: str) -> "Graph":
        """Prefix every vertex name; the stock way to force disjointness before a union."""
        return self.relabel(lambda v: prefix + v)

    def components(self) -> list[list[str]]:
        """Connected components, each sorted, listed by smallest member."""
        seen: set[str] = set()
        out = []
        for root in self.sorted_vertices():
            if root in seen:
                continue
            comp, stack = {root}, [root]
            while stack:
                for w in self._adj[stack.pop()]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            out.append(sorted(comp))
        return out


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def union(g1: Graph, g2: Graph) -> Graph:
    """Name-based union: shared names identify shared vertices."""
    return Graph(g1.vertices | g2.vertices, g1.edges | g2.edges)


def intersection(g1: Graph, g2: Graph) -> Graph:
    return Graph(g1.vertices & g2.vertices, g1.edges & g2.edges)


def join(g1: Graph, g2: Graph) -> Graph:
    """Both graphs plus every cross edge.  Vertex names must not overlap."""
    clash = g1.vertices & g2.vertices
    if clash:
        raise ValueError(f"join requires disjoint vertex names; shared: {sorted(clash)}")
    cross = ((u, v) for u in g1.vertices for v in g2.vertices)
    return Graph(g1.vertices | g2.vertices, list(g1.edges) + list(g2.edges) + list(cross))


def complement(g: Graph) -> Graph:
    vs = g.sorted_vertices()
    return Graph(vs, (e for e in combinations(vs, 2) if e not in g.edges))


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Box product: (u1,u2) ~ (v1,v2) iff equal in one coordinate and
    adjacent in the other.  |V| = p1*p2 and |E| = p1*q2 + p2*q1."""
    name = {}
    for u in g1.vertices:
        for v in g2.vertices:
            name[(u, v)] = f"{u}{PRODUCT_SEP}{v}"
    if len(set(name.values())) != len(name):
        raise ValueError("product vertex naming collides; rename inputs first")
    edges = []
    for u in g1.vertices:
        for a, b in g2.edges:
            edges.append((name[(u, a)], name[(u, b)]))
    for a, b in g1.edges:
        for v in g2.vertices:
            edges.append((name[(a, v)], name[(b, v)]))
    return Graph(name.values(), edges)


def corona(g1: Graph, g2: Graph) -> Graph:
    """One copy of g1; for its i-th vertex, a fresh copy of g2 fully joined
    to that vertex.  |V| = p1*(1+p2) and |E| = q1 + p1*q2 + p1*p2."""
    roots = g1.sorted_vertices()
    vertices = set(g1.vertices)
    edges = list(g1.edges)
    for i, u in enumerate(roots):
        copy = {w: f"{u}{CORONA_SEP}{i}:{w}" for w in g2.vertices}
        if vertices & set(copy.values()):
            raise ValueError("corona vertex naming collides; rename inputs first")
        vertices |= set(copy.values())
        edges.extend((copy[a], copy[b]) for a, b in g2.edges)
        edges.extend((u, cw) for cw in copy.values())
    return Graph(vertices, edges)


# ---------------------------------------------------------------------------
# cliques
# ---------------------------------------------------------------------------

def _degeneracy_order(g: Graph) -> list[str]:
    """Repeatedly peel a minimum-degree vertex (ties by name)."""
    degs = {v: g.degree(v) for v in g.vertices}
    live = dict(degs)
    order = []
    while live:
        v = min(live, key=lambda x: (live[x], x))
        order.append(v)
        del live[v]
        for w in g.neighbors(v):
            if w in live:
                live[w] -= 1
    return order


def maximal_cliques(g: Graph) -> list[tuple[str, ...]]:
    """All maximal cliques via pivoted Bron-Kerbosch over a degeneracy
    ordering.  Deterministic: each clique sorted, cliques listed sorted."""
    adj = g._adj
    found: list[tuple[str, ...]] = []

    def expand(r: set[str], p: set[str], x: set[str]) -> None:
        if not p and not x:
            found.append(tuple(sorted(r)))
            return
        pivot = max(sorted(p | x), key=lambda u: len(adj[u] & p))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p.remove(v)
            x.add(v)
    order = _degeneracy_order(g)
    later = {v: set(order[i + 1:]) for i, v in enumerate(order)}
    earlier: set[str] = set()
    for v in order:
        expand({v}, set(adj[v] & later[v]), set(adj[v] & earlier))
        earlier.add(v)
    return sorted(found)


@functools.lru_cache(maxsize=8192)
def _clique_number_cached(g: Graph) -> int:
    return max(len(c) for c in maximal_cliques(g))


def clique_number(g: Graph) -> int:
    """Order of a largest clique.  Memoized; graphs are immutable."""
    if not g.vertices:
        raise ValueError("clique number of the empty graph is undefined")
    return _clique_number_cached(g)


def max_clique(g: Graph) -> tuple[str, ...]:
    """One largest clique, the lexicographically least among them."""
    if not g.vertices:
        raise ValueError("empty graph has no clique")
    cliques = maximal_cliques(g)
    best = max(len(c) for c in cliques)
    return min(c for c in cliques if len(c) == best)


def is_triangle_free(g: Graph) -> bool:
    return all(not (g._adj[u] & g._adj[v]) for u, v in g.edges)


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

def read_graph(text: str) -> Graph:
    """Parse the edge-list format.

    Lines: `# comment`, optional `p <n> <m>` header, `v <name>` vertex
    declarations, and `u v` edges.  A header, when present, must match the
    final counts.
    """
    vertices: set[str] = set()
    edges: list[tuple[str, str]] = []
    header: tuple[int, int] | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if header is not None:
                raise ParseError("duplicate p header", line=lineno)
            if len(tokens) != 3 or not tokens[1].isdigit() or not tokens[2].isdigit():
                raise ParseError("malformed header, expected 'p <n> <m>'", line=lineno)
            header = (int(tokens[1]), int(tokens[2]))
        elif tokens[0] == "v":
            if len(tokens) != 2:
                raise ParseError("malformed vertex line, expected 'v <name>'", line=lineno)
            vertices.add(tokens[1])
        elif len(tokens) == 2:
            if tokens[0] == tokens[1]:
                raise ParseError(f"self-loop at {tokens[0]!r}", line=lineno)
            vertices.update(tokens)
            edges.append((tokens[0], tokens[1]))
        else:
            raise ParseError(f"unrecognized line {line!r}", line=lineno)
    try:
        g = Graph(vertices, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    if header is not None and header != (len(g.vertices), len(g.edges)):
        raise ParseError(
            f"header says {header[0]} vertices / {header[1]} edges, "
            f"file has {len(g.vertices)} / {len(g.edges)}"
        )
    return g


def write_graph(g: Graph) -> str:
    """Deterministic writer: header, sorted vertex lines, sorted edges."""
    lines = [f"p {len(g.vertices)} {len(g.edges)}"]
    lines.extend(f"v {v}" for v in g.sorted_vertices())
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# stock families (test and CLI fodder)
# ---------------------------------------------------------------------------

def _names(n: int, prefix: str) -> list[str]:
    return [f"{prefix}{i}" for i in range(n)]


def complete_graph(n: int, prefix: str = "v") -> Graph:
    vs = _names(n, prefix)
    return Graph(vs, combinations(vs, 2))


def path_graph(n: int, prefix: str = "v") -> Graph:
    vs = _names(n, prefix)
    return Graph(vs, zip(vs, vs[1:]))


def cycle_graph(n: int, prefix: str = "v") -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    vs = _names(n, prefix)
    return Graph(vs, list(zip(vs, vs[1:])) + [(vs[-1], vs[0])])


def star_graph(leaves: int, prefix: str = "v") -> Graph:
    vs = _names(leaves + 1, prefix)
    return Graph(vs, ((vs[0], w) for w in vs[1:]))


def complete_bipartite_graph(m: int, n: int) -> Graph:
    xs = _names(m, "x")
    ys = _names(n, "y")
    return Graph(xs + ys, ((x, y) for x in xs for y in ys))


def petersen_graph() -> Graph:
    outer = _names(5, "o")
    inner = _names(5, "i")
    edges = [(outer[i], outer[(i + 1) % 5]) for i in range(5)]
    edges += [(outer[i], inner[i]) for i in range(5)]
    edges += [(inner[i], inner[(i + 2) % 5]) for i in range(5)]
    return Graph(outer + inner, edges)
