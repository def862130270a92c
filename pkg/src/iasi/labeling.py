"""Set-valued vertex labelings and their verification.

A labeling assigns a nonempty IntSet to every vertex.  It is an integer
additive set-indexer (IASI) when the vertex map and the induced edge map
uv -> f(u) + f(v) are both injective, and a *strong* IASI when additionally
every edge sumset has cardinality |f(u)| * |f(v)|.  The verifier recomputes
everything from scratch and reports every violation it finds, because the
reports double as evidence when checking structural theorems.

The chain machinery looks at difference sets: vertices whose difference
sets are nonempty and pairwise disjoint form a chain; the longest chain a
labeling admits is the clique number of an auxiliary disjointness graph.
Vertices with singleton labels (empty difference set) are excluded from
chains; with them every family would be vacuously disjoint and chain
lengths would stop measuring anything.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from . import graph as graphmod
from .errors import InternalCheckError, ParseError
from .graph import Graph, clique_number, complement
from .setalg import IntSet, diff_set, disjoint, is_strong_pair, parse_int_set, scale, sumset

__all__ = [
    "Labeling",
    "VerificationReport",
    "ChainReport",
    "verify",
    "verify_uniform",
    "chain_report",
    "nourishing_number",
    "verify_concurrent_strong",
    "read_labeling",
    "write_labeling",
]

Edge = tuple[str, str]


class Labeling:
    """Immutable map from vertex names to nonempty IntSets."""

    __slots__ = ("_assignment",)

    def __init__(self, assignment: Mapping[str, IntSet]):
        checked = {}
        for v, s in assignment.items():
            if not isinstance(s, IntSet):
                raise ValueError(f"label of {v!r} is not an IntSet")
            if len(s) == 0:
                raise ValueError(f"label of {v!r} is empty")
            checked[v] = s
        object.__setattr__(self, "_assignment", dict(sorted(checked.items())))

    def __setattr__(self, name, value):
        raise AttributeError("Labeling is immutable")

    def __getitem__(self, v: str) -> IntSet:
        return self._assignment[v]

    def __iter__(self) -> Iterator[str]:
        return iter(self._assignment)

    def __len__(self) -> int:
        return len(self._assignment)

    def __contains__(self, v) -> bool:
        return v in self._assignment

    def __eq__(self, other) -> bool:
        return isinstance(other, Labeling) and self._assignment == other._assignment

    def __hash__(self) -> int:
        return hash(tuple(self._assignment.items()))

    def __repr__(self) -> str:
        return f"Labeling({len(self._assignment)} vertices)"

    def items(self):
        return self._assignment.items()

    def vertices(self) -> list[str]:
        return list(self._assignment)

    def restricted(self, keep: Iterable[str]) -> "Labeling":
        ks = set(keep)
        missing = ks - self._assignment.keys()
        if missing:
            raise ValueError(f"labeling does not cover {sorted(missing)}")
        return Labeling({v: s for v, s in self._assignment.items() if v in ks})

    def scaled(self, r: int) -> "Labeling":
        """Elementwise scaling v -> r.f(v) of every label."""
        if r < 1:
            raise ValueError("scale factor must be at least 1")
        return Labeling({v: scale(r, s) for v, s in self._assignment.items()})

    def relabeled(self, mapping: Mapping[str, str]) -> "Labeling":
        new = {mapping[v]: s for v, s in self._assignment.items()}
        if len(new) != len(self._assignment):
            raise ValueError("relabeling is not injective")
        return Labeling(new)

    def max_element(self) -> int:
        return max(s.max for s in self._assignment.values())


@dataclass
class VerificationReport:
    """Outcome of checking one labeling against one graph.

    `strong_edges` lists, per edge, whether the sumset cardinality is the
    full product.  Every False anywhere is backed by at least one witness
    string naming the offending vertices or edges.
    """

    vertex_injective: bool
    edge_injective: bool
    strong_edges: list[tuple[Edge, bool]]
    is_iasi: bool
    is_strong: bool
    witnesses: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "vertex_injective": self.vertex_injective,
            "edge_injective": self.edge_injective,
            "strong_edges": [[list(e), ok] for e, ok in self.strong_edges],
            "is_iasi": self.is_iasi,
            "is_strong": self.is_strong,
            "witnesses": list(self.witnesses),
        }


@dataclass
class ChainReport:
    """Longest family of vertices with pairwise disjoint nonempty difference
    sets, plus the per-edge disjointness relation."""

    max_chain: list[str]
    max_chain_length: int
    per_edge_relation: list[tuple[Edge, bool]]

    def to_dict(self) -> dict:
        return {
            "max_chain": list(self.max_chain),
            "max_chain_length": self.max_chain_length,
            "per_edge_relation": [[list(e), ok] for e, ok in self.per_edge_relation],
        }


def _check_total(g: Graph, f: Labeling) -> None:
    missing = g.vertices - set(f.vertices())
    if missing:
        raise ValueError(f"labeling is partial; unlabeled vertices: {sorted(missing)}")


def _check_no_isolated(g: Graph, where: str = "graph") -> None:
    isolated = g.isolated_vertices()
    if isolated:
        raise ValueError(f"{where} has isolated vertices: {isolated}")


def verify(g: Graph, f: Labeling) -> VerificationReport:
    """Full recomputation of the IASI and strength conditions.

    Checks that f is injective as a set-valued map, that edge sumsets are
    pairwise distinct as sets, and that every edge is a strong pair.  All
    violations are collected, not just the first.
    """
    _check_total(g, f)
    _check_no_isolated(g)

    witnesses: list[str] = []
    verts = g.sorted_vertices()

    by_label: dict[IntSet, list[str]] = {}
    for v in verts:
        by_label.setdefault(f[v], []).append(v)
    vertex_injective = True
    for label, vs in sorted(by_label.items(), key=lambda kv: kv[1]):
        if len(vs) > 1:
            vertex_injective = False
            witnesses.append(f"vertices {', '.join(vs)} share the label {label}")

    edges = g.sorted_edges()
    edge_sums = {e: sumset(f[e[0]], f[e[1]]) for e in edges}
    by_sum: dict[IntSet, list[Edge]] = {}
    for e in edges:
        by_sum.setdefault(edge_sums[e], []).append(e)
    edge_injective = True
    for s, es in sorted(by_sum.items(), key=lambda kv: kv[1]):
        if len(es) > 1:
            edge_injective = False
            names = ", ".join(f"({u},{v})" for u, v in es)
            witnesses.append(f"edges {names} share the sumset {s}")

    diffs = {v: diff_set(f[v]) for v in verts}
    strong_edges: list[tuple[Edge, bool]] = []
    all_strong = True
    for u, v in edges:
        ok = is_strong_pair(f[u], f[v])
        strong_edges.append(((u, v), ok))
        if not ok:
            all_strong = False
            shared = diffs[u].intersection(diffs[v])
            witnesses.append(
                f"edge ({u},{v}) is not strong: |{f[u]}+{f[v]}| = {len(edge_sums[(u, v)])} "
                f"< {len(f[u]) * len(f[v])}; shared differences {{{','.join(map(str, shared))}}}"
            )

    is_iasi = vertex_injective and edge_injective
    return VerificationReport(
        vertex_injective=vertex_injective,
        edge_injective=edge_injective,
        strong_edges=strong_edges,
        is_iasi=is_iasi,
        is_strong=is_iasi and all_strong,
        witnesses=witnesses,
    )


def verify_uniform(g: Graph, f: Labeling) -> tuple[int | None, int | None]:
    """(k, l) uniformity of a valid IASI: k is the common edge-sumset
    cardinality if the edges agree on one, l the common vertex cardinality;
    None where they disagree."""
    report = verify(g, f)
    if not report.is_iasi:
        raise ValueError("labeling is not an IASI: " + "; ".join(report.witnesses))
    edge_cards = {len(sumset(f[u], f[v])) for u, v in g.edges}
    vertex_cards = {len(f[v]) for v in g.vertices}
    k = edge_cards.pop() if len(edge_cards) == 1 else None
    l = vertex_cards.pop() if len(vertex_cards) == 1 else None
    return k, l


def chain_report(g: Graph, f: Labeling) -> ChainReport:
    """Chain analysis of the difference sets of f.

    Builds the disjointness graph on the vertices with nonempty difference
    sets (edge iff disjoint) and reports its maximum clique, the longest
    chain, plus the disjointness relation on each edge of g.
    """
    _check_total(g, f)
    diffs = {v: diff_set(f[v]) for v in g.vertices}

    carriers = sorted(v for v in g.vertices if len(diffs[v]) > 0)
    aux_edges = [(u, v) for u, v in _pairs(carriers) if disjoint(diffs[u], diffs[v])]
    if carriers:
        aux = Graph(carriers, aux_edges)
        chain = list(graphmod.max_clique(aux))
    else:
        chain = []

    relation = [((u, v), disjoint(diffs[u], diffs[v])) for u, v in g.sorted_edges()]
    return ChainReport(max_chain=chain, max_chain_length=len(chain), per_edge_relation=relation)


def _pairs(items: list[str]):
    for i, a in enumerate(items):
        for b in items[i + 1:]:
            yield a, b


def nourishing_number(g: Graph) -> int:
    """The nourishing number of a strong-IASI-admitting graph: the clique
    number.  Every complete subgraph forces that many pairwise disjoint
    difference sets, and no longer chain is ever required."""
    if not g.vertices:
        raise ValueError("nourishing number of the empty graph is undefined")
    return clique_number(g)


def verify_concurrent_strong(g: Graph, f: Labeling) -> bool:
    """Whether one labeling is simultaneously strong on g and its complement.

    Computed as verify on both graphs, then cross-checked against the
    equivalent direct criterion: f injective, all difference sets pairwise
    disjoint, and both induced edge maps injective.
    """
    gbar = complement(g)
    _check_total(g, f)
    _check_no_isolated(g, "graph")
    _check_no_isolated(gbar, "complement")

    rep_g = verify(g, f)
    rep_gbar = verify(gbar, f)
    primary = rep_g.is_strong and rep_gbar.is_strong

    diffs = [diff_set(f[v]) for v in g.sorted_vertices()]
    all_disjoint = all(
        disjoint(diffs[i], diffs[j]) for i in range(len(diffs)) for j in range(i + 1, len(diffs))
    )
    labels = [f[v] for v in g.sorted_vertices()]
    injective = len(set(labels)) == len(labels)
    direct = injective and all_disjoint and rep_g.edge_injective and rep_gbar.edge_injective
    if primary != direct:
        raise InternalCheckError(
            "concurrent-strong criteria disagree; this falsifies the pairwise-disjointness restatement"
        )
    return primary


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

def read_labeling(text: str) -> Labeling:
    """Parse `name: {a,b,c}` lines; `#` comments and blank lines allowed."""
    assignment: dict[str, IntSet] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        name, sep, rest = raw.partition(":")
        if not sep:
            raise ParseError("expected 'name: {elements}'", line=lineno)
        name = name.strip()
        if not name or any(c.isspace() for c in name):
            raise ParseError(f"bad vertex name {name!r}", line=lineno)
        if name in assignment:
            raise ParseError(f"duplicate label for vertex {name!r}", line=lineno)
        label = parse_int_set(rest, line=lineno, col_offset=len(raw) - len(rest))
        if len(label) == 0:
            raise ParseError(f"label of {name!r} is empty", line=lineno)
        assignment[name] = label
    return Labeling(assignment)


def write_labeling(f: Labeling) -> str:
    return "\n".join(f"{v}: {s}" for v, s in f.items()) + "\n"
