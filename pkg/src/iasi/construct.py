"""Constructive strong set-indexer labelings.

The existence of strong labelings becomes an explicit recipe:

1. Properly color the graph (BFS-order greedy; in clique-cover mode the
   greedy run is seeded with one maximum clique so the color count can
   witness the clique number on well-structured inputs).
2. Give color class j a stride d_j, the j-th prime exceeding every
   requested label cardinality.  A vertex of cardinality c gets the
   arithmetic progression {b, b+d_j, ..., b+(c-1)d_j}; its difference set
   is contained in {d_j, 2d_j, ...} with multipliers below every stride,
   so difference sets of distinct classes are disjoint by unique
   factorization and every (necessarily cross-class) edge is strong.
3. Draw the base offsets b from a greedily built Sidon set, scaled past
   the largest possible in-label spread: pairwise-distinct base sums make
   the edge-sumset minima pairwise distinct, which forces the edge map to
   be injective, and distinct bases make the vertex map injective.

Scaled copies do the same job for products and coronas: multiplying a
strong labeling by r keeps it strong, and multiplying different copies by
different primes larger than every label element keeps the copies'
difference sets disjoint from each other and from the host's.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import InternalCheckError
from .graph import CORONA_SEP, PRODUCT_SEP, Graph, cartesian_product, corona, max_clique
from .labeling import Labeling, verify
from .setalg import IntSet, diff_set, disjoint, scale, sumset

__all__ = [
    "ConstructionSpec",
    "construct_strong",
    "construct_strong_traced",
    "construct_for_product",
    "construct_for_corona",
    "sidon_sequence",
    "primes_above",
]

MODES = ("coloring", "clique-cover")


@dataclass(frozen=True)
class ConstructionSpec:
    """What to build: per-vertex label sizes, a seed, and a strategy.

    `cardinalities` is either a single size applied uniformly or a
    per-vertex map; every size must be at least 1.  The seed rotates the
    BFS roots, so distinct seeds explore different (all valid) labelings
    while equal seeds reproduce byte-identical output.
    """

    cardinalities: int | Mapping[str, int] = 2
    seed: int = 0
    mode: str = "coloring"

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if isinstance(self.cardinalities, int):
            if self.cardinalities < 1:
                raise ValueError("cardinality must be at least 1")
        else:
            for v, c in self.cardinalities.items():
                if c < 1:
                    raise ValueError(f"cardinality of {v!r} must be at least 1")

    def resolve(self, g: Graph) -> dict[str, int]:
        if isinstance(self.cardinalities, int):
            return {v: self.cardinalities for v in g.vertices}
        missing = g.vertices - self.cardinalities.keys()
        if missing:
            raise ValueError(f"no cardinality given for {sorted(missing)}")
        return {v: self.cardinalities[v] for v in g.vertices}


# ---------------------------------------------------------------------------
# number-theoretic helpers
# ---------------------------------------------------------------------------

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_above(floor: int, count: int) -> list[int]:
    """The first `count` primes strictly greater than `floor`."""
    out: list[int] = []
    n = floor
    while len(out) < count:
        n += 1
        if _is_prime(n):
            out.append(n)
    return out


def sidon_sequence(count: int) -> list[int]:
    """Greedy Sidon set starting at 0: each new term is the least value
    keeping all pairwise sums (repeats allowed) distinct."""
    terms: list[int] = []
    sums: set[int] = set()
    candidate = 0
    while len(terms) < count:
        new_sums = {candidate + t for t in terms} | {2 * candidate}
        if not (new_sums & sums):
            terms.append(candidate)
            sums |= new_sums
        candidate += 1
    return terms


# ---------------------------------------------------------------------------
# coloring
# ---------------------------------------------------------------------------

def _bfs_order(g: Graph, seed: int) -> list[str]:
    """Vertices in BFS order, component by component; the seed rotates which
    vertex of each component is the root."""
    order: list[str] = []
    for comp in g.components():
        root = comp[seed % len(comp)]
        seen = {root}
        queue = [root]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in sorted(g.neighbors(v)):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def _greedy_coloring(g: Graph, seed: int, preset: dict[str, int] | None = None) -> dict[str, int]:
    """Smallest-available greedy coloring in BFS order.

    On bipartite graphs BFS order makes this the parity 2-coloring.  A
    preset (used by clique-cover mode) pins chosen vertices to fixed colors
    before the sweep.
    """
    colors: dict[str, int] = dict(preset or {})
    for v in _bfs_order(g, seed):
        if v in colors:
            continue
        taken = {colors[w] for w in g.neighbors(v) if w in colors}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    return colors


def _color_classes(g: Graph, spec: ConstructionSpec) -> list[list[str]]:
    if spec.mode == "clique-cover" and g.edges:
        seed_clique = max_clique(g)
        preset = {v: i for i, v in enumerate(seed_clique)}
        colors = _greedy_coloring(g, spec.seed, preset)
    else:
        colors = _greedy_coloring(g, spec.seed)
    t = max(colors.values()) + 1
    classes: list[list[str]] = [[] for _ in range(t)]
    for v in sorted(colors):
        classes[colors[v]].append(v)
    return classes


# ---------------------------------------------------------------------------
# the main construction
# ---------------------------------------------------------------------------

def construct_strong_traced(g: Graph, spec: ConstructionSpec) -> tuple[Labeling, dict]:
    """Build a strong labeling and an audit trace (classes, strides, offsets).

    Always succeeds on a finite simple graph without isolated vertices; the
    result is self-verified before being returned.
    """
    if not g.vertices:
        raise ValueError("cannot label the empty graph")
    isolated = g.isolated_vertices()
    if isolated:
        raise ValueError(f"graph has isolated vertices: {isolated}")

    cards = spec.resolve(g)
    classes = _color_classes(g, spec)
    max_card = max(cards.values())
    strides = primes_above(max_card, len(classes))

    # Base offsets: one Sidon term per vertex (in sorted order), scaled so a
    # whole arithmetic progression fits strictly between consecutive bases.
    verts = g.sorted_vertices()
    separation = strides[-1] * max_card
    sidon = sidon_sequence(len(verts))
    base = {v: sidon[i] * separation for i, v in enumerate(verts)}

    stride_of: dict[str, int] = {}
    for j, cls in enumerate(classes):
        for v in cls:
            stride_of[v] = strides[j]

    assignment = {
        v: IntSet(base[v] + i * stride_of[v] for i in range(cards[v])) for v in verts
    }
    labeling = Labeling(assignment)

    report = verify(g, labeling)
    if not report.is_strong:
        raise InternalCheckError(
            "constructed labeling failed verification: " + "; ".join(report.witnesses)
        )

    trace = {
        "mode": spec.mode,
        "seed": spec.seed,
        "classes": [list(cls) for cls in classes],
        "strides": strides,
        "offsets": {v: base[v] for v in verts},
        "cardinalities": {v: cards[v] for v in verts},
        "max_label_element": labeling.max_element(),
    }
    return labeling, trace


def construct_strong(g: Graph, spec: ConstructionSpec | None = None) -> Labeling:
    return construct_strong_traced(g, spec or ConstructionSpec())[0]


# ---------------------------------------------------------------------------
# scaled copies for products and coronas
# ---------------------------------------------------------------------------

def _is_strong_lenient(g: Graph, f: Labeling) -> bool:
    """Strongness check that tolerates edgeless graphs (a bare vertex has no
    isolated-vertex story to enforce when it is only an operand)."""
    if not g.vertices <= set(f.vertices()):
        return False
    labels = [f[v] for v in g.sorted_vertices()]
    if len(set(labels)) != len(labels):
        return False
    sums = [sumset(f[u], f[v]) for u, v in g.sorted_edges()]
    if len(set(sums)) != len(sums):
        return False
    return all(disjoint(diff_set(f[u]), diff_set(f[v])) for u, v in g.edges)


def _verify_output(g: Graph, f: Labeling, what: str) -> None:
    if not _is_strong_lenient(g, f):
        raise InternalCheckError(f"{what} labeling failed self-verification")


def construct_for_product(g1: Graph, f1: Labeling, g2: Graph) -> Labeling:
    """Strong labeling of the Cartesian product from a strong labeling of g1.

    Copy i of g1 (one per vertex of g2, in sorted order) carries r_i . f1
    plus a per-copy offset: r_0 = 1 and the rest are primes exceeding every
    label element, so difference sets of distinct copies are disjoint and
    the product edges between corresponding vertices are strong.  Offsets
    are Sidon multiples of a block size no sumset can straddle, which keeps
    both vertex and edge maps injective across copies.
    """
    if not g1.vertices or not g2.vertices:
        raise ValueError("product factors must both be nonempty")
    if not _is_strong_lenient(g1, f1):
        raise ValueError("f1 is not a strong labeling of g1")

    copies = g2.sorted_vertices()
    m = max(f1[v].max for v in g1.vertices)
    multipliers = [1] + primes_above(max(m, 1), len(copies) - 1)
    block = 2 * multipliers[-1] * max(m, 1) + 1
    offsets = [s * block for s in sidon_sequence(len(copies))]

    assignment: dict[str, IntSet] = {}
    for i, c in enumerate(copies):
        for v in g1.vertices:
            assignment[f"{v}{PRODUCT_SEP}{c}"] = scale(multipliers[i], f1[v]).translated(offsets[i])
    out = Labeling(assignment)

    _verify_output(cartesian_product(g1, g2), out, "product")
    return out


def construct_for_corona(g1: Graph, f1: Labeling, g2: Graph, f2: Labeling) -> Labeling:
    """Strong labeling of the corona from strong labelings of both factors.

    g1 keeps f1.  The copy of g2 hung on the i-th vertex of g1 carries
    r_i . f2 shifted into its own block: the r_i are primes above every
    label element (so copy difference sets avoid the host's and each
    other's), and blocks are odd multiples of a common size for the copies
    versus even multiples for their internal sums, so no two edge sumsets
    can coincide across contexts.
    """
    if not g1.vertices or not g2.vertices:
        raise ValueError("corona factors must both be nonempty")
    if not _is_strong_lenient(g1, f1):
        raise ValueError("f1 is not a strong labeling of g1")
    if not _is_strong_lenient(g2, f2):
        raise ValueError("f2 is not a strong labeling of g2")

    roots = g1.sorted_vertices()
    m = max(max(f1[v].max for v in g1.vertices), max(f2[w].max for w in g2.vertices))
    multipliers = primes_above(m, len(roots))
    block = 2 * multipliers[-1] * max(m, 1) + 1

    assignment: dict[str, IntSet] = {v: f1[v] for v in g1.vertices}
    for i, u in enumerate(roots):
        offset = (2 * i + 1) * block
        for w in g2.vertices:
            assignment[f"{u}{CORONA_SEP}{i}:{w}"] = scale(multipliers[i], f2[w]).translated(offset)
    out = Labeling(assignment)

    _verify_output(corona(g1, g2), out, "corona")
    return out
