import random

import pytest
from helpers import automorphisms, connected_atlas, random_induced_subgraph

from iasi import (
    Graph,
    IntSet,
    Labeling,
    chain_report,
    complete_bipartite_graph,
    complete_graph,
    construct_strong,
    ConstructionSpec,
    cycle_graph,
    nourishing_number,
    path_graph,
    petersen_graph,
    verify,
    verify_concurrent_strong,
    verify_uniform,
)


def lab(**kv) -> Labeling:
    return Labeling({k: IntSet(v) for k, v in kv.items()})


K2 = Graph(["a", "b"], [("a", "b")])
P3 = Graph(["a", "b", "c"], [("a", "b"), ("b", "c")])


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def test_verify_strong_single_edge():
    report = verify(K2, lab(a=[1, 2], b=[3, 5]))
    assert report.is_strong and report.is_iasi
    assert report.strong_edges == [(("a", "b"), True)]
    assert report.witnesses == []


def test_verify_shared_difference_is_not_strong():
    report = verify(K2, lab(a=[1, 2], b=[3, 4]))
    assert report.is_iasi and not report.is_strong
    assert report.strong_edges == [(("a", "b"), False)]
    assert any("(a,b)" in w and "1" in w for w in report.witnesses)


def test_verify_path_with_interleaved_differences():
    # g_f(ab) = {0,1,2,3} and g_f(bc) = {1,2,3,4} stay distinct, and both
    # edges pair disjoint difference sets ({1} vs {2} twice).
    report = verify(P3, lab(a=[0, 1], b=[0, 2], c=[1, 2]))
    assert report.is_iasi
    assert report.is_strong


def test_verify_detects_vertex_collision():
    g = Graph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])
    report = verify(g, lab(a=[1, 2], b=[1, 2], c=[7]))
    assert not report.vertex_injective and not report.is_iasi and not report.is_strong
    assert any("share the label" in w for w in report.witnesses)


def test_verify_detects_edge_collision():
    # two disjoint edges whose sumsets coincide: {0}+{5} = {1}+{4}
    g = Graph(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
    report = verify(g, lab(a=[0], b=[5], c=[1], d=[4]))
    assert report.vertex_injective and not report.edge_injective
    assert any("share the sumset" in w for w in report.witnesses)


def test_verify_requires_total_labeling():
    with pytest.raises(ValueError):
        verify(K2, lab(a=[1]))


def test_verify_rejects_isolated_vertices():
    g = Graph(["a", "b", "c"], [("a", "b")])
    with pytest.raises(ValueError):
        verify(g, lab(a=[1], b=[2], c=[3]))


def test_verify_reports_every_violation():
    g = Graph(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
    report = verify(g, lab(a=[1, 2], b=[3, 4], c=[0, 7], d=[5, 12]))
    assert [ok for _, ok in report.strong_edges] == [False, False]
    assert len(report.witnesses) == 2


# ---------------------------------------------------------------------------
# uniformity
# ---------------------------------------------------------------------------

def test_uniform_single_edge():
    assert verify_uniform(K2, lab(a=[1, 2], b=[3, 5])) == (4, 2)


def test_uniform_star_of_singletons():
    star = Graph(["c", "x", "y"], [("c", "x"), ("c", "y")])
    assert verify_uniform(star, lab(c=[0], x=[1], y=[2])) == (1, 1)


def test_uniform_mixed_cardinalities():
    k, l = verify_uniform(P3, lab(a=[3], b=[0, 1], c=[5]))
    assert l is None
    assert k == 2


def test_uniform_requires_iasi():
    g = Graph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])
    with pytest.raises(ValueError):
        verify_uniform(g, lab(a=[1, 2], b=[1, 2], c=[7]))


# ---------------------------------------------------------------------------
# chains
# ---------------------------------------------------------------------------

def test_chain_all_singletons_is_empty():
    report = chain_report(P3, lab(a=[1], b=[2], c=[3]))
    assert report.max_chain == [] and report.max_chain_length == 0
    assert all(ok for _, ok in report.per_edge_relation)


def test_chain_of_triangle():
    g = Graph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])
    report = chain_report(g, lab(a=[0, 1], b=[0, 2], c=[0, 4]))
    assert report.max_chain_length == 3
    assert sorted(report.max_chain) == ["a", "b", "c"]


def test_chain_on_c4_with_repeated_differences():
    g = cycle_graph(4)
    f = lab(v0=[0, 1], v1=[0, 2], v2=[10, 11], v3=[20, 22])
    report = chain_report(g, f)
    assert report.max_chain_length == 2
    assert all(ok for _, ok in report.per_edge_relation)


def test_chain_at_least_clique_number_for_wide_labels():
    rng = random.Random(99)
    for g in rng.sample(list(connected_atlas(2, 5)), 12):
        f = construct_strong(g, ConstructionSpec(cardinalities=2))
        assert chain_report(g, f).max_chain_length >= nourishing_number(g)


# ---------------------------------------------------------------------------
# nourishing number
# ---------------------------------------------------------------------------

def test_nourishing_examples():
    assert nourishing_number(complete_graph(7)) == 7
    assert nourishing_number(complete_bipartite_graph(3, 2)) == 2
    assert nourishing_number(petersen_graph()) == 2
    with pytest.raises(ValueError):
        nourishing_number(Graph([]))


def test_nourishing_of_wheel():
    hub = Graph(
        ["h", "c0", "c1", "c2", "c3", "c4"],
        [(f"c{i}", f"c{(i + 1) % 5}") for i in range(5)] + [("h", f"c{i}") for i in range(5)],
    )
    assert nourishing_number(hub) == 3


# ---------------------------------------------------------------------------
# concurrent labelings
# ---------------------------------------------------------------------------

def test_concurrent_from_all_disjoint_differences():
    p4 = path_graph(4)
    # label the complete graph on the same vertices: all difference sets
    # pairwise disjoint, every spanning subgraph (p4 and its complement) strong
    f = construct_strong(complete_graph(4), ConstructionSpec(cardinalities=2))
    assert verify_concurrent_strong(p4, f)


def test_concurrent_fails_for_two_class_labeling():
    p4 = path_graph(4)
    f = construct_strong(p4, ConstructionSpec(cardinalities=2))
    # bipartite-style labeling reuses strides inside a class, so some
    # complement edge joins same-class vertices and is not strong
    assert not verify_concurrent_strong(p4, f)


def test_concurrent_rejects_isolated_complement():
    # complement of K2 is two isolated vertices
    with pytest.raises(ValueError):
        verify_concurrent_strong(K2, lab(a=[1, 2], b=[3, 5]))


def test_concurrent_c5():
    c5 = cycle_graph(5)
    f = construct_strong(complete_graph(5), ConstructionSpec(cardinalities=2))
    assert verify_concurrent_strong(c5, f)


def test_concurrent_holds_on_every_spanning_subgraph_pair():
    # four pairwise disjoint difference sets make every spanning subgraph of
    # K4 concurrent with its complementary subgraph, e.g. 2K2 against C4
    full = complete_graph(4)
    f = construct_strong(full, ConstructionSpec(cardinalities=2))
    two_k2 = Graph(full.vertices, [("v0", "v1"), ("v2", "v3")])
    c4 = Graph(full.vertices, [("v0", "v2"), ("v2", "v1"), ("v1", "v3"), ("v3", "v0")])
    assert verify_concurrent_strong(two_k2, f)
    assert verify_concurrent_strong(c4, f)


# ---------------------------------------------------------------------------
# heredity and symmetry
# ---------------------------------------------------------------------------

def test_strong_heredity_on_subgraphs():
    rng = random.Random(41)
    for g in rng.sample(list(connected_atlas(3, 6)), 20):
        f = construct_strong(g, ConstructionSpec(cardinalities=2))
        for _ in range(5):
            sub = random_induced_subgraph(rng, g)
            if sub is None:
                continue
            assert verify(sub, f.restricted(sub.vertices)).is_strong


def test_strong_heredity_on_spanning_subgraphs():
    rng = random.Random(43)
    for g in rng.sample(list(connected_atlas(4, 6)), 10):
        f = construct_strong(g, ConstructionSpec(cardinalities=2))
        edges = g.sorted_edges()
        for _ in range(5):
            keep = rng.sample(edges, rng.randint(1, len(edges)))
            sub = Graph(g.vertices, keep)
            live = [v for v in sub.vertices if sub.degree(v) > 0]
            sub = sub.induced(live)
            assert verify(sub, f.restricted(sub.vertices)).is_strong


def test_verdict_invariant_under_automorphism():
    for g in [cycle_graph(4), complete_graph(3), path_graph(4)]:
        f = construct_strong(g, ConstructionSpec(cardinalities=2))
        base = verify(g, f).is_strong
        for sigma in automorphisms(g):
            relabeled = Labeling({v: f[sigma[v]] for v in g.vertices})
            assert verify(g, relabeled).is_strong == base


# ---------------------------------------------------------------------------
# labeling object basics
# ---------------------------------------------------------------------------

def test_labeling_rejects_empty_label():
    with pytest.raises(ValueError):
        lab(a=[])


def test_labeling_restrict_and_scale():
    f = lab(a=[1, 2], b=[3, 5])
    r = f.restricted(["a"])
    assert r.vertices() == ["a"]
    s = f.scaled(3)
    assert s["a"] == IntSet([3, 6]) and s["b"] == IntSet([9, 15])
    with pytest.raises(ValueError):
        f.restricted(["zz"])


def test_labeling_immutable():
    f = lab(a=[1])
    with pytest.raises(AttributeError):
        f._assignment = {}


def test_reports_serialize_to_stable_sorted_json():
    import json

    f = lab(a=[0, 1], b=[0, 2], c=[1, 2])
    v = json.dumps(verify(P3, f).to_dict(), sort_keys=True)
    c = json.dumps(chain_report(P3, f).to_dict(), sort_keys=True)
    assert json.dumps(verify(P3, f).to_dict(), sort_keys=True) == v
    assert json.dumps(chain_report(P3, f).to_dict(), sort_keys=True) == c
    assert json.loads(c)["max_chain_length"] == 2
