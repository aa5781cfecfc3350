import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from superhypergraph.core import (Hypergraph, Leaf, Nest, Superedge, SuperHyperGraph,
                                  canonicalize, expand, expand_element, expand_superedge,
                                  iter_leaves, nested, serialize, to_plain, validate)

from conftest import random_shg

EXAMPLE = SuperHyperGraph.build(["x1", "x2", "x3"], 1, [["x1", "x2"], ["x3"], ["x1"]],
                                [[["x1", "x2"], ["x3"]], [["x1"], ["x3"]]])


def test_canonicalize_leaf_is_identity():
    assert canonicalize(Leaf("x1")) == Leaf("x1")


def test_canonicalize_dedupes_and_sorts():
    e = nested(["x2", "x1", "x1"])
    assert canonicalize(e) == Nest((Leaf("x1"), Leaf("x2")))


def test_canonicalize_nested_order():
    e = nested([["x2", "x1"], ["x1"]])
    assert canonicalize(e) == nested([["x1"], ["x1", "x2"]])


def test_rank():
    assert Leaf("a").rank == 0
    assert Nest(()).rank == 1
    assert nested([["a"], "b"]).rank == 2


def test_expand_element_examples():
    assert expand_element(Leaf("x1")) == {"x1"}
    assert expand_element(nested([["x1", "x2"], ["x3"]])) == {"x1", "x2", "x3"}
    assert expand_element(Nest(())) == frozenset()


def test_expand_nested_example():
    h = expand(EXAMPLE)
    assert [set(e.members) for e in h.hyperedges] == [{"x1", "x2", "x3"}, {"x1", "x3"}]
    assert h.vertices == ("x1", "x2", "x3")


def test_expand_level_two():
    shg = SuperHyperGraph.build(["x1", "x2", "x3"], 2, [],
                                [[[["x1"], ["x2"]], [["x3"]]]])
    assert set(expand(shg).hyperedges[0].members) == {"x1", "x2", "x3"}


def test_singleton_lift_recovers_hypergraph():
    h = Hypergraph.from_edges(["a", "b", "c"], [["a", "b"], ["b", "c"], ["a", "b"]], [1, 2, 3])
    back = expand(SuperHyperGraph.from_hypergraph(h))
    assert back == h


def test_validate_example_is_clean():
    assert validate(EXAMPLE) == []


def test_validate_rank_violation():
    shg = SuperHyperGraph.build(["x1"], 1, [[["x1"]]], [])
    problems = validate(shg)
    assert len(problems) == 1 and "rank 2" in problems[0]


def test_validate_negative_weight():
    shg = SuperHyperGraph.build(["x1"], 1, [], [[["x1"]]], weights=[-1.0])
    problems = validate(shg)
    assert len(problems) == 1 and "negative weight" in problems[0]


def test_validate_unknown_leaf():
    shg = SuperHyperGraph.build(["x1"], 1, [], [[["x9"]]])
    assert any("unknown leaf" in p for p in validate(shg))


def test_parallel_superedges_kept():
    shg = SuperHyperGraph.build(["a", "b"], 1, [], [[["a", "b"]], [["a"], ["b"]]])
    h = expand(shg)
    assert len(h.hyperedges) == 2
    assert [e.id for e in h.hyperedges] == [0, 1]


def test_empty_superedge_expands_empty():
    shg = SuperHyperGraph.build(["a"], 1, [], [[]])
    assert expand(shg).hyperedges[0].members == ()


def test_hypergraph_rejects_unknown_member():
    try:
        Hypergraph.from_edges(["a"], [["b"]])
    except ValueError as exc:
        assert "unknown" in str(exc)
    else:
        raise AssertionError("expected ValueError")


# nested values as plain python data
plain = st.recursive(st.sampled_from(["a", "b", "c", "d"]),
                     lambda inner: st.lists(inner, max_size=3), max_leaves=12)


@given(plain)
def test_canonicalize_idempotent(obj):
    e = nested(obj)
    c = canonicalize(e)
    assert canonicalize(c) == c
    assert c.rank == e.rank or isinstance(e, Leaf)


@given(plain)
def test_canonical_form_ignores_order_and_duplicates(obj):
    e = nested(obj)
    if isinstance(e, Nest):
        shuffled = Nest(tuple(reversed(e.children)) + e.children[:1])
        assert canonicalize(shuffled) == canonicalize(e)
        assert serialize(shuffled) == serialize(e)


@given(plain)
def test_expand_matches_leaf_walk(obj):
    e = nested(obj)
    assert expand_element(e) == set(iter_leaves(e))
    assert expand_element(canonicalize(e)) == expand_element(e)


@given(plain)
def test_plain_round_trip(obj):
    c = canonicalize(nested(obj))
    assert canonicalize(nested(to_plain(c))) == c


@given(st.integers(0, 2**32 - 1))
def test_expansion_is_union_of_member_expansions(seed):
    rng = np.random.default_rng(seed)
    shg = random_shg(rng, 6, 4, 3)
    h = expand(shg)
    assert len(h.hyperedges) == len(shg.superedges)
    for e, he in zip(shg.superedges, h.hyperedges):
        union = set()
        for m in e.members:
            union |= expand_element(m)
        assert set(he.members) == union == expand_superedge(e)
        assert he.weight == e.weight and he.id == e.id


def test_superedge_members_canonical():
    e = Superedge((nested(["b", "a"]), nested(["a", "b"])), 1.0, 0)
    shg = SuperHyperGraph(("a", "b"), 1, (), (e,))
    assert shg.superedges[0].members == (Nest((Leaf("a"), Leaf("b"))),)
