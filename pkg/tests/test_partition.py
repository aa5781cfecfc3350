import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from superhypergraph import sparse as sl
from superhypergraph.core import Hypergraph, SuperHyperGraph, expand
from superhypergraph.io import load
from superhypergraph.partition import (Partition, balance_bounds, coarsen, cut_objective,
                                       degree_centrality, multilevel_partition, ncut_spectral,
                                       ncut_value, soed_objective, weighted_cut)

from conftest import DATA, random_hypergraph

EXAMPLE = SuperHyperGraph.build(["x1", "x2", "x3"], 1, [["x1", "x2"], ["x3"], ["x1"]],
                                [[["x1", "x2"], ["x3"]], [["x1"], ["x3"]]])


def exhaustive_cut(h, k, c):
    n = len(h.vertices)
    lo, hi = balance_bounds(n, k, c)
    best = np.inf
    for a in itertools.product(range(k), repeat=n):
        sizes = np.bincount(a, minlength=k)
        if sizes.min() >= lo and sizes.max() <= hi:
            best = min(best, cut_objective(h, a))
    return best


def exhaustive_ncut(h, k):
    n = len(h.vertices)
    best = np.inf
    for a in itertools.product(range(k), repeat=n - 1):
        a = (0,) + a
        if len(set(a)) == k:
            best = min(best, ncut_value(h, a))
    return best


# --- objectives ----------------------------------------------------------------

def test_objective_definitions():
    h = Hypergraph.from_edges(["a", "b", "c"], [["a", "b"], ["b", "c"], []])
    assert cut_objective(h, [0, 0, 1]) == 1.0
    assert soed_objective(h, [0, 0, 1]) == 2.0
    assert cut_objective(h, [0, 0, 0]) == 0.0 == soed_objective(h, [0, 0, 0])


def test_clustering_example_weighted_cut():
    h = expand(load(DATA / "clustering_example.json").shg)
    assert weighted_cut(h, [0, 0, 0, 1, 1]) == 4.0


def test_weighted_cut_needs_pairs():
    h = Hypergraph.from_edges(["a", "b", "c"], [["a", "b", "c"]])
    with pytest.raises(ValueError):
        weighted_cut(h, [0, 0, 1])


def test_uncovered_vertex():
    h = Hypergraph.from_edges(["a", "b"], [["a", "b"]])
    with pytest.raises(ValueError):
        cut_objective(h, Partition(("a",), (0,), 1))


# --- coarsening ----------------------------------------------------------------

def test_coarsen_merges_pair():
    h = Hypergraph.from_edges(["a", "b"], [["a", "b"]], [5.0])
    lv = coarsen(h)
    assert len(lv.coarse.vertices) == 1 and lv.mapping.tolist() == [0, 0]


def test_coarsen_edgeless_unchanged():
    h = Hypergraph.from_edges(["a", "b", "c"], [])
    lv = coarsen(h)
    assert lv.coarse == h and lv.mapping.tolist() == [0, 1, 2]


def test_coarsen_conserves_weight():
    h = random_hypergraph(np.random.default_rng(2), 6, 5)
    lv = coarsen(h)
    assert lv.vertex_weights.sum() == 6
    assert len(lv.coarse.vertices) <= int(np.ceil(6 * 0.6))
    assert abs(lv.coarse.weights.sum() - h.weights.sum()) < 1e-12
    assert sorted(set(lv.mapping.tolist())) == list(range(len(lv.coarse.vertices)))


# --- multilevel partitioning ----------------------------------------------------

def test_two_triangles_split_cleanly():
    V = list("abcdef")
    h = Hypergraph.from_edges(V, [["a", "b"], ["b", "c"], ["a", "c"],
                                  ["d", "e"], ["e", "f"], ["d", "f"]])
    p = multilevel_partition(h, 2, 1.0, seed=3)
    assert cut_objective(h, p) == 0.0
    assert sorted(map(sorted, p.parts())) == [["a", "b", "c"], ["d", "e", "f"]]


def test_expanded_example_singletons():
    p = multilevel_partition(EXAMPLE, 3, 1.0, seed=0, on_expanded=True)
    assert p.sizes().tolist() == [1, 1, 1]
    assert cut_objective(expand(EXAMPLE), p) == 3.0


def test_errors():
    h = Hypergraph.from_edges(["a", "b"], [["a", "b"]])
    with pytest.raises(ValueError):
        multilevel_partition(h, 3)
    with pytest.raises(ValueError):
        multilevel_partition(h, 1, c=0.5)
    with pytest.raises(ValueError):
        multilevel_partition(h, 2, objective="km1")


def test_larger_instance_coarsens_and_balances():
    h = random_hypergraph(np.random.default_rng(11), 120, 200, max_size=5)
    p = multilevel_partition(h, 4, 1.1, seed=1)
    lo, hi = balance_bounds(120, 4, 1.1)
    assert p.sizes().min() >= lo and p.sizes().max() <= hi
    assert any(r.level > 0 for r in p.history)


@given(st.integers(0, 2**32 - 1), st.sampled_from(["cut", "soed"]))
def test_partition_invariants(seed, objective):
    rng = np.random.default_rng(seed)
    h = random_hypergraph(rng, int(rng.integers(4, 30)), int(rng.integers(1, 25)))
    k = int(rng.integers(2, 4))
    n = len(h.vertices)
    lo, hi = balance_bounds(n, k, 1.2)
    if k * lo > n or k * hi < n:
        with pytest.raises(ValueError, match="infeasible"):
            multilevel_partition(h, k, 1.2, seed=seed, objective=objective)
        return
    p = multilevel_partition(h, k, 1.2, seed=seed, objective=objective)
    sizes = p.sizes()
    assert sizes.min() >= max(lo, 1) and sizes.max() <= hi
    for r in p.history:
        if r.violation_before == 0:
            assert r.after <= r.before + 1e-12
    recount = sum(e.weight * max(len({p.assignment[i] for i in m}) - 1, 0)
                  for e, m in zip(h.hyperedges, h.edge_indices()))
    assert abs(cut_objective(h, p) - recount) < 1e-9


def test_matches_exhaustive_on_small_instances():
    hits = 0
    for seed in range(20):
        h = random_hypergraph(np.random.default_rng(seed), 8, 5, weighted=False)
        got = cut_objective(h, multilevel_partition(h, 2, 1.2, seed=seed))
        best = exhaustive_cut(h, 2, 1.2)
        assert got >= best
        hits += got == best
    assert hits >= 16


@given(st.integers(0, 2**32 - 1))
def test_singleton_lift_partition(seed):
    h = random_hypergraph(np.random.default_rng(seed), 12, 8)
    a = multilevel_partition(h, 3, 1.2, seed=seed)
    b = multilevel_partition(SuperHyperGraph.from_hypergraph(h), 3, 1.2, seed=seed)
    assert a.assignment == b.assignment


# --- spectral clustering --------------------------------------------------------

def test_ncut_two_components():
    h = Hypergraph.from_edges(list("abcde"), [["a", "b"], ["b", "c"], ["d", "e"]])
    p = ncut_spectral(h, 2, seed=0)
    assert p.assignment == (0, 0, 0, 1, 1)
    assert ncut_value(h, p) == 0.0


def test_ncut_single_cluster():
    h = Hypergraph.from_edges(list("abc"), [["a", "b"], ["b", "c"], ["a", "c"]])
    assert ncut_spectral(h, 1).assignment == (0, 0, 0)


def test_ncut_barbell_cuts_bridge():
    V = list("abcdef")
    h = Hypergraph.from_edges(V, [["a", "b", "c"], ["d", "e", "f"], ["c", "d"]])
    p = ncut_spectral(h, 2, seed=5)
    assert p.assignment == (0, 0, 0, 1, 1, 1)
    assert abs(ncut_value(h, p) - exhaustive_ncut(h, 2)) < 1e-12


def test_ncut_close_to_exhaustive():
    # a zero-degree vertex alone has cut 0 and volume 0, which the oracle would
    # exploit for free, so every vertex gets at least one edge
    good = 0
    trials = 30
    for seed in range(trials):
        rng = np.random.default_rng(100 + seed)
        h = random_hypergraph(rng, 8, 7)
        while np.any(sl.degrees(h)[0] == 0):
            h = random_hypergraph(rng, 8, 7)
        got = ncut_value(h, ncut_spectral(h, 2, seed=seed))
        best = exhaustive_ncut(h, 2)
        assert got >= best - 1e-12
        good += got <= 1.1 * best + 1e-12
    assert good >= 0.8 * trials


def test_ncut_three_way_components():
    V = list("abcdefghi")
    h = Hypergraph.from_edges(V, [["a", "b", "c"], ["d", "e", "f"], ["g", "h", "i"]])
    p = ncut_spectral(h, 3, seed=2)
    assert p.assignment == (0, 0, 0, 1, 1, 1, 2, 2, 2)


# --- centrality -----------------------------------------------------------------

def test_centrality_example():
    assert degree_centrality(EXAMPLE).tolist() == [2.0, 1.0, 2.0]


def test_centrality_isolated_and_linear():
    shg = SuperHyperGraph.build(["a", "b", "c"], 1, [], [[["a", "b"]]], weights=[1.5])
    assert degree_centrality(shg).tolist() == [1.5, 1.5, 0.0]
    double = SuperHyperGraph.build(["a", "b", "c"], 1, [], [[["a", "b"]]], weights=[3.0])
    assert np.allclose(degree_centrality(double), 2 * degree_centrality(shg))
