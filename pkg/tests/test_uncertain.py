import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from superhypergraph import sparse as sl
from superhypergraph.core import Hypergraph
from superhypergraph.shgnn import LayerParams, hgnn_convolve
from superhypergraph.uncertain import (AnnotatedGraph, ContradictionTable, FuzzyEdge,
                                       FuzzyHypergraph, FuzzyMembership, FuzzySubset,
                                       NeutrosophicTriplet, PartitionedMembership, PGNNLayer,
                                       PlithogenicAnnotation, Rule, RuleLayer, c_cut,
                                       fgnn_forward, fhgnn_convolve, firing_strengths,
                                       fuzzy_degrees, fuzzy_graph, fuzzy_incidence,
                                       fuzzy_laplacian, height, neutrosophic_from_fuzzy,
                                       neutrosophic_graph, ngnn_forward, pgnn_forward,
                                       pgnn_hidden, pgnn_layers_from_rules,
                                       plithogenic_from_neutrosophic, rule_gnn_hidden,
                                       validate_annotations, validate_fuzzy_hypergraph)

from conftest import dense_propagator, hypergraphs

DISEASE = neutrosophic_graph(
    ["P1", "P2", "P3", "P4"], [("P1", "P2"), ("P2", "P3"), ("P3", "P4"), ("P1", "P4")],
    [(0.9, 0.1, 0.0), (0.5, 0.4, 0.1), (0.2, 0.3, 0.5), (0.0, 0.1, 0.9)],
    [(0.8, 0.1, 0.1), (0.4, 0.4, 0.2), (0.1, 0.2, 0.7), (0.2, 0.3, 0.5)])
SOCIAL = fuzzy_graph(["Alice", "Bob", "Carol", "Dave"],
                     [("Alice", "Bob"), ("Bob", "Carol"), ("Carol", "Dave"), ("Alice", "Dave")],
                     [0.9, 0.7, 0.5, 0.3], [0.8, 0.6, 0.4, 0.2])


def _graph(kind, vals, evals, edges=(("u", "v"),), vertices=("u", "v"), dcf=None):
    return AnnotatedGraph(vertices, edges, kind, vals, evals, dcf)


# --- validation --------------------------------------------------------------

def test_worked_examples_validate():
    assert validate_annotations(DISEASE, strict=True) == []
    assert validate_annotations(SOCIAL, strict=True) == []


def test_fuzzy_edge_above_endpoint_is_not_flagged():
    # edge-endpoint consistency is deliberately not enforced for fuzzy graphs
    assert SOCIAL.edge_values[0].mu > SOCIAL.vertex_values[1].mu
    assert validate_annotations(SOCIAL, strict=True) == []


def test_neutrosophic_range():
    assert NeutrosophicTriplet(0.9, 0.1, 0.0).problems() == []
    assert NeutrosophicTriplet(1.2, 0.0, 0.0).problems()


def test_quadripartitioned_boundary_valid():
    assert PartitionedMembership("quadripartitioned", (1, 1, 1, 1)).problems() == []


def test_intuitionistic_sum_bound():
    assert PartitionedMembership("intuitionistic", (0.6, 0.5)).problems()
    assert PartitionedMembership("intuitionistic", (0.6, 0.4)).problems() == []


def test_hesitant_is_a_set():
    assert PartitionedMembership("hesitant", (0.2, 0.5, 0.9)).problems() == []
    assert PartitionedMembership("hesitant", (0.2, 0.2)).problems()


def test_pentapartitioned_strict_lower_bound():
    P = lambda *v: PartitionedMembership("pentapartitioned", v)
    g = _graph("pentapartitioned", (P(0.5, 0.5, 0.5, 0.1, 0.1), P(0.6, 0.4, 0.2, 0.1, 0.1)),
               (P(0.3, 0.3, 0.1, 0.2, 0.2),))
    assert validate_annotations(g, strict=False) == []
    problems = validate_annotations(g, strict=True)
    assert len(problems) == 1 and "component 3" in problems[0] and "below max" in problems[0]


def test_quadripartitioned_strict_checks():
    Q = lambda *v: PartitionedMembership("quadripartitioned", v)
    g = _graph("quadripartitioned", (Q(0.5, 0.5, 0.2, 0.2), Q(0.4, 0.6, 0.3, 0.1)),
               (Q(0.45, 0.4, 0.3, 0.2),))
    problems = validate_annotations(g, strict=True)
    assert len(problems) == 1 and "component 1" in problems[0]


def test_plithogenic_checks():
    dcf = ContradictionTable(("a", "b"), [[0.0, 0.4], [0.4, 0.0]])
    A = PlithogenicAnnotation
    g = _graph("plithogenic", (A((0.5, 0.5), "a"), A((0.7, 0.2), "b")), (A((0.6, 0.1)),),
               dcf=dcf)
    assert validate_annotations(g) == []
    assert len(validate_annotations(g, strict=True)) == 1
    bad = ContradictionTable(("a", "b"), [[0.1, 0.4], [0.3, 0.0]])
    msgs = bad.problems()
    assert any("diagonal" in m for m in msgs) and any("symmetric" in m for m in msgs)


def test_mixed_kinds_reported():
    g = _graph("fuzzy", (FuzzyMembership(0.5), NeutrosophicTriplet(1, 0, 0)),
               (FuzzyMembership(0.1),))
    assert any("kind" in p for p in validate_annotations(g))


# --- fuzzy hypergraphs --------------------------------------------------------

def test_height_and_cut():
    fh = FuzzyHypergraph(("a", "b", "c"), (FuzzyEdge({"a": 0.9, "b": 0.4}), FuzzyEdge({"c": 0.7})))
    assert height(fh) == 0.9
    cut = c_cut(fh, 0.5)
    assert cut.vertices == ("a", "c")
    assert [e.members for e in cut.hyperedges] == [("a",), ("c",)]
    assert [e.members for e in c_cut(fh, 0.8).hyperedges] == [("a",)]
    with pytest.raises(ValueError):
        c_cut(fh, 0.0)


def test_binary_cut_is_crisp_graph():
    h = Hypergraph.from_edges(["a", "b", "c"], [["a", "b"], ["b", "c"]])
    fh = FuzzyHypergraph.from_hypergraph(h)
    for c in (0.1, 0.5, 1.0):
        assert c_cut(fh, c) == h


def test_fuzzy_degrees_single_edge():
    fh = FuzzyHypergraph(("a", "b"), (FuzzyEdge({"a": 1.0, "b": 0.5}),))
    dv, de = fuzzy_degrees(fh)
    assert dv.tolist() == [1.0, 0.5] and de.tolist() == [1.5]
    Hf = np.array([[1.0], [0.5]])
    ref = np.eye(2) - dense_propagator(Hf, np.ones(1))
    assert np.abs(fuzzy_laplacian(fh) - ref).max() < 1e-12


def test_fuzzy_covering_strict():
    fh = FuzzyHypergraph(("a", "b"), (FuzzyEdge({"a": 1.0, "b": 0.0}),))
    assert validate_fuzzy_hypergraph(fh) == []
    assert validate_fuzzy_hypergraph(fh, strict=True) == ["vertex 'b' is in no edge support"]


@given(hypergraphs(), st.integers(0, 1000))
def test_binary_fuzzy_reduces_to_crisp(h, seed):
    fh = FuzzyHypergraph.from_hypergraph(h)
    assert np.array_equal(fuzzy_incidence(fh).toarray(), sl.incidence_matrix(h).toarray())
    assert np.abs(fuzzy_laplacian(fh) - sl.normalized_laplacian(h)).max() <= 1e-12
    rng = np.random.default_rng(seed)
    X = rng.standard_normal((len(h.vertices), 2))
    p = LayerParams(rng.standard_normal((2, 3)))
    assert np.abs(fhgnn_convolve(fh, X, p) - hgnn_convolve(h, X, p)).max() <= 1e-12


@given(st.lists(st.floats(0, 1), min_size=3, max_size=3), st.floats(0.01, 1), st.floats(0.01, 1))
def test_cut_monotone(mus, c1, c2):
    lo, hi = sorted((c1, c2))
    fh = FuzzyHypergraph(("a", "b", "c"), (FuzzyEdge(dict(zip("abc", mus))),))
    upper = {e.id: set(e.members) for e in c_cut(fh, hi).hyperedges}
    lower = {e.id: set(e.members) for e in c_cut(fh, lo).hyperedges}
    for j, members in upper.items():
        assert members <= lower[j]


# --- rule-based networks ------------------------------------------------------

def _layers(rng, d, L, K, act="relu"):
    return [RuleLayer(tuple(Rule(rng.standard_normal((2 * d, d)), rng.standard_normal(d),
                                 FuzzySubset((0, 0.5, 1), (0.2, 1.0, 0.6)),
                                 FuzzySubset((0, 1), (1, 0.3))) for _ in range(K)), act)
            for _ in range(L)]


def test_single_rule_has_unit_strength():
    rng = np.random.default_rng(0)
    r = _layers(rng, 2, 1, 1)[0].rules
    assert np.allclose(firing_strengths(SOCIAL, r), 1.0)


def test_isolated_vertices_fall_back_to_uniform():
    g = fuzzy_graph(["a", "b"], [], [0.5, 0.5], [])
    r = _layers(np.random.default_rng(0), 2, 1, 4)[0].rules
    assert np.allclose(firing_strengths(g, r), 0.25)


def test_identity_rule_residual():
    g = fuzzy_graph(["a", "b", "c"], [("a", "b"), ("b", "c")], [1, 1, 1], [1, 1])
    X = np.random.default_rng(1).standard_normal((3, 2))
    W = np.vstack([np.eye(2), np.zeros((2, 2))])
    H = rule_gnn_hidden(g, X, [RuleLayer((Rule(W, np.zeros(2)),), "identity")])
    assert np.allclose(H, 2 * X)


def _rule_oracle(pairs, s_v, s_e, X, layers, act):
    """Per-vertex scalar recomputation of the residual rule stack."""
    H = X.copy()
    n = len(s_v)
    for layer in layers:
        M = np.zeros_like(H)
        r = np.zeros((n, len(layer.rules)))
        for (u, v), se in zip(pairs, s_e):
            M[u] += s_v[v] * H[v]
            M[v] += s_v[u] * H[u]
            for k, rule in enumerate(layer.rules):
                r[u, k] += float(rule.A(s_v[u])) * float(rule.B(s_v[v])) * se
                r[v, k] += float(rule.A(s_v[v])) * float(rule.B(s_v[u])) * se
        out = np.zeros_like(H)
        for v in range(n):
            tot = r[v].sum()
            rn = r[v] / tot if tot > 0 else np.full(len(layer.rules), 1 / len(layer.rules))
            for k, rule in enumerate(layer.rules):
                out[v] += rn[k] * (np.concatenate([H[v], M[v]]) @ rule.W + rule.b)
        H = act(out + H)
    return H


def test_fgnn_path_matches_scalar_oracle():
    rng = np.random.default_rng(3)
    g = fuzzy_graph(["a", "b", "c"], [("a", "b"), ("b", "c")], [0.9, 0.6, 0.3], [0.7, 0.4])
    X = rng.standard_normal((3, 2))
    layers = _layers(rng, 2, 2, 3)
    ref = _rule_oracle([(0, 1), (1, 2)], [0.9, 0.6, 0.3], [0.7, 0.4], X, layers,
                       lambda z: np.maximum(z, 0))
    assert np.abs(rule_gnn_hidden(g, X, layers) - ref).max() < 1e-12
    out = fgnn_forward(g, X, layers)
    assert np.abs(out.sum(axis=1) - 1).max() < 1e-12


def test_ngnn_disease_matches_scalar_oracle():
    rng = np.random.default_rng(4)
    X = rng.standard_normal((4, 3))
    layers = _layers(rng, 3, 1, 2, "leaky_relu")
    s_v = [t * (1 - i) * (1 - f) for t, i, f in
           [(0.9, 0.1, 0.0), (0.5, 0.4, 0.1), (0.2, 0.3, 0.5), (0.0, 0.1, 0.9)]]
    s_e = [t * (1 - i) * (1 - f) for t, i, f in
           [(0.8, 0.1, 0.1), (0.4, 0.4, 0.2), (0.1, 0.2, 0.7), (0.2, 0.3, 0.5)]]
    ref = _rule_oracle([(0, 1), (1, 2), (2, 3), (0, 3)], s_v, s_e, X, layers,
                       lambda z: np.where(z >= 0, z, 0.01 * z))
    assert np.abs(rule_gnn_hidden(DISEASE, X, layers) - ref).max() < 1e-12
    assert ngnn_forward(DISEASE, X, layers).shape == (4, 3)


def test_all_one_triplets_equal_all_one_fuzzy():
    rng = np.random.default_rng(5)
    V, E = ["a", "b", "c"], [("a", "b"), ("a", "c")]
    ng = neutrosophic_graph(V, E, [(1, 0, 0)] * 3, [(1, 0, 0)] * 2)
    fg = fuzzy_graph(V, E, [1, 1, 1], [1, 1])
    X = rng.standard_normal((3, 2))
    layers = _layers(rng, 2, 2, 2)
    assert np.array_equal(ngnn_forward(ng, X, layers), fgnn_forward(fg, X, layers))


def test_rule_dimension_mismatch():
    rng = np.random.default_rng(0)
    with pytest.raises(ValueError, match="dimension mismatch"):
        fgnn_forward(SOCIAL, rng.standard_normal((4, 3)), _layers(rng, 2, 1, 1))


@given(st.integers(0, 2**32 - 1))
def test_ngnn_with_zero_indeterminacy_equals_fgnn(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 8))
    V = [f"v{i}" for i in range(n)]
    E = [(V[i], V[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
    fg = fuzzy_graph(V, E, rng.random(n), rng.random(len(E)))
    X = rng.standard_normal((n, 3))
    layers = _layers(rng, 3, 2, 3)
    a = ngnn_forward(neutrosophic_from_fuzzy(fg), X, layers)
    assert np.abs(a - fgnn_forward(fg, X, layers)).max() <= 1e-12


# --- plithogenic ---------------------------------------------------------------

def test_pgnn_isolated_vertex():
    dcf = ContradictionTable.zeros(["a"])
    g = AnnotatedGraph(("x",), (), "plithogenic", (PlithogenicAnnotation((0.5,), "a"),), (), dcf)
    X = np.array([[1.0, -2.0]])
    layer = PGNNLayer(np.arange(8.0).reshape(4, 2) / 8, np.array([0.1, -0.1]))
    ref = np.maximum(np.concatenate([X[0], [0.0, 0.0]]) @ layer.W + layer.b, 0)
    ref = np.exp(ref - ref.max()) / np.exp(ref - ref.max()).sum()
    assert np.abs(pgnn_forward(g, X, [layer])[0] - ref).max() < 1e-15


def test_pgnn_triangle_step_by_step():
    rng = np.random.default_rng(6)
    dcf = ContradictionTable(("r", "b"), [[0.0, 0.5], [0.5, 0.0]])
    A = PlithogenicAnnotation
    verts = (A((0.9, 0.1, 0.2), "r"), A((0.6, 0.2, 0.1), "b"), A((0.7, 0.3, 0.0), "r"))
    g = AnnotatedGraph(("u", "v", "w"), (("u", "v"), ("v", "w"), ("u", "w")), "plithogenic",
                       verts, (A((0.5, 0.1, 0.1)), A((0.4, 0.2, 0.0)), A((0.6, 0.1, 0.0))), dcf)
    X = rng.standard_normal((3, 2))
    layers = [PGNNLayer(rng.standard_normal((4, 2)), rng.standard_normal(2)) for _ in range(2)]
    app = [a.daf[0] * (1 - a.daf[1]) * (1 - a.daf[2]) for a in verts]
    vals = ["r", "b", "r"]
    conflict = lambda x, y: 0.0 if x == y else 0.5
    nbrs = {0: [1, 2], 1: [0, 2], 2: [1, 0]}
    H = X.copy()
    for layer in layers:
        new = np.zeros_like(H)
        for v in range(3):
            m = np.zeros(2)
            for u in nbrs[v]:
                gamma = app[u] * (1 - conflict(vals[u], vals[v]))
                m += gamma * H[u]
            new[v] = np.maximum(np.concatenate([H[v], m]) @ layer.W + layer.b, 0)
        H = new
    assert np.abs(pgnn_hidden(g, X, layers) - H).max() < 1e-12


@given(st.integers(0, 2**32 - 1))
def test_pgnn_zero_contradiction_equals_ngnn(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 8))
    V = [f"v{i}" for i in range(n)]
    E = [(V[i], V[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
    trip = lambda k: [tuple(rng.random(3) * [1, 0.5, 0.5]) for _ in range(k)]
    ng = neutrosophic_graph(V, E, trip(n), trip(len(E)))
    X = rng.standard_normal((n, 3))
    layers = _layers(rng, 3, 2, 1)
    a = ngnn_forward(ng, X, layers)
    b = pgnn_forward(plithogenic_from_neutrosophic(ng), X, pgnn_layers_from_rules(layers))
    assert np.abs(a - b).max() <= 1e-12


def test_layer_mapping_needs_single_rule():
    with pytest.raises(ValueError):
        pgnn_layers_from_rules(_layers(np.random.default_rng(0), 2, 1, 2))


def test_fuzzy_subset_validation():
    assert FuzzySubset()(0.3) == pytest.approx(0.3)
    with pytest.raises(ValueError):
        FuzzySubset((0, 1), (0, 2))
