from pathlib import Path

import numpy as np
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from superhypergraph.core import Hypergraph, Leaf, Nest, Superedge, SuperHyperGraph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

DATA = Path(__file__).resolve().parent.parent / "data"


def random_hypergraph(rng, n, m, max_size=4, weighted=True, allow_empty=False):
    V = [f"v{i}" for i in range(n)]
    edges = []
    for _ in range(m):
        lo = 0 if allow_empty else 1
        size = int(rng.integers(lo, min(max_size, n) + 1))
        edges.append([V[i] for i in rng.choice(n, size=size, replace=False)])
    w = rng.uniform(0.1, 3.0, size=m) if weighted else np.ones(m)
    return Hypergraph.from_edges(V, edges, w)


def random_nested(rng, names, depth):
    """Random element of rank <= depth built from ``names``."""
    if depth == 0:
        return Leaf(names[int(rng.integers(len(names)))])
    k = int(rng.integers(1, 4))
    return Nest(tuple(random_nested(rng, names, int(rng.integers(0, depth))) for _ in range(k)))


def random_shg(rng, n, m, level):
    V = tuple(f"x{i}" for i in range(n))
    edges = []
    for j in range(m):
        k = int(rng.integers(1, 4))
        members = tuple(random_nested(rng, V, int(rng.integers(0, level + 1))) for _ in range(k))
        edges.append(Superedge(members, float(rng.uniform(0.1, 2.0)), j))
    return SuperHyperGraph(V, level, (), tuple(edges))


def dense_incidence(h):
    H = np.zeros((len(h.vertices), len(h.hyperedges)))
    for j, e in enumerate(h.hyperedges):
        for v in e.members:
            H[h.vertices.index(v), j] = 1.0
    return H


def dense_propagator(H, w):
    """Textbook dense formula with explicit diagonal matrices."""
    dv = H @ w
    de = H.sum(axis=0)
    inv = lambda d, p: np.diag([x ** -p if x > 0 else 0.0 for x in d])
    return inv(dv, 0.5) @ H @ np.diag(w) @ inv(de, 1) @ H.T @ inv(dv, 0.5)


@st.composite
def hypergraphs(draw, max_n=12, max_m=8):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(0, max_m))
    V = [f"v{i}" for i in range(n)]
    edges = [draw(st.sets(st.sampled_from(V), min_size=1, max_size=min(n, 5))) for _ in range(m)]
    w = [draw(st.floats(0.1, 5.0)) for _ in range(m)]
    return Hypergraph.from_edges(V, [sorted(e) for e in edges], w)


def _d(name):
    return str(DATA / name)


# one invocation per subcommand; every one takes --seed so the determinism
# check covers the full command set
CLI_CASES = {
    "validate": ["validate", _d("nested_example.json")],
    "expand": ["expand", _d("nested_example.json")],
    "laplacian": ["laplacian", _d("nested_example.json")],
    "convolve": ["convolve", _d("flat_example.json"), "--features", _d("features3.csv"),
                 "--out-dim", "3"],
    "forward": ["forward", _d("flat_example.json"), "--features", _d("features3.csv"),
                "--dims", "3,2"],
    "attention": ["attention", _d("flat_example.json"), "--features", _d("features3.csv"),
                  "--out-dim", "2"],
    "dshgnn": ["dshgnn", "--features", _d("features4.csv"), "--s", "3", "--t", "2",
               "--layers", "2"],
    "fgnn": ["fgnn", _d("social_fuzzy.json"), "--features", _d("features4.csv"),
             "--layers", "2"],
    "ngnn": ["ngnn", _d("disease_network.json"), "--features", _d("features4.csv")],
    "pgnn": ["pgnn", _d("plithogenic_triangle.json"), "--features", _d("features3.csv"),
             "--layers", "2"],
    "fhgnn": ["fhgnn", _d("fuzzy_hypergraph.json"), "--features", _d("features4.csv"),
              "--out-dim", "2"],
    "ccut": ["ccut", _d("fuzzy_hypergraph.json"), "-c", "0.5"],
    "walk": ["walk", _d("flat_example.json"), "--start", "x2", "--steps", "200"],
    "stationary": ["stationary", "--matrix", _d("weather.csv")],
    "partition": ["partition", _d("nested_example.json"), "-k", "3", "-c", "1.0",
                  "--on-expanded"],
    "cluster": ["cluster", _d("clustering_example.json"), "-k", "2"],
    "centrality": ["centrality", _d("nested_example.json")],
    "turan": ["turan", "-N", "5"],
    "ffree": ["ffree", _d("clustering_example.json"), _d("triangle_pattern.json")],
    "bdtree": ["bdtree", "--table", _d("and_table.json")],
}
