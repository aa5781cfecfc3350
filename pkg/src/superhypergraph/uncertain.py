"""Uncertain graph annotations, fuzzy hypergraphs and the F-/N-/P-GNN forward passes.

Annotated graphs are simple 2-uniform graphs whose vertices and edges carry one
kind of membership value.  The GNN passes share a scalar "strength" per vertex
and edge: ``mu`` for fuzzy values and ``t (1 - i) (1 - f)`` for neutrosophic
triplets.  Plithogenic aggregation uses the analogous product over the
appurtenance vector, damped by the contradiction between the endpoint
attribute values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np
import scipy.sparse as sp

from . import sparse as sl
from .core import Hyperedge, Hypergraph
from .shgnn import LayerParams, _check_features, _preactivation

KINDS = ("fuzzy", "neutrosophic", "intuitionistic", "quadripartitioned",
         "pentapartitioned", "hesitant", "plithogenic")
_PARTITIONED_LEN = {"intuitionistic": 2, "quadripartitioned": 4, "pentapartitioned": 5}
_PARTITIONED_SUM = {"intuitionistic": 1.0, "quadripartitioned": 4.0, "pentapartitioned": 5.0}
_EPS = 1e-12


# --- membership values ------------------------------------------------------

@dataclass(frozen=True)
class FuzzyMembership:
    mu: float

    @property
    def strength(self) -> float:
        return float(self.mu)

    def problems(self) -> list[str]:
        return [] if 0.0 <= self.mu <= 1.0 else [f"membership {self.mu} outside [0,1]"]


@dataclass(frozen=True)
class NeutrosophicTriplet:
    t: float
    i: float
    f: float

    @property
    def strength(self) -> float:
        return float(self.t * (1.0 - self.i) * (1.0 - self.f))

    def problems(self) -> list[str]:
        out = [f"{n}={x} outside [0,1]" for n, x in zip("tif", (self.t, self.i, self.f))
               if not 0.0 <= x <= 1.0]
        if self.t + self.i + self.f > 3.0 + _EPS:
            out.append("t+i+f exceeds 3")
        return out


@dataclass(frozen=True)
class PartitionedMembership:
    """Intuitionistic, quadripartitioned, pentapartitioned or hesitant values."""

    kind: str
    values: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if self.kind not in _PARTITIONED_LEN and self.kind != "hesitant":
            raise ValueError(f"unknown partitioned kind {self.kind!r}")

    def problems(self) -> list[str]:
        out = [f"value {v} outside [0,1]" for v in self.values if not 0.0 <= v <= 1.0]
        if self.kind == "hesitant":
            if len(set(self.values)) != len(self.values):
                out.append("hesitant set has repeated values")
            return out
        n = _PARTITIONED_LEN[self.kind]
        if len(self.values) != n:
            out.append(f"{self.kind} needs {n} values, got {len(self.values)}")
        elif sum(self.values) > _PARTITIONED_SUM[self.kind] + _EPS:
            out.append(f"{self.kind} sum {sum(self.values):g} exceeds "
                       f"{_PARTITIONED_SUM[self.kind]:g}")
        return out


@dataclass(frozen=True)
class PlithogenicAnnotation:
    """Degree of appurtenance plus (for vertices) the attribute value it refers to."""

    daf: tuple[float, ...]
    value: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "daf", tuple(float(v) for v in self.daf))

    @property
    def strength(self) -> float:
        # first component is truth-like, the rest damp it; (t,i,f) gives t(1-i)(1-f)
        if not self.daf:
            return 0.0
        return float(self.daf[0] * np.prod([1.0 - a for a in self.daf[1:]]))

    def problems(self) -> list[str]:
        return [f"daf entry {a} outside [0,1]" for a in self.daf if not 0.0 <= a <= 1.0]


@dataclass(frozen=True)
class ContradictionTable:
    """Symmetric zero-diagonal table over attribute values; entries scalar or t-vectors."""

    values: tuple[str, ...]
    table: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        t = np.asarray(self.table, dtype=float)
        if t.ndim == 2:
            t = t[:, :, None]
        object.__setattr__(self, "table", t)

    def index(self, a: str) -> int:
        return self.values.index(a)

    def __call__(self, a: str, b: str) -> np.ndarray:
        return self.table[self.index(a), self.index(b)]

    def problems(self) -> list[str]:
        out = []
        m = len(self.values)
        if self.table.shape[:2] != (m, m):
            return [f"dcf table shape {self.table.shape[:2]} does not match {m} values"]
        if np.any((self.table < 0) | (self.table > 1)):
            out.append("dcf entries outside [0,1]")
        if np.any(np.abs(np.diagonal(self.table, axis1=0, axis2=1)) > 0):
            out.append("dcf diagonal is not zero")
        if not np.array_equal(self.table, self.table.transpose(1, 0, 2)):
            out.append("dcf table is not symmetric")
        return out

    @classmethod
    def zeros(cls, values: Sequence[str], t: int = 1) -> "ContradictionTable":
        return cls(tuple(values), np.zeros((len(values), len(values), t)))


Membership = FuzzyMembership | NeutrosophicTriplet | PartitionedMembership | PlithogenicAnnotation


# --- annotated graphs -------------------------------------------------------

@dataclass(frozen=True)
class AnnotatedGraph:
    """Simple graph with one membership kind on all vertices and edges."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    kind: str
    vertex_values: tuple[Membership, ...]
    edge_values: tuple[Membership, ...]
    dcf: ContradictionTable | None = None
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        object.__setattr__(self, "vertex_values", tuple(self.vertex_values))
        object.__setattr__(self, "edge_values", tuple(self.edge_values))
        if self.kind not in KINDS:
            raise ValueError(f"unknown membership kind {self.kind!r}")
        index = {v: i for i, v in enumerate(self.vertices)}
        if len(index) != len(self.vertices):
            raise ValueError("duplicate vertex names")
        object.__setattr__(self, "_index", index)
        if len(self.vertex_values) != len(self.vertices):
            raise ValueError("one annotation per vertex required")
        if len(self.edge_values) != len(self.edges):
            raise ValueError("one annotation per edge required")
        for e in self.edges:
            if len(e) != 2:
                raise ValueError(f"edge {e} is not 2-uniform")
            for v in e:
                if v not in index:
                    raise ValueError(f"edge {e} has unknown vertex {v!r}")
        if self.kind == "plithogenic" and self.dcf is None:
            raise ValueError("plithogenic graphs need a contradiction table")

    def edge_index_pairs(self) -> np.ndarray:
        if not self.edges:
            return np.zeros((0, 2), dtype=int)
        return np.array([[self._index[u], self._index[v]] for u, v in self.edges], dtype=int)

    def vertex_strengths(self) -> np.ndarray:
        return np.array([a.strength for a in self.vertex_values], dtype=float)

    def edge_strengths(self) -> np.ndarray:
        return np.array([a.strength for a in self.edge_values], dtype=float)


def fuzzy_graph(vertices, edges, sigma, mu) -> AnnotatedGraph:
    return AnnotatedGraph(tuple(vertices), tuple(edges), "fuzzy",
                          tuple(FuzzyMembership(float(s)) for s in sigma),
                          tuple(FuzzyMembership(float(m)) for m in mu))


def neutrosophic_graph(vertices, edges, vertex_triplets, edge_triplets) -> AnnotatedGraph:
    return AnnotatedGraph(tuple(vertices), tuple(edges), "neutrosophic",
                          tuple(NeutrosophicTriplet(*map(float, t)) for t in vertex_triplets),
                          tuple(NeutrosophicTriplet(*map(float, t)) for t in edge_triplets))


def _edge_vs_endpoints(g: AnnotatedGraph, j: int, u: int, v: int) -> list[str]:
    e = np.asarray(g.edge_values[j].values if g.kind != "plithogenic" else g.edge_values[j].daf)
    a = np.asarray(g.vertex_values[u].values if g.kind != "plithogenic" else g.vertex_values[u].daf)
    b = np.asarray(g.vertex_values[v].values if g.kind != "plithogenic" else g.vertex_values[v].daf)
    if e.shape != a.shape or a.shape != b.shape:
        return [f"edge {j}: annotation length differs from its endpoints"]
    lo, hi = np.minimum(a, b), np.maximum(a, b)
    out = []
    if g.kind == "quadripartitioned":
        upper = [0, 1]
        lower: list[int] = []
        capped = [2, 3]
    elif g.kind == "pentapartitioned":
        upper, lower, capped = [0, 1], [2, 3, 4], []
    else:  # plithogenic appurtenance
        upper, lower, capped = list(range(len(e))), [], []
    for k in upper:
        if e[k] > lo[k] + _EPS:
            out.append(f"edge {j}: component {k + 1} = {e[k]:g} exceeds min {lo[k]:g}")
    for k in capped:
        if e[k] > hi[k] + _EPS:
            out.append(f"edge {j}: component {k + 1} = {e[k]:g} exceeds max {hi[k]:g}")
    for k in lower:
        if e[k] < hi[k] - _EPS:
            out.append(f"edge {j}: component {k + 1} = {e[k]:g} below max {hi[k]:g}")
    return out


def validate_annotations(g: AnnotatedGraph, strict: bool = False) -> list[str]:
    """Range and sum checks always; edge-versus-endpoint inequalities under ``strict``.

    The endpoint inequalities are checked for quadripartitioned,
    pentapartitioned and plithogenic graphs only.  Fuzzy and neutrosophic
    edges are not compared with their endpoints.
    """
    out: list[str] = []
    expected = {
        "fuzzy": FuzzyMembership, "neutrosophic": NeutrosophicTriplet,
        "plithogenic": PlithogenicAnnotation,
    }.get(g.kind, PartitionedMembership)
    vlabels = [f"vertex {v!r}" for v in g.vertices]
    elabels = [f"edge {j}" for j in range(len(g.edge_values))]
    for labels, values in ((vlabels, g.vertex_values), (elabels, g.edge_values)):
        for label, a in zip(labels, values):
            if not isinstance(a, expected) or (
                    isinstance(a, PartitionedMembership) and a.kind != g.kind):
                out.append(f"{label}: annotation kind differs from {g.kind}")
                continue
            out.extend(f"{label}: {p}" for p in a.problems())
    if g.kind == "plithogenic":
        out.extend(g.dcf.problems())
        for i, a in enumerate(g.vertex_values):
            if isinstance(a, PlithogenicAnnotation) and a.value not in g.dcf.values:
                out.append(f"{vlabels[i]}: attribute value {a.value!r} not in dcf table")
    if strict and g.kind in ("quadripartitioned", "pentapartitioned", "plithogenic") and not out:
        for j, (u, v) in enumerate(g.edge_index_pairs()):
            out.extend(_edge_vs_endpoints(g, j, int(u), int(v)))
    return out


# --- fuzzy hypergraphs ------------------------------------------------------

@dataclass(frozen=True)
class FuzzyEdge:
    membership: Mapping[str, float]
    weight: float = 1.0


@dataclass(frozen=True)
class FuzzyHypergraph:
    vertices: tuple[str, ...]
    edges: tuple[FuzzyEdge, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(
            FuzzyEdge(dict(e.membership), float(e.weight)) for e in self.edges))
        known = set(self.vertices)
        if len(known) != len(self.vertices):
            raise ValueError("duplicate vertex names")
        for j, e in enumerate(self.edges):
            unknown = [v for v in e.membership if v not in known]
            if unknown:
                raise ValueError(f"fuzzy edge {j} has unknown vertices {unknown}")

    @classmethod
    def from_hypergraph(cls, h: Hypergraph) -> "FuzzyHypergraph":
        return cls(h.vertices, tuple(FuzzyEdge({v: 1.0 for v in e.members}, e.weight)
                                     for e in h.hyperedges))

    @property
    def weights(self) -> np.ndarray:
        return np.array([e.weight for e in self.edges], dtype=float)


def validate_fuzzy_hypergraph(fh: FuzzyHypergraph, strict: bool = False) -> list[str]:
    """Range checks always; under ``strict`` every vertex must be in some edge's support."""
    out = []
    for j, e in enumerate(fh.edges):
        if e.weight < 0:
            out.append(f"fuzzy edge {j}: negative weight {e.weight}")
        for v, mu in e.membership.items():
            if not 0.0 <= mu <= 1.0:
                out.append(f"fuzzy edge {j}: membership of {v!r} = {mu} outside [0,1]")
    if strict:
        covered = {v for e in fh.edges for v, mu in e.membership.items() if mu > 0}
        for v in fh.vertices:
            if v not in covered:
                out.append(f"vertex {v!r} is in no edge support")
    return out


def height(fh: FuzzyHypergraph) -> float:
    return max((max(e.membership.values(), default=0.0) for e in fh.edges), default=0.0)


def c_cut(fh: FuzzyHypergraph, c: float) -> Hypergraph:
    """Crisp hypergraph of members with ``mu >= c``.

    Empty cut edges are dropped; kept edges retain their original position as
    ``id``.  Vertices are the union of the cut edges, in the original order.
    """
    if not 0.0 < c <= 1.0:
        raise ValueError(f"c must lie in (0, 1], got {c}")
    kept = []
    for j, e in enumerate(fh.edges):
        members = tuple(v for v in fh.vertices if e.membership.get(v, 0.0) >= c)
        if members:
            kept.append(Hyperedge(members, e.weight, j))
    used = {v for e in kept for v in e.members}
    return Hypergraph(tuple(v for v in fh.vertices if v in used), tuple(kept))


def fuzzy_incidence(fh: FuzzyHypergraph) -> sp.csr_array:
    index = {v: i for i, v in enumerate(fh.vertices)}
    rows, cols, vals = [], [], []
    for j, e in enumerate(fh.edges):
        for v, mu in e.membership.items():
            rows.append(index[v])
            cols.append(j)
            vals.append(float(mu))
    return sl.csr(len(fh.vertices), len(fh.edges), rows, cols, vals)


def fuzzy_degrees(fh: FuzzyHypergraph) -> tuple[np.ndarray, np.ndarray]:
    return sl.degrees_from_incidence(fuzzy_incidence(fh), fh.weights)


def fuzzy_laplacian(fh: FuzzyHypergraph) -> np.ndarray:
    return sl.laplacian_from_incidence(fuzzy_incidence(fh), fh.weights,
                                       dense_cap=max(sl.DENSE_CAP, len(fh.vertices)))


def fhgnn_convolve(fh: FuzzyHypergraph, X, p: LayerParams) -> np.ndarray:
    X = _check_features(X, len(fh.vertices))
    w = fh.weights if p.edge_weights is None else p.edge_weights
    if w.shape != (len(fh.edges),):
        raise ValueError("shape mismatch: edge weights vs fuzzy edges")
    return p.act(_preactivation(fuzzy_incidence(fh), w, X, p.theta))


# --- rule-based F-GNN / N-GNN ----------------------------------------------

@dataclass(frozen=True)
class FuzzySubset:
    """Piecewise-linear membership function through ``(xs, ys)``, clamped outside."""

    xs: tuple[float, ...] = (0.0, 1.0)
    ys: tuple[float, ...] = (0.0, 1.0)

    def __post_init__(self):
        xs = tuple(float(x) for x in self.xs)
        ys = tuple(float(y) for y in self.ys)
        if len(xs) != len(ys) or not xs:
            raise ValueError("xs and ys must be non-empty and equally long")
        if any(b < a for a, b in zip(xs, xs[1:])):
            raise ValueError("xs must be non-decreasing")
        if any(not 0.0 <= y <= 1.0 for y in ys):
            raise ValueError("membership values must lie in [0,1]")
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "ys", ys)

    def __call__(self, x):
        return np.interp(x, self.xs, self.ys)


@dataclass(frozen=True)
class Rule:
    """IF s(v) is A AND s(u) is B THEN y = [H_v, m_v] W + b."""

    W: np.ndarray
    b: np.ndarray
    A: FuzzySubset = FuzzySubset()
    B: FuzzySubset = FuzzySubset()

    def __post_init__(self):
        W = np.atleast_2d(np.asarray(self.W, dtype=float))
        b = np.asarray(self.b, dtype=float).ravel()
        if W.shape[0] % 2:
            raise ValueError("W must have 2d rows for the concatenated input")
        if b.shape[0] != W.shape[1]:
            raise ValueError(f"shape mismatch: b has {b.shape[0]} entries, W is {W.shape}")
        object.__setattr__(self, "W", W)
        object.__setattr__(self, "b", b)

    def apply(self, H: np.ndarray, M: np.ndarray) -> np.ndarray:
        return np.concatenate([H, M], axis=1) @ self.W + self.b


@dataclass(frozen=True)
class RuleLayer:
    rules: tuple[Rule, ...]
    activation: str = "relu"

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        if not self.rules:
            raise ValueError("a rule layer needs at least one rule")
        if len({r.W.shape for r in self.rules}) != 1:
            raise ValueError("all rules in a layer must share W's shape")
        LayerParams(np.eye(1), activation=self.activation)


def _act(name: str, z: np.ndarray) -> np.ndarray:
    return LayerParams(np.eye(1), activation=name).act(z)


def _neighbour_messages(n: int, pairs: np.ndarray, H: np.ndarray, coef_uv: np.ndarray,
                        coef_vu: np.ndarray) -> np.ndarray:
    """``m_v = sum over edges (v,u) of coef * H_u``; self-loops count once."""
    M = np.zeros_like(H)
    for (u, v), cuv, cvu in zip(pairs, coef_uv, coef_vu):
        M[v] += cuv * H[u]
        if u != v:
            M[u] += cvu * H[v]
    return M


def firing_strengths(g: AnnotatedGraph, rules: Sequence[Rule]) -> np.ndarray:
    """Normalized ``(|V|, K)`` firing strengths; all-zero rows become uniform."""
    s_v, s_e = g.vertex_strengths(), g.edge_strengths()
    pairs = g.edge_index_pairs()
    R = np.zeros((len(g.vertices), len(rules)))
    for k, rule in enumerate(rules):
        for (u, v), se in zip(pairs, s_e):
            R[u, k] += rule.A(s_v[u]) * rule.B(s_v[v]) * se
            if u != v:
                R[v, k] += rule.A(s_v[v]) * rule.B(s_v[u]) * se
    totals = R.sum(axis=1, keepdims=True)
    return np.where(totals > 0, R / np.where(totals > 0, totals, 1.0), 1.0 / len(rules))


def rule_gnn_hidden(g: AnnotatedGraph, X, layers: Sequence[RuleLayer]) -> np.ndarray:
    """Residual rule stack ``H <- sigma(sum_k r_k f_k(H, m) + H)`` without readout."""
    if g.kind not in ("fuzzy", "neutrosophic"):
        raise ValueError(f"rule-based GNN needs fuzzy or neutrosophic annotations, got {g.kind}")
    H = _check_features(X, len(g.vertices))
    s_v = g.vertex_strengths()
    pairs = g.edge_index_pairs()
    for layer in layers:
        d = H.shape[1]
        W = layer.rules[0].W
        if W.shape != (2 * d, d):
            raise ValueError(f"dimension mismatch: rule W is {W.shape}, residual needs "
                             f"{(2 * d, d)}")
        M = _neighbour_messages(len(g.vertices), pairs, H, s_v[pairs[:, 0]], s_v[pairs[:, 1]])
        Rn = firing_strengths(g, layer.rules)
        Y = sum(Rn[:, [k]] * r.apply(H, M) for k, r in enumerate(layer.rules))
        H = _act(layer.activation, Y + H)
    return H


def fgnn_forward(g: AnnotatedGraph, X, layers: Sequence[RuleLayer]) -> np.ndarray:
    if g.kind != "fuzzy":
        raise ValueError(f"fgnn_forward needs fuzzy annotations, got {g.kind}")
    return sl.softmax_rows(rule_gnn_hidden(g, X, layers))


def ngnn_forward(g: AnnotatedGraph, X, layers: Sequence[RuleLayer]) -> np.ndarray:
    if g.kind != "neutrosophic":
        raise ValueError(f"ngnn_forward needs neutrosophic annotations, got {g.kind}")
    return sl.softmax_rows(rule_gnn_hidden(g, X, layers))


# --- plithogenic GNN --------------------------------------------------------

@dataclass(frozen=True)
class PGNNLayer:
    """Update ``H_v <- sigma([H_v, m_v] W + b)``."""

    W: np.ndarray
    b: np.ndarray
    activation: str = "relu"

    def __post_init__(self):
        W = np.atleast_2d(np.asarray(self.W, dtype=float))
        b = np.asarray(self.b, dtype=float).ravel()
        if W.shape[0] % 2 or b.shape[0] != W.shape[1]:
            raise ValueError(f"shape mismatch: W is {W.shape}, b has {b.shape[0]} entries")
        object.__setattr__(self, "W", W)
        object.__setattr__(self, "b", b)
        LayerParams(np.eye(1), activation=self.activation)


def pgnn_layers_from_rules(layers: Sequence[RuleLayer]) -> list[PGNNLayer]:
    """Single-rule residual layers as equivalent plain update layers.

    ``sigma([H, m] W + b + H)`` equals ``sigma([H, m] (W + [I; 0]) + b)``.
    """
    out = []
    for layer in layers:
        if len(layer.rules) != 1:
            raise ValueError("only single-rule layers have a plain-update equivalent")
        r = layer.rules[0]
        d = r.W.shape[0] // 2
        if r.W.shape[1] != d:
            raise ValueError("residual layers must preserve the feature width")
        W = r.W.copy()
        W[:d] += np.eye(d)
        out.append(PGNNLayer(W, r.b.copy(), layer.activation))
    return out


def plithogenic_weights(g: AnnotatedGraph) -> tuple[np.ndarray, np.ndarray]:
    """Per-edge ``(gamma_uv, gamma_vu)``: appurtenance of the sender times one minus
    the mean contradiction between the endpoint attribute values."""
    if g.kind != "plithogenic":
        raise ValueError(f"needs plithogenic annotations, got {g.kind}")
    s_v = g.vertex_strengths()
    pairs = g.edge_index_pairs()
    damp = np.array([1.0 - float(np.mean(g.dcf(g.vertex_values[u].value,
                                                g.vertex_values[v].value)))
                     for u, v in pairs])
    if not len(pairs):
        return np.zeros(0), np.zeros(0)
    return s_v[pairs[:, 0]] * damp, s_v[pairs[:, 1]] * damp


def pgnn_hidden(g: AnnotatedGraph, X, layers: Sequence[PGNNLayer]) -> np.ndarray:
    H = _check_features(X, len(g.vertices))
    pairs = g.edge_index_pairs()
    g_uv, g_vu = plithogenic_weights(g)
    for layer in layers:
        if layer.W.shape[0] != 2 * H.shape[1]:
            raise ValueError(f"dimension mismatch: W is {layer.W.shape}, features are "
                             f"{H.shape[1]} wide")
        # message into v from u uses u's appurtenance: g_uv for v, g_vu for u
        M = _neighbour_messages(len(g.vertices), pairs, H, g_uv, g_vu)
        H = _act(layer.activation, np.concatenate([H, M], axis=1) @ layer.W + layer.b)
    return H


def pgnn_forward(g: AnnotatedGraph, X, layers: Sequence[PGNNLayer]) -> np.ndarray:
    return sl.softmax_rows(pgnn_hidden(g, X, layers))


def plithogenic_from_neutrosophic(g: AnnotatedGraph, value: str = "a") -> AnnotatedGraph:
    """Triplet-shaped appurtenance with a single attribute value and zero contradiction."""
    if g.kind != "neutrosophic":
        raise ValueError("expects a neutrosophic graph")
    return AnnotatedGraph(
        g.vertices, g.edges, "plithogenic",
        tuple(PlithogenicAnnotation((a.t, a.i, a.f), value) for a in g.vertex_values),
        tuple(PlithogenicAnnotation((a.t, a.i, a.f)) for a in g.edge_values),
        ContradictionTable.zeros([value]))


def neutrosophic_from_fuzzy(g: AnnotatedGraph) -> AnnotatedGraph:
    if g.kind != "fuzzy":
        raise ValueError("expects a fuzzy graph")
    return neutrosophic_graph(g.vertices, g.edges, [(a.mu, 0.0, 0.0) for a in g.vertex_values],
                              [(a.mu, 0.0, 0.0) for a in g.edge_values])
