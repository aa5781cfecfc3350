"""Spectral (n-)SuperHyperGraph convolution, attention and dynamic construction."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
import scipy.sparse as sp

from . import sparse as sl
from .core import (Hypergraph, Leaf, Nest, Superedge, SuperHyperGraph, as_hypergraph,
                   expand_element)
from .kmeans import kmeans, relabel_by_first_member

ACTIVATIONS = ("relu", "leaky_relu", "identity")


@dataclass(frozen=True)
class LayerParams:
    """One convolution layer.  ``edge_weights=None`` uses the graph's own weights."""

    theta: np.ndarray
    edge_weights: np.ndarray | None = None
    activation: str = "relu"
    slope: float = 0.01

    def __post_init__(self):
        theta = np.atleast_2d(np.asarray(self.theta, dtype=float))
        if not np.all(np.isfinite(theta)):
            raise ValueError("theta has non-finite entries")
        object.__setattr__(self, "theta", theta)
        if self.edge_weights is not None:
            w = np.asarray(self.edge_weights, dtype=float)
            if np.any(w < 0):
                raise ValueError("edge weights must be non-negative")
            object.__setattr__(self, "edge_weights", w)
        if self.activation not in ACTIVATIONS:
            raise ValueError(f"unknown activation {self.activation!r}")

    def act(self, z: np.ndarray) -> np.ndarray:
        if self.activation == "relu":
            return sl.relu(z)
        if self.activation == "leaky_relu":
            return sl.leaky_relu(z, self.slope)
        return z

    def act_grad(self, z: np.ndarray) -> np.ndarray:
        if self.activation == "relu":
            return (z > 0).astype(float)
        if self.activation == "leaky_relu":
            return np.where(z >= 0, 1.0, self.slope)
        return np.ones_like(z)


@dataclass(frozen=True)
class NetworkConfig:
    layers: tuple[LayerParams, ...]
    readout: str = "softmax"

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple(self.layers))
        if self.readout not in ("softmax", "none"):
            raise ValueError(f"unknown readout {self.readout!r}")
        for a, b in zip(self.layers, self.layers[1:]):
            if a.theta.shape[1] != b.theta.shape[0]:
                raise ValueError(f"layer dims do not chain: {a.theta.shape} -> {b.theta.shape}")


@dataclass(frozen=True)
class DynamicConfig:
    s: int
    t: int
    kmeans_iters: int = 100
    seed: int = 0

    def __post_init__(self):
        if not 1 <= self.t <= self.s:
            raise ValueError(f"need 1 <= t <= s, got s={self.s}, t={self.t}")
        if self.kmeans_iters < 1:
            raise ValueError("kmeans_iters must be >= 1")


def _check_features(X, n: int) -> np.ndarray:
    X = np.atleast_2d(np.asarray(X, dtype=float))
    if X.shape[0] != n:
        raise ValueError(f"shape mismatch: X has {X.shape[0]} rows, graph has {n} vertices")
    if not np.all(np.isfinite(X)):
        raise ValueError("X has non-finite entries")
    return X


def _weights(h: Hypergraph, p: LayerParams) -> np.ndarray:
    if p.edge_weights is None:
        return h.weights
    if p.edge_weights.shape != (len(h.hyperedges),):
        raise ValueError(f"shape mismatch: {p.edge_weights.shape[0]} edge weights "
                         f"for {len(h.hyperedges)} edges")
    return p.edge_weights


def _preactivation(H: sp.csr_array, w: np.ndarray, X: np.ndarray, theta: np.ndarray) -> np.ndarray:
    if X.shape[1] != theta.shape[0]:
        raise ValueError(f"shape mismatch: X is {X.shape}, theta is {theta.shape}")
    dv, de = sl.degrees_from_incidence(H, w)
    dv_is = sl.pinv(dv, 0.5)
    # normalized incidence: D_V^-1/2 H W D_E^-1, same sparsity as H
    H_norm = sl.scale_rows(sl.scale_cols(H, w * sl.pinv(de)), dv_is)
    S = sl.spmm(H.T.tocsr(), dv_is[:, None] * X)
    M = sl.spmm(H_norm, S)
    return M @ theta


def hgnn_convolve(h: Hypergraph, X, p: LayerParams) -> np.ndarray:
    """Hypergraph convolution ``sigma(D_V^-1/2 H W D_E^-1 H^T D_V^-1/2 X Theta)``."""
    X = _check_features(X, len(h.vertices))
    return p.act(_preactivation(sl.incidence_matrix(h), _weights(h, p), X, p.theta))


def shgnn_convolve(shg: SuperHyperGraph | Hypergraph, X, p: LayerParams) -> np.ndarray:
    """Convolution on the expanded hypergraph.

    Steps: expand superedges to base-vertex hyperedges, build the sparse
    incidence, degrees, normalized incidence, then ``H^T (D_V^-1/2 X)``
    followed by the normalized incidence and ``Theta``.
    """
    return hgnn_convolve(as_hypergraph(shg), X, p)


def nshgnn_convolve(shg: SuperHyperGraph, X, p: LayerParams) -> np.ndarray:
    """n-level convolution through the recursive ``Expand`` of each whole superedge.

    Builds the incidence straight from ``Expand(e)`` in COO form instead of going
    through :class:`Hypergraph`; agrees with :func:`shgnn_convolve` for every level.
    """
    n = len(shg.base_vertices)
    X = _check_features(X, n)
    index = {v: i for i, v in enumerate(shg.base_vertices)}
    rows, cols = [], []
    for j, e in enumerate(shg.superedges):
        members = sorted(index[v] for v in expand_element(Nest(e.members)))
        rows.extend(members)
        cols.extend([j] * len(members))
    H = sl.csr(n, len(shg.superedges), rows, cols, np.ones(len(rows)))
    w = (np.array([e.weight for e in shg.superedges], dtype=float)
         if p.edge_weights is None else p.edge_weights)
    if w.shape != (len(shg.superedges),):
        raise ValueError("shape mismatch: edge weights vs superedges")
    return p.act(_preactivation(H, w, X, p.theta))


def forward(shg: SuperHyperGraph | Hypergraph, X, net: NetworkConfig) -> np.ndarray:
    h = as_hypergraph(shg)
    out = np.atleast_2d(np.asarray(X, dtype=float))
    for p in net.layers:
        out = hgnn_convolve(h, out, p)
    if net.readout == "softmax":
        out = sl.softmax_rows(out)
    return out


def grad_theta(shg: SuperHyperGraph | Hypergraph, X, p: LayerParams, upstream) -> np.ndarray:
    """Gradient of ``<upstream, Y>`` with respect to ``Theta`` for one layer."""
    h = as_hypergraph(shg)
    X = _check_features(X, len(h.vertices))
    upstream = np.asarray(upstream, dtype=float)
    H = sl.incidence_matrix(h)
    w = _weights(h, p)
    PX = sl.propagate(H, w, X)
    Z = PX @ p.theta
    if upstream.shape != Z.shape:
        raise ValueError(f"shape mismatch: upstream {upstream.shape} vs output {Z.shape}")
    return PX.T @ (upstream * p.act_grad(Z))


# --- attention --------------------------------------------------------------

def _edge_means(h: Hypergraph, X: np.ndarray) -> np.ndarray:
    U = np.zeros((len(h.hyperedges), X.shape[1]))
    for j, members in enumerate(h.edge_indices()):
        if members:
            U[j] = X[members].mean(axis=0)
    return U


def attention_incidence(g: SuperHyperGraph | Hypergraph, X, a, theta,
                        slope: float = 0.01) -> sp.csr_array:
    """Incidence matrix whose entry ``(i, j)`` is the attention of vertex ``i`` on edge ``j``.

    Logits are ``LeakyReLU(a . [x_i Theta || u_j Theta])`` with ``u_j`` the mean
    member feature; each vertex's logits are softmax-normalized over its
    incident edges.
    """
    h = as_hypergraph(g)
    X = _check_features(X, len(h.vertices))
    theta = np.atleast_2d(np.asarray(theta, dtype=float))
    a = np.asarray(a, dtype=float).ravel()
    if X.shape[1] != theta.shape[0]:
        raise ValueError(f"shape mismatch: X is {X.shape}, theta is {theta.shape}")
    dp = theta.shape[1]
    if a.shape[0] != 2 * dp:
        raise ValueError(f"shape mismatch: a has length {a.shape[0]}, expected {2 * dp}")
    Xp = X @ theta
    Up = _edge_means(h, X) @ theta
    vertex_score = Xp @ a[:dp]
    edge_score = Up @ a[dp:]
    H = sl.incidence_matrix(h)
    rows = np.repeat(np.arange(H.shape[0]), np.diff(H.indptr))
    logits = sl.leaky_relu(vertex_score[rows] + edge_score[H.indices], slope)
    vals = np.empty_like(logits)
    for i in range(H.shape[0]):
        lo, hi = H.indptr[i], H.indptr[i + 1]
        if hi > lo:
            z = np.exp(logits[lo:hi] - logits[lo:hi].max())
            vals[lo:hi] = z / z.sum()
    out = sp.csr_array((vals, H.indices.copy(), H.indptr.copy()), shape=H.shape)
    out.sort_indices()
    return out


def attention_convolve(g: SuperHyperGraph | Hypergraph, X, a, theta, slope: float = 0.01,
                       activation: str = "identity") -> np.ndarray:
    """``sigma(D_v^-1 Ht W D_e^-1 Ht^T X)`` with degrees taken from the crisp incidence."""
    h = as_hypergraph(g)
    X = _check_features(X, len(h.vertices))
    At = attention_incidence(h, X, a, theta, slope)
    dv, de = degrees(h)
    w = h.weights
    S = sl.spmm(At.T.tocsr(), X)
    S = (w * sl.pinv(de))[:, None] * S
    Z = sl.pinv(dv)[:, None] * sl.spmm(At, S)
    return LayerParams(np.eye(1), activation=activation, slope=slope).act(Z)


def degrees(h: Hypergraph):
    return sl.degrees(h)


# --- dynamic construction ---------------------------------------------------

def dynamic_construct(X, cfg: DynamicConfig, names: Sequence[str] | None = None
                      ) -> SuperHyperGraph:
    """Level-1 superhypergraph from feature clusters.

    Supervertices are the ``s`` k-means clusters of the rows of ``X``; superedges
    group the ``s`` centroids into ``t`` clusters.  Clusters are numbered by their
    lowest member index, and edges carry unit weight.
    """
    X = np.atleast_2d(np.asarray(X, dtype=float))
    n = X.shape[0]
    if names is None:
        names = [f"v{i + 1}" for i in range(n)]
    if len(names) != n:
        raise ValueError("names must match the rows of X")
    if cfg.s > n:
        raise ValueError(f"s={cfg.s} exceeds the number of base vertices {n}")
    labels, _ = kmeans(X, cfg.s, cfg.seed, cfg.kmeans_iters)
    labels = relabel_by_first_member(labels)
    supervertices = [Nest(tuple(Leaf(names[i]) for i in np.flatnonzero(labels == c)))
                     for c in range(cfg.s)]
    centroids = np.stack([X[labels == c].mean(axis=0) for c in range(cfg.s)])
    groups, _ = kmeans(centroids, cfg.t, cfg.seed, cfg.kmeans_iters)
    groups = relabel_by_first_member(groups)
    superedges = [Superedge(tuple(supervertices[c] for c in np.flatnonzero(groups == g)), 1.0, g)
                  for g in range(cfg.t)]
    return SuperHyperGraph(tuple(names), 1, tuple(supervertices), tuple(superedges))


def dshgnn_forward(X0, layers: Sequence[tuple[DynamicConfig, LayerParams]],
                   names: Sequence[str] | None = None) -> np.ndarray:
    X = np.atleast_2d(np.asarray(X0, dtype=float))
    for cfg, p in layers:
        shg = dynamic_construct(X, cfg, names)
        X = shgnn_convolve(shg, X, p)
    return X


__all__ = [
    "ACTIVATIONS", "LayerParams", "NetworkConfig", "DynamicConfig", "hgnn_convolve",
    "shgnn_convolve", "nshgnn_convolve", "forward", "grad_theta", "attention_incidence",
    "attention_convolve", "dynamic_construct", "dshgnn_forward",
]
