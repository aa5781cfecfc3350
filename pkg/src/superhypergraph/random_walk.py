"""Random walks on hypergraphs and superhypergraphs.

One step from ``v`` picks an incident edge with probability proportional to
its weight, then a member of that edge with probability proportional to the
edge's vertex-selection weights (uniform unless given).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Mapping, Sequence

import numpy as np
from scipy.sparse import csr_array
from scipy.sparse.csgraph import breadth_first_order, connected_components

from .core import Hypergraph, SuperHyperGraph, supervertex_hypergraph
from .kmeans import rng_from_seed

DANGLING = ("error", "lazy")


@dataclass(frozen=True)
class TransitionKernel:
    states: tuple[str, ...]
    P: np.ndarray
    selection: str = "uniform"

    def __post_init__(self):
        P = np.asarray(self.P, dtype=float)
        n = len(self.states)
        if P.shape != (n, n):
            raise ValueError(f"kernel shape {P.shape} does not match {n} states")
        if np.any(P < 0) or not np.all(np.isfinite(P)):
            raise ValueError("kernel entries must be finite and non-negative")
        if n and np.max(np.abs(P.sum(axis=1) - 1.0)) > 1e-12:
            raise ValueError("kernel rows must sum to 1")
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "P", P)

    def index(self, state: str) -> int:
        try:
            return self.states.index(state)
        except ValueError:
            raise ValueError(f"unknown state {state!r}") from None


@dataclass(frozen=True)
class WalkConfig:
    start: str
    steps: int
    seed: int

    def __post_init__(self):
        if self.steps < 0:
            raise ValueError("steps must be >= 0")


def _membership(g: SuperHyperGraph | Hypergraph) -> tuple[list[str], list[list[int]], np.ndarray]:
    h = supervertex_hypergraph(g) if isinstance(g, SuperHyperGraph) else g
    return list(h.vertices), h.edge_indices(), h.weights


def transition_kernel(g: SuperHyperGraph | Hypergraph,
                      gamma: Mapping[int, Mapping[str, float]] | None = None,
                      dangling: str = "error") -> TransitionKernel:
    """Kernel on the vertices of a hypergraph or the supervertices of a superhypergraph.

    ``gamma`` maps an edge position to per-state selection weights; edges not
    listed select uniformly.  ``dangling`` is ``"error"`` or ``"lazy"`` (stay put).
    """
    if dangling not in DANGLING:
        raise ValueError(f"dangling policy must be one of {DANGLING}")
    states, members, w = _membership(g)
    n = len(states)
    if np.any(w < 0):
        raise ValueError("edge weights must be non-negative")
    gamma = dict(gamma or {})
    P = np.zeros((n, n))
    incident_weight = np.zeros(n)
    incident_count = np.zeros(n, dtype=int)
    for j, row in enumerate(members):
        for v in row:
            incident_weight[v] += w[j]
            incident_count[v] += 1
    selection = np.zeros(len(members), dtype=object)
    for j, row in enumerate(members):
        if j in gamma:
            gj = np.array([float(gamma[j].get(states[u], 0.0)) for u in row])
            if np.any(gj < 0) or (row and gj.sum() <= 0):
                raise ValueError(f"edge {j}: selection weights must be non-negative, not all zero")
            selection[j] = gj / gj.sum() if row else gj
        else:
            selection[j] = np.full(len(row), 1.0 / len(row)) if row else np.zeros(0)
    for v in range(n):
        if incident_count[v] == 0:
            if dangling == "error":
                raise ValueError(f"dangling state {states[v]!r} has no incident edge")
            P[v, v] = 1.0
            continue
        if incident_weight[v] <= 0:
            raise ValueError(f"all edges incident to {states[v]!r} have zero weight")
    for j, row in enumerate(members):
        if not row or w[j] == 0:
            continue
        for v in row:
            P[v, row] += (w[j] / incident_weight[v]) * selection[j]
    # absorb rounding so rows are stochastic to the last bit we can manage
    sums = P.sum(axis=1, keepdims=True)
    P = P / np.where(sums > 0, sums, 1.0)
    return TransitionKernel(tuple(states), P, "weighted" if gamma else "uniform")


def simulate(k: TransitionKernel, cfg: WalkConfig) -> list[str]:
    """Seeded trajectory of length ``steps + 1`` using inverse-CDF sampling per row."""
    rng = rng_from_seed(cfg.seed)
    i = k.index(cfg.start)
    cdf = np.cumsum(k.P, axis=1)
    last_positive = np.array([int(np.flatnonzero(row > 0)[-1]) for row in k.P], dtype=int)
    out = [k.states[i]]
    for _ in range(cfg.steps):
        u = rng.random() * cdf[i, -1]
        j = int(np.searchsorted(cdf[i], u, side="right"))
        i = min(j, last_positive[i])
        out.append(k.states[i])
    return out


def _period(A: csr_array) -> int:
    """Period of a strongly connected digraph from BFS levels."""
    order, pred = breadth_first_order(A, 0, directed=True, return_predecessors=True)
    level = np.full(A.shape[0], -1)
    level[0] = 0
    for v in order[1:]:
        level[v] = level[pred[v]] + 1
    g = 0
    coo = A.tocoo()
    for u, v in zip(coo.row, coo.col):
        g = gcd(g, int(level[u] + 1 - level[v]))
    return g


def check_ergodic(k: TransitionKernel) -> None:
    n = len(k.states)
    if n == 0:
        raise ValueError("empty kernel")
    A = csr_array((k.P > 0).astype(float))
    ncomp, _ = connected_components(A, directed=True, connection="strong")
    if ncomp != 1:
        raise ValueError(f"chain is reducible ({ncomp} strong components)")
    p = _period(A)
    if p != 1:
        raise ValueError(f"chain is periodic (period {p})")


def stationary(k: TransitionKernel, tol: float = 1e-12, max_iter: int = 100_000) -> np.ndarray:
    """Stationary distribution by power iteration from the uniform vector."""
    check_ergodic(k)
    n = len(k.states)
    pi = np.full(n, 1.0 / n)
    for _ in range(max_iter):
        nxt = pi @ k.P
        nxt /= nxt.sum()
        if np.abs(nxt - pi).sum() <= tol:
            pi = nxt
            break
        pi = nxt
    else:
        raise ValueError(f"power iteration did not reach tolerance {tol} in {max_iter} steps")
    return pi


def stationary_residual(k: TransitionKernel, pi: np.ndarray) -> float:
    return float(np.abs(pi @ k.P - pi).sum())


def kernel_from_matrix(P: Sequence[Sequence[float]], states: Sequence[str] | None = None
                       ) -> TransitionKernel:
    P = np.asarray(P, dtype=float)
    if states is None:
        states = [f"s{i + 1}" for i in range(P.shape[0])]
    return TransitionKernel(tuple(states), P)
