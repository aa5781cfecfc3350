"""Multilevel k-way partitioning, spectral NCut clustering and degree centrality.

Balance is counted in base vertices: every part must hold between
``ceil(n / (k c))`` and ``floor(c n / k)`` of the ``n`` vertices.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from math import ceil, floor
from typing import Sequence

import numpy as np

from . import sparse as sl
from .core import Hypergraph, Hyperedge, SuperHyperGraph, expand, supervertex_hypergraph
from .kmeans import kmeans, relabel_by_first_member, rng_from_seed

OBJECTIVES = ("cut", "soed")
COARSEN_RATIO = 0.6
MAX_PASSES = 10
INITIAL_TRIES = 8


@dataclass(frozen=True)
class PassRecord:
    level: int
    index: int
    before: float
    after: float
    violation_before: int
    violation_after: int


@dataclass(frozen=True)
class Partition:
    vertices: tuple[str, ...]
    assignment: tuple[int, ...]
    k: int
    c: float = 1.0
    objective: str = "cut"
    history: tuple[PassRecord, ...] = ()

    def parts(self) -> list[list[str]]:
        out: list[list[str]] = [[] for _ in range(self.k)]
        for v, p in zip(self.vertices, self.assignment):
            out[p].append(v)
        return out

    def sizes(self) -> np.ndarray:
        return np.bincount(np.asarray(self.assignment, dtype=int), minlength=self.k)


@dataclass(frozen=True)
class CoarseLevel:
    coarse: Hypergraph
    mapping: np.ndarray
    vertex_weights: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=int))


def balance_bounds(n: int, k: int, c: float) -> tuple[int, int]:
    return ceil(n / (k * c) - 1e-12), floor(c * n / k + 1e-12)


def _assignment_vector(h: Hypergraph, p: Partition | Sequence[int]) -> np.ndarray:
    if isinstance(p, Partition):
        if p.vertices != h.vertices:
            missing = set(h.vertices) - set(p.vertices)
            if missing:
                raise ValueError(f"partition does not cover vertices {sorted(missing)}")
            lookup = dict(zip(p.vertices, p.assignment))
            return np.array([lookup[v] for v in h.vertices], dtype=int)
        return np.asarray(p.assignment, dtype=int)
    a = np.asarray(p, dtype=int)
    if a.shape != (len(h.vertices),):
        raise ValueError("assignment does not cover every vertex")
    return a


def spans(h: Hypergraph, p) -> np.ndarray:
    a = _assignment_vector(h, p)
    return np.array([len(set(a[m].tolist())) for m in h.edge_indices()], dtype=int)


def cut_objective(h: Hypergraph, p) -> float:
    lam = spans(h, p)
    return float(np.sum(h.weights * np.maximum(lam - 1, 0)))


def soed_objective(h: Hypergraph, p) -> float:
    lam = spans(h, p)
    return float(np.sum(h.weights * np.where(lam > 1, lam, 0)))


def weighted_cut(h: Hypergraph, p) -> float:
    """Total weight of 2-vertex edges whose endpoints lie in different parts."""
    a = _assignment_vector(h, p)
    total = 0.0
    for e, m in zip(h.hyperedges, h.edge_indices()):
        if len(m) != 2:
            raise ValueError(f"edge {e.id} is not a 2-vertex edge")
        if a[m[0]] != a[m[1]]:
            total += e.weight
    return total


def objective_value(h: Hypergraph, p, objective: str = "cut") -> float:
    if objective == "cut":
        return cut_objective(h, p)
    if objective == "soed":
        return soed_objective(h, p)
    raise ValueError(f"unknown objective {objective!r}")


# --- internal weighted hypergraph ------------------------------------------

@dataclass
class _Level:
    vw: np.ndarray                 # vertex weights (base vertex counts)
    edges: list[np.ndarray]        # member index arrays
    ew: np.ndarray                 # edge weights
    mapping: np.ndarray | None = None  # fine index -> this level's index

    @property
    def n(self) -> int:
        return len(self.vw)

    def incident(self) -> list[list[int]]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for j, e in enumerate(self.edges):
            for v in e:
                inc[v].append(j)
        return inc


def _contribution(lam: int, objective: str) -> int:
    if objective == "cut":
        return max(lam - 1, 0)
    return lam if lam > 1 else 0


def _heavy_edge_matching(lv: _Level, max_vw: int) -> np.ndarray:
    pair: list[dict[int, float]] = [dict() for _ in range(lv.n)]
    for e, w in zip(lv.edges, lv.ew):
        if len(e) < 2:
            continue
        s = w / (len(e) - 1)
        for u in e:
            for v in e:
                if u != v:
                    pair[u][v] = pair[u].get(v, 0.0) + s
    match = np.full(lv.n, -1, dtype=int)
    for u in range(lv.n):
        if match[u] >= 0:
            continue
        best, best_w = -1, 0.0
        for v in sorted(pair[u]):
            if match[v] >= 0 or lv.vw[u] + lv.vw[v] > max_vw:
                continue
            if pair[u][v] > best_w:
                best, best_w = v, pair[u][v]
        if best >= 0:
            match[u], match[best] = best, u
    mapping = np.full(lv.n, -1, dtype=int)
    nxt = 0
    for u in range(lv.n):
        if mapping[u] < 0:
            mapping[u] = nxt
            if match[u] >= 0:
                mapping[match[u]] = nxt
            nxt += 1
    return mapping


def _contract(lv: _Level, mapping: np.ndarray) -> _Level:
    nc = int(mapping.max()) + 1 if lv.n else 0
    vw = np.bincount(mapping, weights=lv.vw, minlength=nc).astype(int)
    merged: dict[tuple[int, ...], float] = {}
    for e, w in zip(lv.edges, lv.ew):
        key = tuple(sorted(set(mapping[e].tolist())))
        merged[key] = merged.get(key, 0.0) + float(w)
    keys = list(merged)
    return _Level(vw, [np.array(k, dtype=int) for k in keys],
                  np.array([merged[k] for k in keys], dtype=float), mapping)


def _coarsen_level(lv: _Level, max_vw: int) -> _Level | None:
    mapping = _heavy_edge_matching(lv, max_vw)
    nc = int(mapping.max()) + 1 if lv.n else 0
    if nc == lv.n or nc > ceil(lv.n * COARSEN_RATIO):
        return None
    return _contract(lv, mapping)


def _level_from(h: Hypergraph) -> _Level:
    return _Level(np.ones(len(h.vertices), dtype=int),
                  [np.array(m, dtype=int) for m in h.edge_indices()], h.weights)


def coarsen(h: Hypergraph, max_vertex_weight: int | None = None) -> CoarseLevel:
    """One heavy-edge matching step; returns the input unchanged if it cannot shrink enough."""
    lv = _level_from(h)
    cap = max_vertex_weight if max_vertex_weight is not None else max(2, lv.n)
    coarse = _coarsen_level(lv, cap) if lv.n >= 2 else None
    if coarse is None:
        return CoarseLevel(h, np.arange(len(h.vertices)), lv.vw)
    names = ["+".join(h.vertices[i] for i in np.flatnonzero(coarse.mapping == c))
             for c in range(coarse.n)]
    ch = Hypergraph(tuple(names), tuple(Hyperedge(tuple(names[i] for i in e), w, j)
                                        for j, (e, w) in enumerate(zip(coarse.edges, coarse.ew))))
    return CoarseLevel(ch, coarse.mapping, coarse.vw)


# --- refinement --------------------------------------------------------------

class _State:
    """Pin counts and part weights for incremental gain evaluation."""

    def __init__(self, lv: _Level, a: np.ndarray, k: int, objective: str):
        self.lv, self.a, self.k, self.objective = lv, a.copy(), k, objective
        self.inc = lv.incident()
        self.pins = np.zeros((len(lv.edges), k), dtype=int)
        for j, e in enumerate(lv.edges):
            for v in e:
                self.pins[j, self.a[v]] += 1
        self.W = np.bincount(self.a, weights=lv.vw, minlength=k).astype(int)

    def value(self) -> float:
        lam = (self.pins > 0).sum(axis=1)
        return float(sum(w * _contribution(int(l), self.objective)
                         for w, l in zip(self.lv.ew, lam)))

    def delta(self, v: int, b: int) -> float:
        a = self.a[v]
        d = 0.0
        for j in self.inc[v]:
            row = self.pins[j]
            lam = int((row > 0).sum())
            new = lam - (row[a] == 1) + (row[b] == 0)
            d += self.lv.ew[j] * (_contribution(new, self.objective)
                                  - _contribution(lam, self.objective))
        return d

    def move(self, v: int, b: int) -> None:
        a = self.a[v]
        for j in self.inc[v]:
            self.pins[j, a] -= 1
            self.pins[j, b] += 1
        self.W[a] -= self.lv.vw[v]
        self.W[b] += self.lv.vw[v]
        self.a[v] = b

    def violation(self, lo: int, hi: int) -> int:
        return int(np.sum(np.maximum(lo - self.W, 0) + np.maximum(self.W - hi, 0)))

    def neighbours(self, v: int) -> set[int]:
        out: set[int] = set()
        for j in self.inc[v]:
            out.update(self.lv.edges[j].tolist())
        out.discard(v)
        return out


def _rebalance(st: _State, lo: int, hi: int) -> None:
    """Greedy moves that strictly reduce the balance violation, cheapest first."""
    while st.violation(lo, hi) > 0:
        current = st.violation(lo, hi)
        best = None
        for v in range(st.lv.n):
            a = st.a[v]
            for b in range(st.k):
                if b == a:
                    continue
                wv = st.lv.vw[v]
                W = st.W.copy()
                W[a] -= wv
                W[b] += wv
                viol = int(np.sum(np.maximum(lo - W, 0) + np.maximum(W - hi, 0)))
                if viol >= current:
                    continue
                key = (viol, st.delta(v, b), v, b)
                if best is None or key < best:
                    best = key
        if best is None:
            return
        st.move(best[2], best[3])


def _fm_pass(st: _State, lo: int, hi: int) -> None:
    """One FM pass: tentative best-gain moves, then roll back to the best prefix."""
    slack = int(st.lv.vw.max()) if st.lv.n else 0
    version = np.zeros(st.lv.n, dtype=int)
    locked = np.zeros(st.lv.n, dtype=bool)
    heap: list[tuple[float, int, int, int]] = []

    def push(v: int):
        for b in range(st.k):
            if b != st.a[v]:
                heapq.heappush(heap, (st.delta(v, b), v, b, version[v]))

    for v in range(st.lv.n):
        push(v)
    best_key = (st.violation(lo, hi), st.value())
    moves: list[tuple[int, int]] = []
    best_len = 0
    cur = best_key[1]
    while heap:
        d, v, b, ver = heapq.heappop(heap)
        if locked[v] or ver != version[v] or b == st.a[v]:
            continue
        a, wv = st.a[v], st.lv.vw[v]
        if st.W[b] + wv > hi + slack or st.W[a] - wv < lo - slack or st.W[a] - wv <= 0:
            continue
        cur += st.delta(v, b)
        st.move(v, b)
        locked[v] = True
        moves.append((v, a))
        key = (st.violation(lo, hi), cur)
        if key < best_key:
            best_key, best_len = key, len(moves)
        for u in st.neighbours(v):
            if not locked[u]:
                version[u] += 1
                push(u)
    for v, a in reversed(moves[best_len:]):
        st.move(v, a)


def _refine(st: _State, lo: int, hi: int, level: int, history: list[PassRecord]) -> None:
    for i in range(MAX_PASSES):
        before = (st.violation(lo, hi), st.value())
        _fm_pass(st, lo, hi)
        after = (st.violation(lo, hi), st.value())
        history.append(PassRecord(level, i, before[1], after[1], before[0], after[0]))
        if not after < before:
            break


def _greedy_growth(lv: _Level, k: int, lo: int, hi: int, rng: np.random.Generator
                   ) -> np.ndarray:
    total = int(lv.vw.sum())
    targets = [total // k + (1 if p < total % k else 0) for p in range(k)]
    a = np.full(lv.n, k - 1, dtype=int)
    free = np.ones(lv.n, dtype=bool)
    inc = lv.incident()
    for p in range(k - 1):
        start_pool = np.flatnonzero(free)
        if start_pool.size == 0:
            break
        seed_v = int(start_pool[int(rng.integers(start_pool.size))])
        weight = 0
        conn = np.zeros(lv.n)
        current = seed_v
        while True:
            a[current] = p
            free[current] = False
            weight += int(lv.vw[current])
            for j in inc[current]:
                e = lv.edges[j]
                if len(e) > 1:
                    conn[e] += lv.ew[j] / (len(e) - 1)
            if weight >= targets[p]:
                break
            cand = np.flatnonzero(free & (lv.vw + weight <= hi))
            if cand.size == 0:
                break
            # strongest connection first, then the lowest index
            current = int(cand[np.argmax(conn[cand])])
    return a


def _initial(lv: _Level, k: int, lo: int, hi: int, objective: str, rng: np.random.Generator,
             history: list[PassRecord], level: int) -> _State:
    best: _State | None = None
    best_key = None
    for _ in range(INITIAL_TRIES):
        st = _State(lv, _greedy_growth(lv, k, lo, hi, rng), k, objective)
        _rebalance(st, lo, hi)
        trial: list[PassRecord] = []
        _refine(st, lo, hi, level, trial)
        key = (st.violation(lo, hi), st.value())
        if best_key is None or key < best_key:
            best, best_key, best_hist = st, key, trial
    history.extend(best_hist)
    return best


def _partition_hypergraph(h: Hypergraph, k: int, c: float, seed: int, objective: str
                          ) -> tuple[np.ndarray, list[PassRecord]]:
    n = len(h.vertices)
    if objective not in OBJECTIVES:
        raise ValueError(f"unknown objective {objective!r}")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= |V| = {n}, got k={k}")
    if c < 1:
        raise ValueError(f"imbalance c must be >= 1, got {c}")
    lo, hi = balance_bounds(n, k, c)
    if k * lo > n or k * hi < n or lo > hi:
        raise ValueError(f"infeasible balance: parts must hold {lo}..{hi} of {n} vertices")
    rng = rng_from_seed(seed)
    levels = [_level_from(h)]
    max_vw = max(2, hi // 3)
    while levels[-1].n > max(2 * k, 20):
        nxt = _coarsen_level(levels[-1], max_vw)
        if nxt is None:
            break
        levels.append(nxt)
    history: list[PassRecord] = []
    depth = len(levels) - 1
    st = _initial(levels[-1], k, lo, hi, objective, rng, history, depth)
    for lvl in range(depth, 0, -1):
        fine = levels[lvl - 1]
        a = st.a[levels[lvl].mapping]
        st = _State(fine, a, k, objective)
        _rebalance(st, lo, hi)
        _refine(st, lo, hi, lvl - 1, history)
    if st.violation(lo, hi) > 0:
        _rebalance(st, lo, hi)
    if st.violation(lo, hi) > 0:
        raise ValueError("could not reach the balance bound")
    return st.a, history


def multilevel_partition(g: SuperHyperGraph | Hypergraph, k: int, c: float = 1.0,
                         seed: int = 0, objective: str = "cut",
                         on_expanded: bool = False) -> Partition:
    """Coarsen, partition the coarsest level by seeded greedy growth, then refine with FM.

    A superhypergraph is partitioned over its supervertices, or over the base
    vertices of its expansion when ``on_expanded`` is set.
    """
    if isinstance(g, SuperHyperGraph):
        h = expand(g) if on_expanded else supervertex_hypergraph(g)
    else:
        h = g
    a, history = _partition_hypergraph(h, k, c, seed, objective)
    return Partition(h.vertices, tuple(int(x) for x in a), k, c, objective, tuple(history))


# --- spectral clustering ----------------------------------------------------

def ncut_value(h: Hypergraph, labels) -> float:
    """Hypergraph normalized cut: sum over clusters of cut(C) / vol(C)."""
    a = _assignment_vector(h, labels)
    dv, _ = sl.degrees(h)
    total = 0.0
    for cl in np.unique(a):
        inside = a == cl
        vol = float(dv[inside].sum())
        cut = 0.0
        for e, m in zip(h.hyperedges, h.edge_indices()):
            if not m:
                continue
            s = int(inside[m].sum())
            cut += e.weight * s * (len(m) - s) / len(m)
        if cut > 0:
            total += cut / vol if vol > 0 else np.inf
    return total


def spectral_embedding(h: Hypergraph, k: int) -> np.ndarray:
    L = sl.normalized_laplacian(h)
    if not isinstance(L, np.ndarray):
        raise ValueError(f"spectral clustering needs |V| <= {sl.DENSE_CAP}")
    _, vecs = np.linalg.eigh(L)
    U = vecs[:, :k]
    norms = np.linalg.norm(U, axis=1, keepdims=True)
    return np.where(norms > 0, U / np.where(norms > 0, norms, 1.0), 0.0)


def _sweep_cuts(h: Hypergraph):
    """Threshold splits of the degree-scaled second eigenvector."""
    dv, _ = sl.degrees(h)
    _, vecs = np.linalg.eigh(sl.normalized_laplacian(h))
    f = vecs[:, 1] * sl.pinv(dv, 0.5)
    order = np.argsort(f, kind="stable")
    for i in range(1, len(f)):
        labels = np.zeros(len(f), dtype=int)
        labels[order[i:]] = 1
        yield labels


def ncut_spectral(h: Hypergraph, k: int, seed: int = 0, restarts: int = 10) -> Partition:
    """Seeded k-means on the spectral embedding; the candidate with the lowest NCut wins.

    Candidates are the k-means restarts plus, for k = 2, every threshold split
    of the second eigenvector.
    """
    n = len(h.vertices)
    if n > sl.DENSE_CAP:
        raise ValueError(f"spectral clustering needs |V| <= {sl.DENSE_CAP}")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= {n}")
    U = spectral_embedding(h, k)
    rng = rng_from_seed(seed)
    candidates = [kmeans(U, k, int(rng.integers(2**63)))[0] for _ in range(restarts)]
    if k == 2 and n > 1:
        candidates.extend(_sweep_cuts(h))
    best, best_value = candidates[0], np.inf
    for labels in candidates:
        if len(np.unique(labels)) < k:
            continue
        value = ncut_value(h, labels)
        if value < best_value - 1e-12:
            best, best_value = labels, value
    labels = relabel_by_first_member(best)
    return Partition(h.vertices, tuple(int(x) for x in labels), k, float("inf"), "ncut")


def degree_centrality(g: SuperHyperGraph | Hypergraph) -> np.ndarray:
    """Weighted vertex degree of the (expanded) hypergraph."""
    h = expand(g) if isinstance(g, SuperHyperGraph) else g
    return sl.degrees(h)[0]
