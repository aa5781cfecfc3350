"""Deterministic k-means with k-means++ seeding.

Fixed rules: PCG64 stream from the seed, inverse-CDF sampling for the
seeding draws, assignment ties go to the lowest centroid index, and an empty
cluster takes the point farthest from its current centroid among clusters
that can spare one (ties to the lowest point index).
"""

from __future__ import annotations

import numpy as np


def rng_from_seed(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(int(seed) & 0xFFFFFFFFFFFFFFFF))


def _sq_dists(X: np.ndarray, C: np.ndarray) -> np.ndarray:
    return ((X[:, None, :] - C[None, :, :]) ** 2).sum(axis=2)


def kmeans_pp(X: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    n = X.shape[0]
    chosen = [int(rng.integers(n))]
    d2 = _sq_dists(X, X[chosen]).min(axis=1)
    for _ in range(1, k):
        total = d2.sum()
        u = rng.random()
        if total > 0:
            idx = int(np.searchsorted(np.cumsum(d2) / total, u, side="right"))
            idx = min(idx, n - 1)
            while d2[idx] == 0:  # rounding at the top of the CDF
                idx -= 1
        else:
            free = [i for i in range(n) if i not in chosen]
            idx = free[min(int(u * len(free)), len(free) - 1)]
        chosen.append(idx)
        d2 = np.minimum(d2, _sq_dists(X, X[[idx]])[:, 0])
    return X[chosen].astype(float)


def _assign(X: np.ndarray, C: np.ndarray) -> np.ndarray:
    # argmin returns the first minimum, i.e. the lowest centroid index on ties
    return np.argmin(_sq_dists(X, C), axis=1)


def _repair(X: np.ndarray, C: np.ndarray, labels: np.ndarray, k: int) -> np.ndarray:
    labels = labels.copy()
    while True:
        counts = np.bincount(labels, minlength=k)
        empty = np.flatnonzero(counts == 0)
        if empty.size == 0:
            return labels
        dist = ((X - C[labels]) ** 2).sum(axis=1)
        donors = counts[labels] > 1
        dist = np.where(donors, dist, -np.inf)
        i = int(np.argmax(dist))
        labels[i] = empty[0]
        C = C.copy()
        C[empty[0]] = X[i]


def kmeans(X: np.ndarray, k: int, seed: int, max_iter: int = 100
           ) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(labels, centroids)``.  Requires ``1 <= k <= len(X)``."""
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X[:, None]
    n = X.shape[0]
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= {n}, got k={k}")
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    rng = rng_from_seed(seed)
    C = kmeans_pp(X, k, rng)
    labels = _repair(X, C, _assign(X, C), k)
    for _ in range(max_iter):
        C_new = np.stack([X[labels == j].mean(axis=0) for j in range(k)])
        new_labels = _repair(X, C_new, _assign(X, C_new), k)
        converged = np.array_equal(new_labels, labels)
        C, labels = C_new, new_labels
        if converged:
            break
    C = np.stack([X[labels == j].mean(axis=0) for j in range(k)])
    return labels, C


def relabel_by_first_member(labels: np.ndarray) -> np.ndarray:
    """Renumber clusters in order of their lowest member index."""
    mapping: dict[int, int] = {}
    for lab in labels:
        mapping.setdefault(int(lab), len(mapping))
    return np.array([mapping[int(lab)] for lab in labels], dtype=int)
