"""Incidence matrices, degree vectors and the normalized hypergraph Laplacian.

Sparse matrices are ``scipy.sparse.csr_array`` with sorted indices and no
explicit zeros; diagonal matrices are 1-D ``float64`` arrays; dense matrices
are 2-D ``float64`` arrays.  Every reciprocal of a degree uses the
pseudo-inverse convention ``0 -> 0`` so isolated vertices and empty edges are
legal everywhere.
"""

from __future__ import annotations

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import LinearOperator

from .core import Hypergraph

DENSE_CAP = 4096


def csr(rows: int, cols: int, row_idx, col_idx, values) -> sp.csr_array:
    """Build a canonical CSR matrix (duplicates summed, zeros dropped, indices sorted)."""
    m = sp.coo_array((np.asarray(values, dtype=float),
                      (np.asarray(row_idx, dtype=np.int64), np.asarray(col_idx, dtype=np.int64))),
                     shape=(rows, cols)).tocsr()
    m.sum_duplicates()
    m.eliminate_zeros()
    m.sort_indices()
    return m


def incidence_matrix(h: Hypergraph) -> sp.csr_array:
    rows, cols = [], []
    for j, members in enumerate(h.edge_indices()):
        rows.extend(members)
        cols.extend([j] * len(members))
    return csr(len(h.vertices), len(h.hyperedges), rows, cols, np.ones(len(rows)))


def degrees_from_incidence(H: sp.csr_array, w: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Weighted row sums and unweighted column sums of an incidence matrix."""
    w = np.asarray(w, dtype=float)
    dv = H @ w if H.shape[1] else np.zeros(H.shape[0])
    de = np.asarray(H.sum(axis=0)).ravel() if H.shape[0] else np.zeros(H.shape[1])
    return np.asarray(dv, dtype=float), np.asarray(de, dtype=float)


def degrees(h: Hypergraph) -> tuple[np.ndarray, np.ndarray]:
    return degrees_from_incidence(incidence_matrix(h), h.weights)


def pinv(d: np.ndarray, power: float = 1.0) -> np.ndarray:
    """Elementwise ``d ** -power`` with ``0 -> 0``."""
    d = np.asarray(d, dtype=float)
    out = np.zeros_like(d)
    nz = d > 0
    out[nz] = d[nz] ** (-power)
    return out


def scale_rows(m, d: np.ndarray):
    """``diag(d) @ m`` for sparse or dense ``m``."""
    d = np.asarray(d, dtype=float)
    if d.shape[0] != m.shape[0]:
        raise ValueError(f"shape mismatch: diag of length {d.shape[0]} vs {m.shape[0]} rows")
    if sp.issparse(m):
        return sp.csr_array(sp.diags_array(d) @ m)
    return d[:, None] * m


def scale_cols(m, d: np.ndarray):
    """``m @ diag(d)`` for sparse or dense ``m``."""
    d = np.asarray(d, dtype=float)
    if d.shape[0] != m.shape[1]:
        raise ValueError(f"shape mismatch: diag of length {d.shape[0]} vs {m.shape[1]} cols")
    if sp.issparse(m):
        return sp.csr_array(m @ sp.diags_array(d))
    return m * d[None, :]


def spmm(a: sp.csr_array, b: np.ndarray) -> np.ndarray:
    b = np.asarray(b, dtype=float)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch: {a.shape} @ {b.shape}")
    if a.shape[1] == 0:
        return np.zeros((a.shape[0],) + b.shape[1:])
    return np.asarray(a @ b)


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a, b = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch: {a.shape} @ {b.shape}")
    return a @ b


def relu(m: np.ndarray) -> np.ndarray:
    return np.maximum(m, 0.0)


def leaky_relu(m: np.ndarray, slope: float = 0.01) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    return np.where(m >= 0, m, slope * m)


def softmax_rows(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.ndim == 1:
        return softmax_rows(m[None, :])[0]
    z = np.exp(m - m.max(axis=1, keepdims=True))
    return z / z.sum(axis=1, keepdims=True)


def propagate(H: sp.csr_array, w: np.ndarray, X: np.ndarray,
              dv: np.ndarray | None = None, de: np.ndarray | None = None) -> np.ndarray:
    """Apply ``D_V^-1/2 H W D_E^-1 H^T D_V^-1/2`` to ``X`` right-to-left.

    ``H^T (D_V^-1/2 X)`` is formed first; the ``n x n`` propagator is never
    materialized.
    """
    if dv is None or de is None:
        dv, de = degrees_from_incidence(H, w)
    X = np.asarray(X, dtype=float)
    if X.shape[0] != H.shape[0]:
        raise ValueError(f"shape mismatch: {X.shape[0]} feature rows for {H.shape[0]} vertices")
    dv_is = pinv(dv, 0.5)
    edge_scale = np.asarray(w, dtype=float) * pinv(de)
    S = spmm(H.T.tocsr(), dv_is[:, None] * X if X.ndim == 2 else dv_is * X)
    S = (edge_scale[:, None] * S) if S.ndim == 2 else edge_scale * S
    M = spmm(H, S)
    return (dv_is[:, None] * M) if M.ndim == 2 else dv_is * M


def propagator_from_incidence(H: sp.csr_array, w: np.ndarray, dense_cap: int = DENSE_CAP):
    """Dense propagator for ``n <= dense_cap``, else a ``LinearOperator``."""
    n = H.shape[0]
    dv, de = degrees_from_incidence(H, w)
    if n > dense_cap:
        return LinearOperator((n, n), matvec=lambda x: propagate(H, w, x, dv, de),
                              matmat=lambda X: propagate(H, w, X, dv, de), dtype=float)
    dv_is = pinv(dv, 0.5)
    A = scale_rows(scale_cols(H, np.asarray(w, dtype=float) * pinv(de)), dv_is)
    B = scale_rows(H, dv_is)
    P = (A @ B.T).toarray() if n else np.zeros((0, 0))
    # symmetric by construction; remove last-bit asymmetry from summation order
    return 0.5 * (P + P.T)


def laplacian_from_incidence(H: sp.csr_array, w: np.ndarray, dense_cap: int = DENSE_CAP):
    n = H.shape[0]
    P = propagator_from_incidence(H, w, dense_cap)
    if isinstance(P, LinearOperator):
        return LinearOperator((n, n), matvec=lambda x: x - P.matvec(x),
                              matmat=lambda X: X - P.matmat(X), dtype=float)
    return np.eye(n) - P


def normalized_propagator(h: Hypergraph, dense_cap: int = DENSE_CAP):
    return propagator_from_incidence(incidence_matrix(h), h.weights, dense_cap)


def normalized_laplacian(h: Hypergraph, dense_cap: int = DENSE_CAP):
    return laplacian_from_incidence(incidence_matrix(h), h.weights, dense_cap)


def coordinate_dump(m: sp.csr_array) -> str:
    """Debug dump as ``row col value`` triplets, one per line."""
    coo = sp.coo_array(m)
    order = np.lexsort((coo.col, coo.row))
    return "".join(f"{coo.row[i]} {coo.col[i]} {coo.data[i]:.17g}\n" for i in order)
