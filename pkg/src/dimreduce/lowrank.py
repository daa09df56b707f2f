"""Rank-k truncation of SVD factors and dense reconstruction.

By the Eckart-Young theorem the truncated SVD is the Frobenius-optimal
rank-k approximation, which makes ``reconstruct(truncate(svd(a), k))`` the
reference compressor for the benchmark module.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, InvalidRankError
from .svd import SvdFactors, svd
from .validation import check_matrix


@dataclass(frozen=True)
class TruncatedFactors:
    """Leading min(k, rank) singular triples plus the requested ``k``.

    When ``k`` exceeds the parent rank no zero columns are materialized; the
    requested ``k`` is kept for reporting (storage cost is quoted at ``k``).
    """

    u_k: np.ndarray
    sigma_k: np.ndarray
    v_k: np.ndarray
    k: int
    original_shape: tuple[int, int]

    def __post_init__(self):
        self.u_k.setflags(write=False)
        self.sigma_k.setflags(write=False)
        self.v_k.setflags(write=False)


def truncate(f: SvdFactors, k: int) -> TruncatedFactors:
    """Keep the top-k singular triples of *f* (capped at the numerical rank)."""
    m = f.u.shape[0]
    n = f.v.shape[0]
    if not 1 <= k <= min(m, n):
        raise InvalidRankError(f"rank must be in [1, {min(m, n)}] for a {m}x{n} matrix, got {k}")
    kept = min(k, f.rank)
    return TruncatedFactors(
        u_k=f.u[:, :kept].copy(),
        sigma_k=f.sigma[:kept].copy(),
        v_k=f.v[:, :kept].copy(),
        k=int(k),
        original_shape=(m, n),
    )


def reconstruct(t: TruncatedFactors) -> np.ndarray:
    """Dense rank-k approximation ``u_k @ diag(sigma_k) @ v_k.T``."""
    if t.sigma_k.size == 0:
        return np.zeros(t.original_shape)
    return (t.u_k * t.sigma_k) @ t.v_k.T


def storage_cost(t: TruncatedFactors) -> int:
    """Real values stored at the requested rank: k*(m + n + 1).

    The dense original costs m*n, so truncation only pays off for
    k < m*n/(m + n + 1).
    """
    m, n = t.original_shape
    return t.k * (m + n + 1)


class TruncatedSVD:
    """scikit-learn-style transformer onto the top right-singular directions.

    ``transform`` maps rows of X to ``X @ v_k``; ``inverse_transform`` maps
    scores back with ``v_k.T``. No centering is applied (SVD operates on the
    raw matrix).
    """

    def __init__(self, n_components: int = 2):
        self.n_components = n_components

    def get_params(self, deep: bool = True) -> dict:
        return {"n_components": self.n_components}

    def set_params(self, **params) -> "TruncatedSVD":
        for key, value in params.items():
            if key not in ("n_components",):
                raise ValueError(f"unknown parameter {key!r}")
            setattr(self, key, value)
        return self

    def fit(self, x, y=None) -> "TruncatedSVD":
        a = check_matrix(x)
        t = truncate(svd(a), int(self.n_components))
        self.factors_ = t
        self.components_ = t.v_k.T
        self.singular_values_ = t.sigma_k
        self.n_features_in_ = a.shape[1]
        return self

    def transform(self, x) -> np.ndarray:
        a = check_matrix(x)
        if a.shape[1] != self.n_features_in_:
            raise DimensionMismatchError(
                f"expected {self.n_features_in_} features, got {a.shape[1]}"
            )
        return a @ self.components_.T

    def inverse_transform(self, scores) -> np.ndarray:
        z = check_matrix(scores, name="scores")
        if z.shape[1] != self.components_.shape[0]:
            raise DimensionMismatchError(
                f"expected {self.components_.shape[0]} score columns, got {z.shape[1]}"
            )
        return z @ self.components_

    def fit_transform(self, x, y=None) -> np.ndarray:
        return self.fit(x).transform(x)
