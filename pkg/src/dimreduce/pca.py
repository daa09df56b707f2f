"""Principal component analysis: center, covariance, eigendecompose, project.

The estimator follows the scikit-learn protocol (``fit`` / ``transform`` /
``inverse_transform`` / ``get_params``) without depending on scikit-learn, so
it drops into pipelines while the package stays self-contained.
"""

from __future__ import annotations

import numpy as np

from .eigen import sym_eig
from .errors import (
    DegenerateSpectrumError,
    DimensionMismatchError,
    InsufficientSamplesError,
    InvalidComponentCountError,
)
from .validation import check_matrix


def mean_center(x):
    """Subtract per-column means; rows are samples, columns are features.

    Returns ``(centered, means)`` where every column of ``centered`` sums to
    zero up to roundoff.
    """
    a = check_matrix(x)
    means = a.mean(axis=0)
    return a - means, means


def covariance(x_c):
    """Sample covariance ``x_c.T @ x_c / (n_samples - 1)`` of centered data."""
    a = check_matrix(x_c, name="x_c")
    n_samples = a.shape[0]
    if n_samples < 2:
        raise InsufficientSamplesError(f"covariance needs at least 2 samples, got {n_samples}")
    return a.T @ a / (n_samples - 1)


class PCA:
    """Project data onto the leading eigenvectors of its covariance matrix.

    Parameters
    ----------
    n_components : int or None
        Number of principal directions to retain; ``None`` keeps all
        features.

    Attributes (after ``fit``)
    --------------------------
    mean_ : (n_features,) per-feature training means.
    components_ : (n_features, n_components) orthonormal direction columns.
    eigenvalues_ : all n_features covariance eigenvalues, descending,
        roundoff negatives clamped to zero.
    explained_variance_ratio_ : eigenvalues normalized to sum to 1 (full
        spectrum, not just the retained components). Accessing it on
        zero-variance data raises DegenerateSpectrumError.
    n_samples_, n_features_in_, n_components_ : fit-time dimensions.

    A fitted model is immutable and safe to share between threads.
    """

    def __init__(self, n_components: int | None = None):
        self.n_components = n_components

    def get_params(self, deep: bool = True) -> dict:
        return {"n_components": self.n_components}

    def set_params(self, **params) -> "PCA":
        for key, value in params.items():
            if key not in ("n_components",):
                raise ValueError(f"unknown parameter {key!r}")
            setattr(self, key, value)
        return self

    def fit(self, x, y=None) -> "PCA":
        a = check_matrix(x)
        n_samples, n_features = a.shape
        if n_samples < 2:
            raise InsufficientSamplesError(f"PCA needs at least 2 samples, got {n_samples}")
        s = n_features if self.n_components is None else int(self.n_components)
        if not 1 <= s <= n_features:
            raise InvalidComponentCountError(
                f"n_components must be in [1, {n_features}], got {s}"
            )
        centered, means = mean_center(a)
        decomp = sym_eig(covariance(centered))
        # Covariance is PSD in exact arithmetic; tiny negatives are roundoff.
        spectrum = np.where(decomp.values > 0.0, decomp.values, 0.0)

        self.mean_ = means
        self.components_ = np.ascontiguousarray(decomp.vectors[:, :s])
        self.eigenvalues_ = spectrum
        self.n_samples_ = n_samples
        self.n_features_in_ = n_features
        self.n_components_ = s
        self.mean_.setflags(write=False)
        self.components_.setflags(write=False)
        self.eigenvalues_.setflags(write=False)
        return self

    @property
    def explained_variance_ratio_(self) -> np.ndarray:
        total = float(self.eigenvalues_.sum())
        if total <= 0.0:
            raise DegenerateSpectrumError("total variance is zero (constant data)")
        return self.eigenvalues_ / total

    def transform(self, x) -> np.ndarray:
        """Score matrix ``(x - mean_) @ components_`` for new or training data."""
        a = check_matrix(x)
        if a.shape[1] != self.n_features_in_:
            raise DimensionMismatchError(
                f"expected {self.n_features_in_} features, got {a.shape[1]}"
            )
        return (a - self.mean_) @ self.components_

    def inverse_transform(self, scores) -> np.ndarray:
        """Map scores back to feature space: ``scores @ components_.T + mean_``."""
        z = check_matrix(scores, name="scores")
        if z.shape[1] != self.n_components_:
            raise DimensionMismatchError(
                f"expected {self.n_components_} score columns, got {z.shape[1]}"
            )
        return z @ self.components_.T + self.mean_

    def fit_transform(self, x, y=None) -> np.ndarray:
        return self.fit(x).transform(x)
