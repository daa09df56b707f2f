"""Input validation helpers shared by every estimator and kernel.

All public entry points funnel array-likes through these checks so the
numerical code can assume dense, finite, float64 data.
"""

from __future__ import annotations

import numpy as np

from .errors import NotSquareError, NotSymmetricError, ValidationError


def check_matrix(x, *, name: str = "x") -> np.ndarray:
    """Coerce *x* to a 2-D float64 array with >= 1 row/column, all finite.

    Always returns a fresh C-contiguous copy, so callers may mutate the
    result without aliasing the input.
    """
    try:
        a = np.array(x, dtype=np.float64, order="C", copy=True)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"{name} is not numeric: {exc}") from None
    if a.ndim != 2:
        raise ValidationError(f"{name} must be 2-dimensional, got ndim={a.ndim}")
    if a.shape[0] < 1 or a.shape[1] < 1:
        raise ValidationError(f"{name} must have at least one row and one column, got {a.shape}")
    if not np.isfinite(a).all():
        raise ValidationError(f"{name} contains non-finite values")
    return a


def check_vector(v, *, name: str = "v") -> np.ndarray:
    """Coerce *v* to a 1-D float64 array of length >= 1, all finite."""
    try:
        a = np.array(v, dtype=np.float64, copy=True)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"{name} is not numeric: {exc}") from None
    if a.ndim != 1:
        raise ValidationError(f"{name} must be 1-dimensional, got ndim={a.ndim}")
    if a.shape[0] < 1:
        raise ValidationError(f"{name} must have at least one element")
    if not np.isfinite(a).all():
        raise ValidationError(f"{name} contains non-finite values")
    return a


def check_square(a: np.ndarray, *, name: str = "s") -> np.ndarray:
    if a.shape[0] != a.shape[1]:
        raise NotSquareError(f"{name} must be square, got {a.shape[0]}x{a.shape[1]}")
    return a


def check_symmetric(a: np.ndarray, *, tol: float = 1e-9, name: str = "s") -> np.ndarray:
    """Verify per-entry symmetry within *tol* and return (a + a.T) / 2."""
    asym = float(np.max(np.abs(a - a.T))) if a.size else 0.0
    if asym > tol:
        raise NotSymmetricError(f"{name} deviates from symmetry by {asym:.3e} (tolerance {tol:.0e})")
    return (a + a.T) / 2.0
