"""Thin singular value decomposition by one-sided Jacobi orthogonalization.

One-sided Jacobi rotates column pairs until all columns are mutually
orthogonal. It is simple, converges on any real matrix, and computes small
singular values with high relative accuracy, which the covariance-vs-SVD
stability experiment in :mod:`dimreduce.bench` depends on.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError
from .validation import check_matrix

MAX_SWEEPS = 60
_EPS = float(np.finfo(np.float64).eps)


@dataclass(frozen=True)
class SvdFactors:
    """Thin SVD ``u @ diag(sigma) @ v.T`` with ``rank`` retained columns.

    ``sigma`` is descending and strictly above the numerical-rank threshold
    max(m, n) * eps * sigma_max; columns beyond ``rank`` are discarded.
    Sign convention: each column of ``v`` has its largest-magnitude entry
    non-negative, with ``u`` signs following to preserve the product.
    """

    u: np.ndarray
    sigma: np.ndarray
    v: np.ndarray
    rank: int

    def __post_init__(self):
        self.u.setflags(write=False)
        self.sigma.setflags(write=False)
        self.v.setflags(write=False)


def _jacobi_orthogonalize(a: np.ndarray):
    """Core sweep loop on a tall matrix (m >= n).

    Returns (u, sigma, v) with n columns each, sigma descending (zeros
    included). Works on A.T so column operations touch contiguous rows.
    """
    m, n = a.shape
    at = np.ascontiguousarray(a.T)
    vt = np.eye(n)
    # Pair tolerance: relative orthogonality |a_p . a_q| <= tol * |a_p||a_q|.
    # The m*eps term keeps worst-case dot-product roundoff from stalling the
    # no-rotation stop on larger inputs. Norms are recomputed per pair rather
    # than cached: incremental updates cancel catastrophically on columns a
    # rotation drives to (near) zero, which rank-deficient inputs produce.
    tol = max(1e-14, m * _EPS)

    sweeps = 0
    while True:
        rotated = False
        for p in range(n - 1):
            ap = at[p]
            for q in range(p + 1, n):
                aq = at[q]
                gamma = float(ap @ aq)
                alpha = float(ap @ ap)
                beta = float(aq @ aq)
                if abs(gamma) <= tol * np.sqrt(alpha * beta):
                    continue
                rotated = True
                zeta = (beta - alpha) / (2.0 * gamma)
                t = 1.0 / (abs(zeta) + np.sqrt(1.0 + zeta * zeta))
                if zeta < 0.0:
                    t = -t
                c = 1.0 / np.sqrt(1.0 + t * t)
                sn = t * c
                new_p = c * ap - sn * aq
                at[q] = sn * ap + c * aq
                at[p] = new_p
                ap = at[p]
                vp = c * vt[p] - sn * vt[q]
                vt[q] = sn * vt[p] + c * vt[q]
                vt[p] = vp
        sweeps += 1
        if not rotated:
            break
        if sweeps >= MAX_SWEEPS:
            raise ConvergenceError(f"one-sided Jacobi SVD did not converge in {MAX_SWEEPS} sweeps")

    sigma = np.sqrt(np.einsum("ij,ij->i", at, at))
    order = np.argsort(-sigma, kind="stable")
    sigma = sigma[order]
    at = at[order]
    vt = vt[order]
    with np.errstate(invalid="ignore"):
        ut = np.divide(at, sigma[:, None], out=np.zeros_like(at), where=sigma[:, None] > 0.0)
    return ut.T, sigma, vt.T


def svd(x) -> SvdFactors:
    """Thin SVD of any real matrix.

    When the input is wide (m < n) the transpose is decomposed and the
    factors are swapped, so the iteration always runs on the tall
    orientation. Raises ConvergenceError if the sweep cap is hit.
    """
    a = check_matrix(x)
    m, n = a.shape
    if m >= n:
        u, sigma, v = _jacobi_orthogonalize(a)
    else:
        u, sigma, v = _jacobi_orthogonalize(np.ascontiguousarray(a.T))
        u, v = v, u

    tau = max(m, n) * _EPS * (float(sigma[0]) if sigma.size else 0.0)
    rank = int(np.count_nonzero(sigma > tau))
    u = np.ascontiguousarray(u[:, :rank])
    sigma = sigma[:rank].copy()
    v = np.ascontiguousarray(v[:, :rank])

    if rank:
        lead = np.argmax(np.abs(v), axis=0)
        flip = v[lead, np.arange(rank)] < 0.0
        v[:, flip] *= -1.0
        u[:, flip] *= -1.0
    return SvdFactors(u=u, sigma=sigma, v=v, rank=rank)


def rank_of(f: SvdFactors) -> int:
    """Numerical rank recorded in the factors."""
    return f.rank
