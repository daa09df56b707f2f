"""Symmetric eigendecomposition by the cyclic Jacobi rotation method."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError
from .validation import check_matrix, check_square, check_symmetric

#: Convergence: off-diagonal Frobenius norm below this fraction of ||S||_F.
OFFDIAG_TOL = 1e-14
#: Hard cap on cyclic sweeps; far above observed counts (<= ~15 for n <= 256).
MAX_SWEEPS = 60


@dataclass(frozen=True)
class EigenDecomposition:
    """Orthonormal eigenvectors (columns of ``vectors``) with descending ``values``.

    Sign convention: in every eigenvector the entry of largest magnitude is
    non-negative (first such entry on magnitude ties).
    """

    vectors: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        self.vectors.setflags(write=False)
        self.values.setflags(write=False)


def sym_eig(s) -> EigenDecomposition:
    """Decompose a symmetric matrix as ``vectors @ diag(values) @ vectors.T``.

    The input is symmetrized as (S + S.T)/2 after an asymmetry check (per-entry
    tolerance 1e-9), then reduced by cyclic-by-row Jacobi rotations until the
    off-diagonal Frobenius norm falls to 1e-14 of the input norm.

    Raises NotSquareError, NotSymmetricError, or ConvergenceError (sweep cap
    hit; not expected for finite symmetric input).
    """
    a = check_symmetric(check_square(check_matrix(s, name="s")))
    n = a.shape[0]
    stop = OFFDIAG_TOL * float(np.sqrt(np.sum(np.square(a))))
    iu = np.triu_indices(n, 1)
    qt = np.eye(n)  # rows are the current eigenvector candidates

    sweeps = 0
    while True:
        off = float(np.sqrt(2.0 * np.sum(np.square(a[iu])))) if n > 1 else 0.0
        if off <= stop:
            break
        if sweeps >= MAX_SWEEPS:
            raise ConvergenceError(
                f"Jacobi eigensolver did not converge in {MAX_SWEEPS} sweeps "
                f"(off-diagonal {off:.3e}, stop {stop:.3e})"
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                # Smaller root of t^2 + 2*zeta*t - 1 = 0 keeps |t| <= 1 and
                # zeroes the (p, q) entry.
                zeta = (aqq - app) / (2.0 * apq)
                t = 1.0 / (abs(zeta) + np.sqrt(1.0 + zeta * zeta))
                if zeta < 0.0:
                    t = -t
                c = 1.0 / np.sqrt(1.0 + t * t)
                sn = t * c
                row_p = a[p].copy()
                row_q = a[q].copy()
                new_p = c * row_p - sn * row_q
                new_q = sn * row_p + c * row_q
                a[p] = new_p
                a[:, p] = new_p
                a[q] = new_q
                a[:, q] = new_q
                # Diagonal and pivot entries get the exact closed forms.
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                qp = c * qt[p] - sn * qt[q]
                qt[q] = sn * qt[p] + c * qt[q]
                qt[p] = qp
        sweeps += 1

    values = np.diagonal(a).copy()
    order = np.argsort(-values, kind="stable")
    values = values[order]
    vec_rows = qt[order]
    lead = np.argmax(np.abs(vec_rows), axis=1)
    flip = vec_rows[np.arange(n), lead] < 0.0
    vec_rows[flip] *= -1.0
    return EigenDecomposition(vectors=np.ascontiguousarray(vec_rows.T), values=values)
