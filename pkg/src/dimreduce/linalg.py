"""Elementary dense-matrix operations and the CSV matrix interchange format.

Matrices are plain float64 ``numpy`` arrays in row-major order. Operations
return new arrays and never mutate their inputs, so values are safe to share
across threads.
"""

from __future__ import annotations

import numpy as np

from .errors import CsvFormatError, DimensionMismatchError
from .validation import check_matrix


def matmul(a, b) -> np.ndarray:
    """Standard real matrix product of *a* (m x k) and *b* (k x n)."""
    a = check_matrix(a, name="a")
    b = check_matrix(b, name="b")
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatchError(
            f"cannot multiply {a.shape[0]}x{a.shape[1]} by {b.shape[0]}x{b.shape[1]}"
        )
    return a @ b


def transpose(a) -> np.ndarray:
    """Transpose of *a*; element (i, j) of the result equals (j, i) of *a*."""
    a = check_matrix(a, name="a")
    return np.ascontiguousarray(a.T)


def frobenius_norm(a) -> float:
    """Square root of the sum of squared entries."""
    a = check_matrix(a, name="a")
    return float(np.sqrt(np.sum(np.square(a))))


def matrix_to_csv(a) -> str:
    """Render a matrix as CSV: one line per row, no header, ``\\n`` separators.

    Values use full round-trip decimal formatting, so parsing the output
    reproduces the matrix bit for bit.
    """
    a = check_matrix(a, name="a")
    lines = [",".join(repr(float(v)) for v in row) for row in a]
    return "\n".join(lines) + "\n"


def matrix_from_csv(text: str) -> np.ndarray:
    """Parse the CSV matrix format; accepts CRLF line endings."""
    rows = []
    width = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        fields = line.split(",")
        if width is None:
            width = len(fields)
        elif len(fields) != width:
            raise CsvFormatError(f"line {lineno} has {len(fields)} fields, expected {width}")
        try:
            rows.append([float(f) for f in fields])
        except ValueError:
            raise CsvFormatError(f"line {lineno} contains a non-numeric field") from None
    if not rows:
        raise CsvFormatError("no data rows found")
    return check_matrix(rows, name="csv matrix")
