"""Dimensionality reduction from first principles: PCA, SVD, and rank-k
image compression on dense real matrices, with a benchmark harness for the
trade-offs between the two decompositions.
"""

from .bench import (
    BenchReport,
    BenchRow,
    StabilityReport,
    centering_sensitivity,
    energy_captured,
    reconstruction_error,
    run_benchmark,
    stability_experiment,
)
from .eigen import EigenDecomposition, sym_eig
from .image_io import flatten_images, read_pgm, read_ppm, write_pgm, write_ppm
from .linalg import frobenius_norm, matmul, matrix_from_csv, matrix_to_csv, transpose
from .lowrank import TruncatedFactors, TruncatedSVD, reconstruct, storage_cost, truncate
from .pca import PCA, covariance, mean_center
from .svd import SvdFactors, rank_of, svd

__version__ = "0.1.0"

__all__ = [
    "BenchReport",
    "BenchRow",
    "EigenDecomposition",
    "PCA",
    "StabilityReport",
    "SvdFactors",
    "TruncatedFactors",
    "TruncatedSVD",
    "centering_sensitivity",
    "covariance",
    "energy_captured",
    "flatten_images",
    "frobenius_norm",
    "matmul",
    "matrix_from_csv",
    "matrix_to_csv",
    "mean_center",
    "rank_of",
    "read_pgm",
    "read_ppm",
    "reconstruct",
    "reconstruction_error",
    "run_benchmark",
    "stability_experiment",
    "storage_cost",
    "svd",
    "sym_eig",
    "transpose",
    "truncate",
    "write_pgm",
    "write_ppm",
]
