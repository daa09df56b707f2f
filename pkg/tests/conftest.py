import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_matrix(rng, max_side=32, rank_deficient_fraction=0.3):
    """Random test matrix: tall, wide, or square; sometimes rank-deficient."""
    m = int(rng.integers(1, max_side + 1))
    n = int(rng.integers(1, max_side + 1))
    if rng.random() < rank_deficient_fraction and min(m, n) > 1:
        r = int(rng.integers(1, min(m, n)))
        return rng.standard_normal((m, r)) @ rng.standard_normal((r, n))
    return rng.standard_normal((m, n))


def random_symmetric(rng, max_side=24):
    n = int(rng.integers(1, max_side + 1))
    b = rng.standard_normal((n, n))
    return (b + b.T) / 2.0
