"""
Seeded random instances, shared by the ``random`` command and the tests so
that every instance can be regenerated from its seed.
"""
from typing import Optional, Tuple

import numpy as np

from plucker import settings
from plucker.coordinates import compute_plucker
from plucker.exceptions import (
    DimensionError,
    GenerationError,
    PluckerValidationError,
)
from plucker.helpers import Logger
from plucker.models import LatticeMatrix, PluckerVector, UnimodularTransform
from plucker.transforms import (
    column_swap,
    elementary_subtract,
    permutation_transform,
    rotation_transform,
    sign_flip,
)

logger = Logger(__name__)


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    if seed is None:
        seed = settings.RANDOM_SEED
    if seed < 0:
        raise PluckerValidationError(f"seed must be non-negative, got {seed}")
    return np.random.default_rng(seed)


def random_decomposable(
    k: int,
    n: int,
    bound: Optional[int] = None,
    rng: Optional[np.random.Generator] = None,
    attempts: Optional[int] = None,
    zero_free: bool = False,
) -> Tuple[LatticeMatrix, PluckerVector]:
    """
    A full-rank k x n integer matrix with entries in [-bound, bound] and its
    Plücker vector. With ``zero_free`` the vector has no zero coordinate.

    :raises GenerationError: if no draw out of ``attempts`` qualifies
    """
    bound = settings.RANDOM_BOUND if bound is None else bound
    attempts = settings.RANDOM_ATTEMPTS if attempts is None else attempts
    rng = make_rng() if rng is None else rng
    if k < 1 or n < k:
        raise DimensionError(f"no {k}x{n} lattice matrix of full rank exists")
    if bound < 1:
        raise PluckerValidationError(f"bound must be at least 1, got {bound}")
    for attempt in range(1, attempts + 1):
        rows = rng.integers(-bound, bound + 1, size=(k, n)).tolist()
        matrix = LatticeMatrix(rows)
        try:
            p = compute_plucker(matrix)
        except PluckerValidationError:
            continue
        if zero_free and 0 in p.entries:
            continue
        logger.debug(f"{k}x{n} instance found after {attempt} draws")
        return matrix, p
    raise GenerationError(f"no suitable {k}x{n} matrix in {attempts} draws")


def random_lattice_matrix(
    k: int,
    n: int,
    bound: Optional[int] = None,
    rng: Optional[np.random.Generator] = None,
    attempts: Optional[int] = None,
) -> LatticeMatrix:
    return random_decomposable(k, n, bound, rng, attempts)[0]


def random_transform(
    n: int, rng: np.random.Generator, bound: int = 5
) -> UnimodularTransform:
    """A random structured transform of dimension n >= 2."""
    s, t = (int(c) + 1 for c in rng.choice(n, size=2, replace=False))
    kind = int(rng.integers(5))
    if kind == 0:
        return elementary_subtract(n, s, t, int(rng.integers(-bound, bound + 1)))
    elif kind == 1:
        return column_swap(n, s, t)
    elif kind == 2:
        return sign_flip(n, s)
    elif kind == 3:
        return rotation_transform(n, int(rng.integers(1, n)))
    return permutation_transform(n, [int(c) + 1 for c in rng.permutation(n)])
