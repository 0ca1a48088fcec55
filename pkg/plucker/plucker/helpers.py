"""This module defines helpers shared by the algorithms and the commands."""
import logging
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence, Tuple

import numpy as np
import sympy

IntMatrix = Tuple[Tuple[int, ...], ...]


@lru_cache(maxsize=None)
def binomial(n: int, k: int) -> int:
    """Memoized binomial coefficient, 0 outside of 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def lex_position(indices: Sequence[int], n: int) -> int:
    """
    0-based position of the strictly increasing 1-based tuple ``indices``
    among all ``len(indices)``-subsets of {1..n} in lexicographic order.

    No validation happens here, see :func:`plucker.coordinates.lex_rank`.
    """
    k = len(indices)
    tail = sum(binomial(n - index, k - slot) for slot, index in enumerate(indices))
    return binomial(n, k) - 1 - tail


def sort_sign(indices: Iterable[int]) -> Tuple[int, Tuple[int, ...]]:
    """
    Returns the sign of the permutation sorting ``indices`` together with the
    sorted tuple. The sign is 0 when an index repeats.
    """
    values = tuple(indices)
    if len(set(values)) != len(values):
        return 0, tuple(sorted(values))
    inversions = sum(
        1
        for a in range(len(values))
        for b in range(a + 1, len(values))
        if values[a] > values[b]
    )
    return (-1) ** inversions, tuple(sorted(values))


def as_int_matrix(rows: Iterable[Iterable]) -> IntMatrix:
    return tuple(tuple(int(value) for value in row) for row in rows)


def identity_matrix(n: int) -> IntMatrix:
    return tuple(tuple(int(r == c) for c in range(n)) for r in range(n))


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Exact product of two integer matrices (object arrays keep big ints)."""
    if not a or not b or len(a[0]) != len(b):
        raise ValueError("matrix shapes do not match for multiplication")
    product = np.array(a, dtype=object).dot(np.array(b, dtype=object))
    return as_int_matrix(product.tolist())


def transpose(a: IntMatrix) -> IntMatrix:
    return tuple(zip(*a))


def determinant(rows: IntMatrix) -> int:
    """
    Exact determinant of a square integer matrix. Laplace expansion along the
    first row up to 4x4, fraction-free Bareiss elimination otherwise.
    """
    size = len(rows)
    if size == 0:
        return 1
    if size == 1:
        return rows[0][0]
    if size == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if size <= 4:
        total = 0
        for column, value in enumerate(rows[0]):
            if value:
                minor = tuple(row[:column] + row[column + 1 :] for row in rows[1:])
                total += (-1) ** column * value * determinant(minor)
        return total
    return int(sympy.Matrix(rows).det(method="bareiss"))


def unimodular_inverse(rows: IntMatrix) -> IntMatrix:
    """
    Exact inverse of an integer matrix with determinant ±1, which is again
    an integer matrix.
    """
    matrix = sympy.Matrix(rows)
    det = determinant(rows)
    if abs(det) != 1:
        raise ValueError(f"matrix has determinant {det}, expected ±1")
    return as_int_matrix(matrix.inv().tolist())


class Logger:
    """
    Additional log message pre-processing.

    Loggers are created with the name of the module using them; every
    message is prefixed with that namespace and sent to the ``plucker``
    logger configured in ``settings.LOGGING``.
    """

    def __init__(self, namespace):
        self.logger = logging.getLogger("plucker")
        self.namespace = namespace

    def fmt(self, msg):
        return f'{self.namespace}: "{msg}"'

    # typical logging.Logger mock methods

    def debug(self, msg):
        self.logger.debug(self.fmt(msg))

    def info(self, msg):
        self.logger.info(self.fmt(msg))

    def warning(self, msg):
        self.logger.warning(self.fmt(msg))

    def error(self, msg):
        self.logger.error(self.fmt(msg))

    def exception(self, msg):
        self.logger.exception(self.fmt(msg))
