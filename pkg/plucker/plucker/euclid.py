"""
Subtractive subroutines: the Euclidean algorithm with its regular continued
fraction and 2x2 step matrices, and the Jacobi-Perron algorithm with its
GL(m,Z) step matrices.

Quotients are floored (rounded toward -infinity), so remainders lie in
[0, divisor) for positive divisors.
"""
from fractions import Fraction
from typing import List, Sequence, Tuple

import attr

from plucker.exceptions import DescentViolation, PluckerValidationError
from plucker.helpers import IntMatrix, Logger, as_int_matrix, identity_matrix, matmul

logger = Logger(__name__)


@attr.s(frozen=True, slots=True)
class EuclidResult:
    """
    ``matrices`` are the steps [[0, 1], [1, -a_i]] mapping (p_i, q_i) to
    (q_i, p_i - a_i q_i); their product maps the input to (±gcd, 0).
    """

    gcd = attr.ib(converter=int)
    quotients = attr.ib(converter=tuple, default=())
    matrices = attr.ib(converter=tuple, default=())

    @property
    def matrix(self) -> IntMatrix:
        """The product of the step matrices, last step leftmost."""
        total = identity_matrix(2)
        for step in self.matrices:
            total = matmul(step, total)
        return total


@attr.s(frozen=True, slots=True)
class JacobiPerronResult:
    """
    ``matrix`` maps the input to (gcd, 0, ..., 0). It includes the initial
    sign normalization, recorded separately in ``signs``.
    """

    gcd = attr.ib(converter=int)
    elements = attr.ib(converter=tuple, default=())
    matrix = attr.ib(converter=as_int_matrix, default=())
    signs = attr.ib(converter=tuple, default=())


def euclid_cf(p0: int, q0: int) -> EuclidResult:
    """
    Runs (p, q) -> (q, p - a*q) with a = floor(p/q) until q = 0.

    :raises PluckerValidationError: if both inputs are zero
    """
    if p0 == 0 and q0 == 0:
        raise PluckerValidationError("the Euclidean algorithm needs a nonzero pair")
    p, q = int(p0), int(q0)
    quotients: List[int] = []
    matrices: List[IntMatrix] = []
    while q != 0:
        a = p // q
        p, q = q, p - a * q
        if q and abs(q) >= abs(p):
            raise DescentViolation(
                f"Euclid remainder {q} did not decrease below {p}", step=len(quotients)
            )
        quotients.append(a)
        matrices.append(((0, 1), (1, -a)))
    return EuclidResult(abs(p), quotients, matrices)


def continued_fraction_value(quotients: Sequence[int]) -> Fraction:
    """The exact value of [a_0; a_1 : ... : a_N] by back-substitution."""
    if not quotients:
        raise PluckerValidationError("an empty continued fraction has no value")
    value = Fraction(quotients[-1])
    for a in reversed(quotients[:-1]):
        value = a + 1 / value
    return value


def _swap_matrix(m: int, s: int, t: int) -> IntMatrix:
    rows = [list(row) for row in identity_matrix(m)]
    rows[s - 1], rows[t - 1] = rows[t - 1], rows[s - 1]
    return as_int_matrix(rows)


def _step_matrix(m: int, length: int, quotients: Tuple[int, ...]) -> IntMatrix:
    # rows: x_2; x_j - a_j x_2 for j = 3..L; x_1 - a_1 x_2
    *middle, a_1 = quotients
    rows = [list(row) for row in identity_matrix(m)]
    rows[0] = [int(c == 1) for c in range(m)]
    for slot, a_j in enumerate(middle, start=2):
        rows[slot - 1] = [int(c == slot) for c in range(m)]
        rows[slot - 1][1] -= a_j
    rows[length - 1] = [int(c == 0) for c in range(m)]
    rows[length - 1][1] -= a_1
    return as_int_matrix(rows)


def jacobi_perron(x: Sequence[int]) -> JacobiPerronResult:
    """
    Reduces the integer vector x to (gcd, 0, ..., 0).

    Negative entries are first made non-negative by sign flips. Then, on the
    active slots 1..L, each step sends

        (x_1, x_2, x_3, .., x_L) -> (x_2, x_3 mod x_2, .., x_L mod x_2, x_1 mod x_2)

    recording the quotients (a_3, .., a_L, a_1). When x_2 is zero it is
    swapped with slot L and L shrinks by one. The pair (L, x_2) strictly
    decreases lexicographically, which bounds the number of steps.

    :raises PluckerValidationError: if x is the zero vector
    """
    values = [int(value) for value in x]
    if not any(values):
        raise PluckerValidationError(
            "the Jacobi-Perron algorithm needs a nonzero vector"
        )
    m = len(values)
    signs = tuple(-1 if value < 0 else 1 for value in values)
    values = [abs(value) for value in values]
    matrix = as_int_matrix(
        [[signs[r] if r == c else 0 for c in range(m)] for r in range(m)]
    )
    elements = []
    length = m
    while length > 1:
        potential = (length, values[1])
        if values[1] == 0:
            if values[length - 1]:
                values[1], values[length - 1] = values[length - 1], values[1]
                matrix = matmul(_swap_matrix(m, 2, length), matrix)
            length -= 1
            continue
        divisor = values[1]
        quotients = tuple(value // divisor for value in values[2:length]) + (
            values[0] // divisor,
        )
        values[:length] = (
            [divisor]
            + [value % divisor for value in values[2:length]]
            + [values[0] % divisor]
        )
        matrix = matmul(_step_matrix(m, length, quotients), matrix)
        elements.append(quotients)
        if (length, values[1]) >= potential:
            raise DescentViolation(
                f"Jacobi-Perron potential {potential} did not decrease",
                step=len(elements),
            )
    logger.debug(f"reduced {tuple(x)} to gcd {values[0]} in {len(elements)} steps")
    return JacobiPerronResult(values[0], elements, matrix, signs)
