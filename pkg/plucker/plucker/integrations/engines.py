from typing import Sequence

from plucker.euclid import JacobiPerronResult, jacobi_perron


def reduce_coefficients(coefficients: Sequence[int]) -> JacobiPerronResult:
    """
    Reduce the integer relation coefficients (a_1, .., a_{s+1}) found by the
    minimal element elimination's dimension reduction to (±g, 0, .., 0).

    The returned object must expose ``gcd`` and ``matrix``, a square integer
    matrix U of determinant ±1 with U.a = (±g, 0, .., 0). Its ``signs`` are
    recorded in the trace when present. The default engine is the
    Jacobi-Perron algorithm.

    Replace this function by registering another through
    :func:`register_integrations`:
    ::

        from myapp.engines import selmer_reduction

        register_integrations(reduction_engine=selmer_reduction)

    Returned matrices are checked before use; an engine returning a matrix
    that is not unimodular or does not annihilate the tail of the
    coefficients stops the run with a :class:`.DescentViolation`.

    :param coefficients: the nonzero integer vector to reduce
    """
    return jacobi_perron(coefficients)


registered_reduction_engine = reduce_coefficients
