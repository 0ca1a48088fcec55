"""
Rebuilds integer vectors from a completed trace.

The trace maps the input columns to a G(k,k) configuration with the single
coordinate p_hat. Starting from the seed rows (p_hat e_1, e_2, .., e_k) and
undoing every step in reverse, re-inserting a zero column before each
undone coordinate drop, gives a k x n integer matrix whose Plücker vector
is the input.
"""
from typing import List, Optional, Tuple

import attr

from plucker.coordinates import compute_plucker, plucker_gcd
from plucker.exceptions import (
    DescentViolation,
    DimensionError,
    IncompleteTraceError,
    PluckerValidationError,
)
from plucker.helpers import (
    IntMatrix,
    Logger,
    as_int_matrix,
    determinant,
    matmul,
    unimodular_inverse,
)
from plucker.mee import mee_run
from plucker.minee import minee_run
from plucker.models import (
    ALGORITHM,
    DESCRIPTOR,
    STAGE,
    LatticeMatrix,
    PluckerVector,
    Trace,
    UnimodularTransform,
)

logger = Logger(__name__)


@attr.s(frozen=True, slots=True)
class ReconstructionResult:
    matrix = attr.ib()
    p_hat = attr.ib(converter=int)
    sublattice_index = attr.ib(converter=int)


def _undo(rows: List[List[int]], transform: UnimodularTransform) -> List[List[int]]:
    """rows . U^-1, with closed forms for the structured kinds."""
    kind, params = transform.descriptor.kind, transform.descriptor.params
    if kind == DESCRIPTOR.ElementarySubtract:
        s, t, q = params
        for row in rows:
            row[s - 1] += q * row[t - 1]
        return rows
    columns = transform.descriptor.columns(transform.n)
    if columns is not None:
        undone = []
        for row in rows:
            old = [0] * len(row)
            for column, (source, sign) in enumerate(columns):
                old[source - 1] = sign * row[column]
            undone.append(old)
        return undone
    inverse = unimodular_inverse(transform.matrix)
    return [list(row) for row in matmul(as_int_matrix(rows), inverse)]


def _unwind(trace: Trace, seed: IntMatrix) -> LatticeMatrix:
    rows = [list(row) for row in seed]
    for step in reversed(trace.steps):
        if step.stage_label == STAGE.CoordinateDrop:
            for row in rows:
                row.append(0)
        if len(rows[0]) != step.ambient_n:
            raise DimensionError(
                f"step at n={step.ambient_n} met a matrix with {len(rows[0])} columns"
            )
        rows = _undo(rows, step.transform)
    return LatticeMatrix(rows)


def _check_trace(trace: Trace, original: Optional[PluckerVector] = None):
    if not trace.is_complete:
        raise IncompleteTraceError("the trace has no terminal coordinate")
    if original is not None and (original.k, original.n) != (
        trace.k,
        trace.n_initial,
    ):
        raise DimensionError(
            f"trace of G({trace.k},{trace.n_initial}) does not fit a vector of "
            f"G({original.k},{original.n})"
        )


def assemble(trace: Trace, original: PluckerVector) -> ReconstructionResult:
    """
    A k x n integer matrix whose Plücker vector equals ``original`` exactly.
    The seed is (p_hat e_1, e_2, .., e_k); row 1 is negated at the end when
    the unwound matrix realizes -original.

    :raises IncompleteTraceError: if the trace has no terminal coordinate
    :raises DimensionError: if the trace and the vector disagree on k or n
    :raises PluckerValidationError: if the trace does not come from
        ``original``
    """
    _check_trace(trace, original)
    p_hat = trace.terminal_p_hat
    seed = tuple(
        tuple((p_hat if r == 0 else 1) if r == c else 0 for c in range(trace.k))
        for r in range(trace.k)
    )
    matrix = _unwind(trace, seed)
    realized = compute_plucker(matrix)
    if realized.entries != original.entries:
        if tuple(-value for value in realized.entries) != original.entries:
            raise PluckerValidationError(
                "the trace does not reconstruct the given Plücker vector"
            )
        rows = list(matrix.rows)
        rows[0] = tuple(-value for value in rows[0])
        matrix = LatticeMatrix(rows)
    return ReconstructionResult(matrix, p_hat, abs(p_hat))


def admissible_tuple(trace: Trace, seed: IntMatrix) -> LatticeMatrix:
    """
    The rows obtained by unwinding the trace from any k x k integer seed of
    determinant ±p_hat. All of them span the same rational k-plane and have
    the input Plücker vector up to sign.

    :raises PluckerValidationError: if |det(seed)| != |p_hat|
    """
    _check_trace(trace)
    seed = as_int_matrix(seed)
    if len(seed) != trace.k or any(len(row) != trace.k for row in seed):
        raise DimensionError(f"the seed must be {trace.k}x{trace.k}")
    if abs(determinant(seed)) != abs(trace.terminal_p_hat):
        raise PluckerValidationError(
            f"seed determinant {determinant(seed)} is not ±{trace.terminal_p_hat}"
        )
    return _unwind(trace, seed)


def sublattice_index(matrix: LatticeMatrix) -> int:
    """
    Index of the lattice spanned by the rows inside the integer points of
    their span, which is the gcd of the Plücker coordinates.

    :raises PluckerValidationError: if the matrix is rank deficient
    """
    return plucker_gcd(compute_plucker(matrix))


def solve(
    p: PluckerVector,
    algorithm: str = ALGORITHM.minee,
    strict: Optional[bool] = None,
    accelerate: Optional[bool] = None,
    max_steps: Optional[int] = None,
) -> Tuple[Trace, ReconstructionResult]:
    """
    Runs ``algorithm`` on p and assembles the realizing matrix.

    :raises DescentViolation: if the assembled matrix does not realize p
    """
    if algorithm == ALGORITHM.mee:
        trace = mee_run(p, accelerate=accelerate, strict=strict, max_steps=max_steps)
    elif algorithm == ALGORITHM.minee:
        trace = minee_run(p, max_steps=max_steps)
    else:
        raise PluckerValidationError(f"unknown algorithm {algorithm!r}")
    try:
        result = assemble(trace, p)
    except PluckerValidationError as e:
        raise DescentViolation(str(e), state=p)
    logger.info(
        f"{algorithm} reconstruction of G({p.k},{p.n}) has index "
        f"{result.sublattice_index}"
    )
    return trace, result
