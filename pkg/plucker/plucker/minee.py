"""
Minimal element elimination in G(k,n).

Annulation reduces a neighbour of the coordinate with the smallest absolute
value modulo that coordinate until some coordinate vanishes. Dimension
reduction then finds an integer linear relation between the first columns
from the Plücker coordinates, reduces its coefficients to (g, 0, .., 0) with
the registered reduction engine (Jacobi-Perron by default), and uses the
inverse of that reduction to make w_1 vanish before dropping it.
"""
from typing import List, Optional, Tuple

import attr

from plucker import integrations, settings
from plucker.coordinates import check_relations, plucker_gcd, signed_entry, subsets
from plucker.exceptions import (
    DescentViolation,
    DimensionError,
    NonDecomposableError,
    PluckerValidationError,
    ZeroCoordinateError,
)
from plucker.helpers import (
    IntMatrix,
    Logger,
    determinant,
    identity_matrix,
    matmul,
    unimodular_inverse,
)
from plucker.models import (
    STAGE,
    PluckerVector,
    SubsetIndex,
    Trace,
    TraceStep,
    UnimodularTransform,
)
from plucker.transforms import (
    column_swap,
    drop_to_last,
    elementary_subtract,
    general_transform,
    permutation_transform,
    push_plucker,
    restrict,
    sign_flip,
)

logger = Logger(__name__)


def _nonzero_minimum(p: PluckerVector) -> int:
    return min(abs(value) for value in p.entries if value)


@attr.s(frozen=True, slots=True)
class MineeState:
    """
    ``current_min`` is (|p_i|, i) for the coordinate the next subtraction
    reduces against.
    """

    p = attr.ib()
    trace = attr.ib()
    current_min = attr.ib(default=None)


def minee_select(p: PluckerVector) -> Tuple[SubsetIndex, SubsetIndex, int]:
    """
    The coordinate i with the smallest absolute value (lexicographically
    first on ties), the first slot t whose index has a free neighbour, and
    the neighbouring index j, i with i_t replaced by i_t - 1 when that is
    free, by i_t + 1 otherwise.

    :raises ZeroCoordinateError: if a coordinate is zero
    :raises DimensionError: if n = k, where no neighbour exists
    """
    if 0 in p.entries:
        raise ZeroCoordinateError("annulation needs a zero-free vector")
    smallest = min(abs(value) for value in p.entries)
    i = next(indices for indices, value in p.items() if abs(value) == smallest)
    for t, index in enumerate(i, start=1):
        if index - 1 >= 1 and index - 1 not in i:
            neighbour = index - 1
        elif index + 1 <= p.n and index + 1 not in i:
            neighbour = index + 1
        else:
            continue
        j = i[: t - 1] + (neighbour,) + i[t:]
        return SubsetIndex(i, p.n), SubsetIndex(j, p.n), t
    raise DimensionError(f"G({p.k},{p.n}) is terminal, no neighbour to subtract")


def minee_subtraction(
    p: PluckerVector, i: SubsetIndex, j: SubsetIndex, t: int
) -> UnimodularTransform:
    """
    w_{j_t} -> w_{j_t} - q w_{i_t} with q = floor(p_j / p_i). This sends p_j
    to its floored remainder p_j - q p_i and leaves p_i unchanged.

    :raises ZeroCoordinateError: if p_i is zero
    """
    divisor = p[i.indices]
    if divisor == 0:
        raise ZeroCoordinateError(f"coordinate {i.indices} is zero")
    return elementary_subtract(p.n, j[t - 1], i[t - 1], p[j.indices] // divisor)


def minee_subtract(
    p: PluckerVector, i: SubsetIndex, j: SubsetIndex, t: int
) -> PluckerVector:
    return push_plucker(p, minee_subtraction(p, i, j, t))


def _annulation_pass(p: PluckerVector) -> Tuple[PluckerVector, TraceStep]:
    before = _nonzero_minimum(p)
    i, j, t = minee_select(p)
    transform = minee_subtraction(p, i, j, t)
    step = TraceStep(transform, STAGE.MinSubtract, p.n)
    logger.debug(f"MinSubtract {transform.descriptor.params} against {i.indices}")
    p = push_plucker(p, transform)
    if 0 not in p.entries and _nonzero_minimum(p) >= before:
        raise DescentViolation(
            f"minimum {_nonzero_minimum(p)} did not decrease below {before}", state=p
        )
    return p, step


def minee_step(state: MineeState) -> MineeState:
    """
    One annulation subtraction. The minimum over the nonzero absolute values
    strictly decreases, or a zero coordinate appears.

    :raises DescentViolation: if neither happens
    """
    try:
        p, step = _annulation_pass(state.p)
    except DescentViolation as e:
        e.step = len(state.trace.steps)
        raise
    current = None
    if 0 not in p.entries:
        i, _, _ = minee_select(p)
        current = (abs(p[i.indices]), i)
    return MineeState(p, state.trace.extend([step]), current)


def _relation(p: PluckerVector) -> Tuple[int, Tuple[int, ...]]:
    # s and tail with p_{1..s,tail} != 0 and every p_{1..s,s+1,*} = 0
    k, n = p.k, p.n
    for s in range(k - 1, 0, -1):
        head = tuple(range(1, s + 1))
        dependent = head + (s + 1,)
        if any(
            p[dependent + rest]
            for rest in subsets(k - s - 1, n)
            if not rest or rest[0] > s + 1
        ):
            continue
        tail = next(
            (
                rest
                for rest in subsets(k - s, n)
                if rest[0] > s + 1 and p[head + rest]
            ),
            None,
        )
        if tail is not None:
            return s, tail
    raise DescentViolation(
        "no linear relation found between the first columns", state=p
    )


def relation_coefficients(p: PluckerVector, s: int, tail: Tuple[int, ...]):
    """
    Integer coefficients with a_1 w_1 + .. + a_{s+1} w_{s+1} = 0, by Cramer's
    rule against the basis w_1..w_s, w_tail:

        a_j = p_{1..j-1, s+1, j+1..s, tail},   a_{s+1} = -p_{1..s, tail}
    """
    head = tuple(range(1, s + 1))
    coefficients = [
        signed_entry(p, head[: j - 1] + (s + 1,) + head[j:] + tail)
        for j in range(1, s + 1)
    ]
    coefficients.append(-p[head + tail])
    return tuple(coefficients)


def _pad_block(block: IntMatrix, n: int) -> IntMatrix:
    size = len(block)
    rows = [list(row) for row in identity_matrix(n)]
    for r in range(size):
        rows[r][:size] = block[r]
    return tuple(tuple(row) for row in rows)


def _checked_engine_result(coefficients: Tuple[int, ...], p: PluckerVector):
    result = integrations.registered_reduction_engine(coefficients)
    matrix = tuple(tuple(int(value) for value in row) for row in result.matrix)
    size = len(coefficients)
    if len(matrix) != size or any(len(row) != size for row in matrix):
        raise DescentViolation(
            "reduction engine returned a matrix of wrong size", state=p
        )
    if abs(determinant(matrix)) != 1:
        raise DescentViolation(
            "reduction engine returned a matrix that is not unimodular", state=p
        )
    image = matmul(matrix, tuple((value,) for value in coefficients))
    if image[0][0] == 0 or any(row[0] for row in image[1:]):
        raise DescentViolation(
            f"reduction engine mapped {coefficients} to {image}", state=p
        )
    signs = tuple(getattr(result, "signs", ()) or (1,) * size)
    return matrix, signs


def _drop_zero_column(p: PluckerVector) -> Optional[int]:
    for column in range(1, p.n + 1):
        if not any(value for indices, value in p.items() if column in indices):
            return column
    return None


def minee_dim_reduce(p: PluckerVector) -> Tuple[PluckerVector, List[TraceStep]]:
    """
    Drops one coordinate of a G(k,n) vector with a zero coordinate.

    A column w_m whose coordinates all vanish is dropped directly. Otherwise
    the zero index is moved to (1..k), keeping the order of the other
    columns, and the unique s is found for which w_1..w_s are independent
    while w_{s+1} depends on them; a tail completing w_1..w_s to a basis
    gives integer relation coefficients (a_1..a_{s+1}). The reduction engine
    yields U with U.a = (g, 0, .., 0), and the columns w_1..w_{s+1} are
    multiplied by the inverse of U, which makes w_1 = 0 before it is dropped.

    :returns: the G(k,n-1) vector and the steps taken
    :raises PluckerValidationError: if no coordinate is zero
    """
    k, n = p.k, p.n
    steps: List[TraceStep] = []

    def apply(label, transform):
        nonlocal p
        descriptor = transform.descriptor
        logger.debug(f"{label} {descriptor.kind}{descriptor.params}")
        steps.append(TraceStep(transform, label, p.n))
        p = push_plucker(p, transform)

    zero = next((indices for indices, value in p.items() if value == 0), None)
    if zero is None:
        raise PluckerValidationError("dimension reduction needs a zero coordinate")
    column = _drop_zero_column(p)
    if column is None:
        order = zero + tuple(c for c in range(1, n + 1) if c not in zero)
        if order != tuple(range(1, n + 1)):
            apply(STAGE.Swap, permutation_transform(n, order))
        s, tail = _relation(p)
        coefficients = relation_coefficients(p, s, tail)
        if not any(coefficients[:s]):
            apply(STAGE.Swap, column_swap(n, 1, s + 1))
        else:
            matrix, signs = _checked_engine_result(coefficients, p)
            for slot, sign in enumerate(signs, start=1):
                if sign < 0:
                    apply(STAGE.DimReductionJP, sign_flip(n, slot))
            flips = tuple(
                tuple(signs[c] if r == c else 0 for c in range(s + 1))
                for r in range(s + 1)
            )
            reduction = matmul(matrix, flips)
            if reduction != identity_matrix(s + 1):
                apply(
                    STAGE.DimReductionJP,
                    general_transform(_pad_block(unimodular_inverse(reduction), n)),
                )
        if any(value for indices, value in p.items() if indices[0] == 1):
            raise DescentViolation(
                "column 1 did not vanish in dimension reduction", state=p
            )
        column = 1
    apply(STAGE.CoordinateDrop, drop_to_last(n, column))
    p = restrict(p)
    logger.info(f"G({k},{n}) -> G({k},{p.n}) after {len(steps)} steps")
    return p, steps


def minee_run(p: PluckerVector, max_steps: Optional[int] = None) -> Trace:
    """
    Reduces a decomposable G(k,n) vector to G(k,k) and returns the complete
    trace; |p_hat| is the gcd of the input coordinates.

    :raises NonDecomposableError: if p fails the Plücker relations
    :raises DescentViolation: if a descent certificate fails or the run
        exceeds ``max_steps`` annulation passes
    """
    if not check_relations(p):
        raise NonDecomposableError("the vector does not satisfy the Plücker relations")
    if max_steps is None:
        max_steps = settings.MAX_STEPS
    logger.info(f"minee run on G({p.k},{p.n})")
    original = p
    steps: List[TraceStep] = []
    passes = 0
    while p.n > p.k:
        if 0 in p.entries:
            p, reduction = minee_dim_reduce(p)
            steps.extend(reduction)
            continue
        passes += 1
        if passes > max_steps:
            raise DescentViolation(
                f"no zero coordinate after {max_steps} passes", state=p, step=passes
            )
        try:
            p, step = _annulation_pass(p)
        except DescentViolation as e:
            e.step = passes
            raise
        steps.append(step)
    trace = Trace(p.k, original.n).extend(steps).finish(p.entries[0])
    if abs(trace.terminal_p_hat) != plucker_gcd(original):
        raise DescentViolation(
            f"terminal coordinate {trace.terminal_p_hat} is not the gcd", state=p
        )
    logger.info(
        f"minee run on G({p.k},{original.n}) finished: "
        f"p_hat={trace.terminal_p_hat}, {len(trace.steps)} steps, {passes} passes"
    )
    return trace
