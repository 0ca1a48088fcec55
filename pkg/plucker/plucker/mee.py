"""
Maximal element elimination in G(2,n).

Each annulation pass makes the vector positive, selects the maximal
coordinate (rotating it to p_{1,n} when it sits at adjacent columns) and
subtracts the neighbouring column, until a coordinate vanishes. The zero
coordinate then allows one ambient coordinate to be dropped, and the two
alternate until n = 2.
"""
from typing import List, Optional, Tuple

import attr

from plucker import settings
from plucker.coordinates import check_relations, plucker_gcd
from plucker.euclid import euclid_cf
from plucker.exceptions import (
    DescentViolation,
    DimensionError,
    NonDecomposableError,
    PluckerValidationError,
    ZeroCoordinateError,
)
from plucker.helpers import Logger
from plucker.models import STAGE, PluckerVector, Trace, TraceStep, UnimodularTransform
from plucker.positivity import is_totally_positive, positivize_g2n
from plucker.transforms import (
    column_swap,
    drop_to_last,
    elementary_subtract,
    permutation_transform,
    push_plucker,
    restrict,
    rotation_transform,
)

logger = Logger(__name__)

Potential = Tuple[int, int]


def potential(p: PluckerVector) -> Potential:
    """(max |entry|, number of entries attaining it)."""
    values = [abs(value) for value in p.entries]
    top = max(values)
    return top, values.count(top)


@attr.s(frozen=True, slots=True)
class MeeState:
    p = attr.ib()
    trace = attr.ib()
    potential = attr.ib(default=None)

    def __attrs_post_init__(self):
        if self.potential is None:
            object.__setattr__(self, "potential", potential(self.p))


def _step(
    p: PluckerVector, label: str, transform: UnimodularTransform
) -> Tuple[PluckerVector, TraceStep]:
    logger.debug(f"{label} {transform.descriptor.kind}{transform.descriptor.params}")
    return push_plucker(p, transform), TraceStep(transform, label, p.n)


def select_maximal(p: PluckerVector) -> Tuple[int, int]:
    """The maximal coordinate; p_{1,n} wins every tie it is part of."""
    top = max(p.entries)
    if p[1, p.n] == top:
        return 1, p.n
    return next(indices for indices, value in p.items() if value == top)


def _accelerated(
    p: PluckerVector, i: int, j: int, bound: int
) -> Optional[UnimodularTransform]:
    # q-fold subtraction, kept only when every changed entry stays below bound
    q = p[i, j] // p[i, j - 1]
    if q <= 1:
        return None
    transform = elementary_subtract(p.n, j, j - 1, q)
    candidate = push_plucker(p, transform)
    changed = (
        new for new, old in zip(candidate.entries, p.entries) if new != old
    )
    if any(abs(value) >= bound for value in changed):
        return None
    return transform


def _annulation_pass(
    p: PluckerVector, accelerate: bool, strict: Optional[bool] = None
) -> Tuple[PluckerVector, List[TraceStep]]:
    n = p.n
    before = potential(p)
    steps: List[TraceStep] = []
    if not is_totally_positive(p):
        p, applied = positivize_g2n(p, strict)
        for transform in applied:
            steps.append(TraceStep(transform, STAGE.Positivize, n))
    i, j = select_maximal(p)
    if j == i + 1:
        p, step = _step(p, STAGE.MaxSelectRotate, rotation_transform(n, i))
        steps.append(step)
        i, j = 1, n
    transform = None
    if accelerate:
        transform = _accelerated(p, i, j, before[0])
    if transform is None:
        transform = elementary_subtract(n, j, j - 1, 1)
    p, step = _step(p, STAGE.MaxSubtract, transform)
    steps.append(step)
    after = potential(p)
    if after >= before:
        raise DescentViolation(
            f"potential {after} did not decrease below {before}", state=p
        )
    return p, steps


def mee_step(
    state: MeeState,
    accelerate: Optional[bool] = None,
    strict: Optional[bool] = None,
) -> MeeState:
    """
    One annulation pass on a zero-free G(2,n) vector: positivize, select the
    maximal coordinate p_{i,j}, rotate it to p_{1,n} when j = i+1, and apply
    w_j -> w_j - w_{j-1}. (max |entry|, count at max) strictly decreases.

    :param accelerate: subtract floor(p_{i,j}/p_{i,j-1}) times when every
        changed coordinate stays below the old maximum, defaults to
        ``PLUCKER_MEE_ACCELERATE``
    :param strict: literal swap scan in positivization, see
        :func:`.positivize_g2n`
    :raises ZeroCoordinateError: if a coordinate is zero, use
        :func:`mee_dim_reduce`
    :raises DescentViolation: if the potential does not decrease
    """
    p = state.p
    if p.k != 2:
        raise DimensionError(f"maximal element elimination needs k=2, got k={p.k}")
    if p.n == 2:
        return state
    if 0 in p.entries:
        raise ZeroCoordinateError("annulation needs a zero-free vector")
    if accelerate is None:
        accelerate = settings.MEE_ACCELERATE
    try:
        p, steps = _annulation_pass(p, accelerate, strict)
    except DescentViolation as e:
        e.step = len(state.trace.steps)
        raise
    return MeeState(p, state.trace.extend(steps))


def mee_dim_reduce(p: PluckerVector) -> Tuple[PluckerVector, List[TraceStep]]:
    """
    Drops one coordinate of a G(2,n) vector with a zero p_{s,t}.

    Columns s and t are moved to slots 1 and 2, the other columns keep their
    order. w_1 and w_2 are then proportional, and when w_1 is not already
    zero the Euclidean algorithm on (p_{2,i}, p_{1,i}), i the first column
    with p_{1,i} != 0, replays as column subtractions and swaps of w_1 and
    w_2 until w_1 = 0. Finally w_1 is moved to the last slot and dropped.

    :returns: the G(2,n-1) vector and the steps taken
    :raises PluckerValidationError: if no coordinate is zero
    """
    n = p.n
    zero = next((indices for indices, value in p.items() if value == 0), None)
    if zero is None:
        raise PluckerValidationError("dimension reduction needs a zero coordinate")
    steps: List[TraceStep] = []
    s, t = zero
    order = (s, t) + tuple(c for c in range(1, n + 1) if c not in zero)
    if order != tuple(range(1, n + 1)):
        p, step = _step(p, STAGE.Swap, permutation_transform(n, order))
        steps.append(step)
    column = next((c for c in range(3, n + 1) if p[1, c] != 0), None)
    if column is not None:
        result = euclid_cf(p[2, column], p[1, column])
        for a in result.quotients:
            if a:
                p, step = _step(
                    p, STAGE.DimReductionEuclid, elementary_subtract(n, 2, 1, a)
                )
                steps.append(step)
            p, step = _step(p, STAGE.DimReductionEuclid, column_swap(n, 1, 2))
            steps.append(step)
    if any(p[1, c] for c in range(2, n + 1)):
        raise DescentViolation(
            "column 1 did not vanish in dimension reduction", state=p
        )
    p, step = _step(p, STAGE.CoordinateDrop, drop_to_last(n, 1))
    steps.append(step)
    p = restrict(p)
    logger.info(f"G(2,{n}) -> G(2,{p.n}) after {len(steps)} steps")
    return p, steps


def mee_run(
    p: PluckerVector,
    accelerate: Optional[bool] = None,
    strict: Optional[bool] = None,
    max_steps: Optional[int] = None,
) -> Trace:
    """
    Reduces a decomposable G(2,n) vector to G(2,2) and returns the complete
    trace; |p_hat| is the gcd of the input coordinates.

    :raises DimensionError: if k != 2
    :raises NonDecomposableError: if p fails the Plücker relations
    :raises DescentViolation: if a descent certificate fails or the run
        exceeds ``max_steps`` annulation passes
    """
    if p.k != 2:
        raise DimensionError(
            f"maximal element elimination works in G(2,n) only, got k={p.k}; "
            "use minee"
        )
    if not check_relations(p):
        raise NonDecomposableError("the vector does not satisfy the Plücker relations")
    if accelerate is None:
        accelerate = settings.MEE_ACCELERATE
    if max_steps is None:
        max_steps = settings.MAX_STEPS
    logger.info(f"mee run on G(2,{p.n})")
    original = p
    steps: List[TraceStep] = []
    passes = 0
    while p.n > 2:
        if 0 in p.entries:
            p, reduction = mee_dim_reduce(p)
            steps.extend(reduction)
            continue
        passes += 1
        if passes > max_steps:
            raise DescentViolation(
                f"no zero coordinate after {max_steps} passes", state=p, step=passes
            )
        try:
            p, annulation = _annulation_pass(p, accelerate, strict)
        except DescentViolation as e:
            e.step = passes
            raise
        steps.extend(annulation)
    trace = Trace(2, original.n).extend(steps).finish(p.entries[0])
    if abs(trace.terminal_p_hat) != plucker_gcd(original):
        raise DescentViolation(
            f"terminal coordinate {trace.terminal_p_hat} is not the gcd", state=p
        )
    logger.info(
        f"mee run on G(2,{original.n}) finished: p_hat={trace.terminal_p_hat}, "
        f"{len(trace.steps)} steps, {passes} passes"
    )
    return trace
