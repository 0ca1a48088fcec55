"""
Positivization of G(2,n) Plücker vectors by signed column permutations, and
the parity of negative coordinates that obstructs it for k >= 3.
"""
from typing import List, Optional, Tuple

from plucker import settings
from plucker.coordinates import signed_entry
from plucker.exceptions import DescentViolation, DimensionError, ZeroCoordinateError
from plucker.helpers import Logger, binomial
from plucker.models import PARITY, PluckerVector, UnimodularTransform
from plucker.transforms import column_swap, push_plucker, sign_flip

logger = Logger(__name__)


def _require_nonzero(p: PluckerVector):
    for indices, value in p.items():
        if value == 0:
            raise ZeroCoordinateError(f"coordinate {indices} is zero")


def is_totally_positive(p: PluckerVector) -> bool:
    return all(value > 0 for value in p.entries)


def negative_parity(p: PluckerVector) -> str:
    """
    Parity of the number of negative coordinates. For G(3,6) it is invariant
    under sign flips and column swaps, so an odd vector can not be made
    positive by signed permutations.

    :raises ZeroCoordinateError: if a coordinate is zero
    """
    _require_nonzero(p)
    negatives = sum(1 for value in p.entries if value < 0)
    return PARITY.odd if negatives % 2 else PARITY.even


def _sort_columns(p: PluckerVector, applied: List[UnimodularTransform]):
    # selection sort of columns 2..n, a before b iff p_{a,b} > 0
    n = p.n
    for position in range(2, n):
        first = position
        for column in range(position + 1, n + 1):
            if signed_entry(p, (column, first)) > 0:
                first = column
        if first != position:
            swap = column_swap(n, position, first)
            p = push_plucker(p, swap)
            applied.append(swap)
    return p


def _scan_columns(p: PluckerVector, applied: List[UnimodularTransform]):
    # swap the lexicographically first negative pair until none is left
    for _ in range(binomial(p.n, 2) + 1):
        negative = next((indices for indices, value in p.items() if value < 0), None)
        if negative is None:
            return p
        swap = column_swap(p.n, *negative)
        p = push_plucker(p, swap)
        applied.append(swap)
    raise DescentViolation(
        f"positivization scan exceeded C({p.n},2) swaps", state=p
    )


def positivize_g2n(
    p: PluckerVector, strict: Optional[bool] = None
) -> Tuple[PluckerVector, List[UnimodularTransform]]:
    """
    Makes every coordinate of a zero-free G(2,n) vector positive.

    Stage I flips column i, i = 2..n, whenever p_{1,i} < 0; the columns then
    lie in a half-plane and are totally ordered by "a precedes b iff
    p_{a,b} > 0". Stage II sorts columns 2..n in that order, recording each
    swap. With ``strict`` the lexicographically first negative pair is
    swapped repeatedly instead, which yields the same vector through a
    different sequence of swaps.

    :param strict: literal swap scan, defaults to ``PLUCKER_STRICT_TRACE``
    :returns: the positive vector and the sign flips and column swaps applied
    :raises DimensionError: if k != 2
    :raises ZeroCoordinateError: if a coordinate is zero
    """
    if p.k != 2:
        raise DimensionError(f"positivization is only defined for k=2, got k={p.k}")
    _require_nonzero(p)
    if strict is None:
        strict = settings.STRICT_TRACE
    applied: List[UnimodularTransform] = []
    for column in range(2, p.n + 1):
        if p[1, column] < 0:
            flip = sign_flip(p.n, column)
            p = push_plucker(p, flip)
            applied.append(flip)
    flips = len(applied)
    p = _scan_columns(p, applied) if strict else _sort_columns(p, applied)
    swaps = len(applied) - flips
    if swaps > binomial(p.n, 2):
        raise DescentViolation(
            f"positivization used {swaps} swaps, more than C({p.n},2)", state=p
        )
    expected = binomial(p.n - 2, 2)
    if strict and swaps > expected:
        logger.warning(f"{swaps} swaps in G(2,{p.n}), above C({p.n - 2},2)={expected}")
    else:
        logger.debug(f"{swaps} swaps in G(2,{p.n}), C({p.n - 2},2)={expected}")
    if not is_totally_positive(p):
        raise DescentViolation("positivization left a negative coordinate", state=p)
    return p, applied
