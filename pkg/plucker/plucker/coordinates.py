"""
Plücker coordinates of integer matrices: lexicographic subset indexing,
exact minors, gcd and the Grassmann-Plücker relations.
"""
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Iterator, Sequence, Tuple

from plucker.exceptions import DimensionError, PluckerValidationError
from plucker.helpers import (
    IntMatrix,
    Logger,
    binomial,
    determinant,
    lex_position,
    sort_sign,
)
from plucker.models import LatticeMatrix, PluckerVector, SubsetIndex

logger = Logger(__name__)


def lex_rank(subset: SubsetIndex) -> int:
    """
    0-based position of ``subset`` among the k-subsets of {1..n} in
    lexicographic order. Use :func:`lex_unrank` for the inverse.
    """
    return lex_position(subset.indices, subset.n)


def lex_unrank(rank: int, k: int, n: int) -> SubsetIndex:
    total = binomial(n, k)
    if k < 1 or not 0 <= rank < total:
        raise PluckerValidationError(
            f"rank {rank} is out of the range 0..{total - 1} of G({k},{n})"
        )
    indices = []
    candidate = 1
    for slot in range(k):
        while True:
            block = binomial(n - candidate, k - slot - 1)
            if rank < block:
                break
            rank -= block
            candidate += 1
        indices.append(candidate)
        candidate += 1
    return SubsetIndex(indices, n)


def subsets(k: int, n: int) -> Iterator[Tuple[int, ...]]:
    """All k-subsets of {1..n} in lexicographic order, as plain tuples."""
    return combinations(range(1, n + 1), k)


def signed_entry(p: PluckerVector, indices: Sequence[int]) -> int:
    """
    Value of p at an arbitrary index tuple: p is alternating, so the sorted
    entry is multiplied by the sign of the sorting permutation, and a
    repeated index gives 0.
    """
    sign, ordered = sort_sign(indices)
    if not sign:
        return 0
    return sign * p.entries[lex_position(ordered, p.n)]


def compute_plucker(m: LatticeMatrix) -> PluckerVector:
    """
    The maximal minors of the k x n matrix ``m``, in lexicographic order of
    the column subsets.

    :raises DimensionError: if k > n
    :raises PluckerValidationError: if ``m`` is rank deficient, since every
        minor is then zero
    """
    if m.k > m.n:
        raise DimensionError(f"a {m.k}x{m.n} matrix has no maximal minors")
    entries = [determinant(m.columns(indices)) for indices in subsets(m.k, m.n)]
    return PluckerVector(m.k, m.n, entries)


def plucker_gcd(p: PluckerVector) -> int:
    value = reduce(gcd, (abs(entry) for entry in p.entries), 0)
    if value == 0:
        raise PluckerValidationError("the Plücker vector is identically zero")
    return value


def is_primitive(p: PluckerVector) -> bool:
    return plucker_gcd(p) == 1


def scale(p: PluckerVector, factor: int) -> PluckerVector:
    return p.evolve(factor * entry for entry in p.entries)


def primitive_part(p: PluckerVector) -> PluckerVector:
    """Divides every entry by the gcd; the signs are kept."""
    divisor = plucker_gcd(p)
    return p.evolve(entry // divisor for entry in p.entries)


def skew_matrix(p: PluckerVector) -> IntMatrix:
    """
    The n x n skew-symmetric matrix (p_{i,j}) of a G(2,n) vector, with
    p_{j,i} = -p_{i,j} and a zero diagonal.
    """
    if p.k != 2:
        raise DimensionError(f"skew matrices are defined for k=2, got k={p.k}")
    return tuple(
        tuple(signed_entry(p, (i, j)) for j in range(1, p.n + 1))
        for i in range(1, p.n + 1)
    )


def _three_term_relations(p: PluckerVector) -> bool:
    for i, j, k, l in subsets(4, p.n):
        if p[i, k] * p[j, l] != p[i, j] * p[k, l] + p[i, l] * p[j, k]:
            logger.debug(f"relation fails at ({i},{j},{k},{l})")
            return False
    return True


def check_relations(p: PluckerVector) -> bool:
    """
    Whether p lies on the Plücker embedding of G(k,n).

    For k=2 the three-term relations p_ik p_jl = p_ij p_kl + p_il p_jk,
    i<j<k<l, are checked. For general k every one-exchange relation

        sum_l (-1)^l p_{I', j_l} p_{J' minus j_l} = 0

    over (k-1)-subsets I' and (k+1)-subsets J' = (j_1..j_{k+1}) is checked.
    """
    if p.k == 2:
        return _three_term_relations(p)
    if p.k == 1 or p.k >= p.n - 1:
        return True
    for head in subsets(p.k - 1, p.n):
        for tail in subsets(p.k + 1, p.n):
            total = 0
            for slot, index in enumerate(tail):
                left = signed_entry(p, head + (index,))
                if left:
                    rest = tail[:slot] + tail[slot + 1 :]
                    total += (-1) ** slot * left * signed_entry(p, rest)
            if total:
                logger.debug(f"relation fails at {head} / {tail}")
                return False
    return True
