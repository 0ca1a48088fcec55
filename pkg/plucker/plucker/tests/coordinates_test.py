import pytest

from plucker.coordinates import (
    check_relations,
    compute_plucker,
    is_primitive,
    lex_rank,
    lex_unrank,
    plucker_gcd,
    primitive_part,
    scale,
    signed_entry,
    skew_matrix,
    subsets,
)
from plucker.exceptions import DimensionError, PluckerValidationError
from plucker.generators import random_transform
from plucker.helpers import binomial
from plucker.models import LatticeMatrix, PluckerVector, SubsetIndex
from plucker.tests.conftest import (
    GOLDEN_G24,
    GOLDEN_G24_MATRIX,
    GOLDEN_G36,
    GOLDEN_G36_MATRIX,
    NON_DECOMPOSABLE,
)
from plucker.transforms import apply_matrix, compose


@pytest.mark.parametrize("k,n", [(1, 3), (2, 4), (2, 6), (3, 6), (4, 8)])
def test_rank_unrank_bijection(k, n):
    for rank, indices in enumerate(subsets(k, n)):
        assert lex_rank(SubsetIndex(indices, n)) == rank
        assert lex_unrank(rank, k, n).indices == indices


def test_lex_rank_examples():
    assert lex_rank(SubsetIndex((1, 2), 4)) == 0
    assert lex_rank(SubsetIndex((3, 4), 4)) == 5
    assert lex_rank(SubsetIndex((4, 5, 6), 6)) == binomial(6, 3) - 1


def test_lex_unrank_out_of_range():
    with pytest.raises(PluckerValidationError):
        lex_unrank(6, 2, 4)
    with pytest.raises(PluckerValidationError):
        lex_unrank(-1, 2, 4)


def test_compute_plucker_golden_examples():
    assert compute_plucker(GOLDEN_G24_MATRIX) == GOLDEN_G24
    assert compute_plucker(GOLDEN_G36_MATRIX) == GOLDEN_G36


def test_compute_plucker_identity_block():
    p = compute_plucker(LatticeMatrix([[1, 0, 0, 0], [0, 1, 0, 0]]))
    assert p.entries == (1, 0, 0, 0, 0, 0)


def test_compute_plucker_square_matrix():
    p = compute_plucker(LatticeMatrix([[2, 1], [1, 3]]))
    assert (p.k, p.n, p.entries) == (2, 2, (5,))


def test_compute_plucker_errors():
    with pytest.raises(DimensionError):
        compute_plucker(LatticeMatrix([[1], [2]]))
    with pytest.raises(PluckerValidationError):
        compute_plucker(LatticeMatrix([[1, 2, 3], [2, 4, 6]]))


def test_signed_entry():
    assert signed_entry(GOLDEN_G24, (2, 3)) == -15
    assert signed_entry(GOLDEN_G24, (3, 2)) == 15
    assert signed_entry(GOLDEN_G24, (3, 3)) == 0


def test_gcd_and_scaling():
    assert plucker_gcd(GOLDEN_G24) == 1
    assert is_primitive(GOLDEN_G24)
    scaled = scale(GOLDEN_G24, -6)
    assert plucker_gcd(scaled) == 6
    assert primitive_part(scaled) == scale(GOLDEN_G24, -1)
    assert plucker_gcd(PluckerVector(2, 3, [0, 4, -6])) == 2


def test_skew_matrix():
    matrix = skew_matrix(GOLDEN_G24)
    assert matrix[0] == (0, 10, 10, 12)
    assert matrix[2][1] == 15
    assert all(matrix[i][j] == -matrix[j][i] for i in range(4) for j in range(4))
    with pytest.raises(DimensionError):
        skew_matrix(GOLDEN_G36)


def test_relations_hold_on_minors(instance_factory):
    for k, n in [(2, 4), (2, 6), (3, 5), (3, 6), (4, 7)]:
        _, p = instance_factory(k, n, bound=9)
        assert check_relations(p)


def test_row_operations(rng, matrix_factory):
    for _ in range(200):
        k = int(rng.integers(2, 5))
        rows = matrix_factory(k, int(rng.integers(k, 8)), bound=9)
        p = compute_plucker(LatticeMatrix(rows))
        i, j = (int(r) for r in rng.choice(k, size=2, replace=False))
        c = int(rng.integers(-5, 6))
        added = [list(row) for row in rows]
        added[i] = [x + c * y for x, y in zip(rows[i], rows[j])]
        assert compute_plucker(LatticeMatrix(added)) == p
        swapped = [list(row) for row in rows]
        swapped[i], swapped[j] = rows[j], rows[i]
        assert compute_plucker(LatticeMatrix(swapped)) == scale(p, -1)


def test_gcd_is_invariant_under_unimodular_transforms(rng, matrix_factory):
    for _ in range(200):
        n = int(rng.integers(2, 7))
        k = int(rng.integers(1, n + 1))
        rows = matrix_factory(k, n, bound=9)
        rows[0] = [3 * value for value in rows[0]]
        m = LatticeMatrix(rows)
        u = compose(random_transform(n, rng), random_transform(n, rng))
        expected = plucker_gcd(compute_plucker(m))
        assert plucker_gcd(compute_plucker(apply_matrix(u, m))) == expected


def test_relations_fail():
    assert not check_relations(NON_DECOMPOSABLE)
    assert not check_relations(PluckerVector(2, 4, [10, 10, 12, -15, 3, 22]))
    p = PluckerVector(3, 6, GOLDEN_G36.entries[:-1] + (2,))
    assert not check_relations(p)


def test_relations_trivial_cases():
    assert check_relations(PluckerVector(1, 4, [3, 0, -2, 7]))
    assert check_relations(PluckerVector(3, 4, [1, 2, 3, 4]))
