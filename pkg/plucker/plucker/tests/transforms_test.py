import pytest

from plucker.coordinates import compute_plucker
from plucker.exceptions import (
    DimensionError,
    NotUnimodularError,
    PluckerValidationError,
)
from plucker.generators import random_transform
from plucker.helpers import determinant, identity_matrix, matmul
from plucker.models import DESCRIPTOR, STAGE, PluckerVector, Trace, TraceStep
from plucker.positivity import positivize_g2n
from plucker.tests.conftest import GOLDEN_G24, GOLDEN_G24_MATRIX
from plucker.transforms import (
    apply_matrix,
    column_swap,
    compose,
    composed,
    drop_to_last,
    elementary_subtract,
    general_transform,
    identity,
    invert,
    pad,
    permutation_transform,
    push_plucker,
    replay,
    restrict,
    rotation_transform,
    sign_flip,
)


def test_elementary_subtract_acts_on_columns():
    m = apply_matrix(elementary_subtract(4, 2, 1), GOLDEN_G24_MATRIX)
    assert m.rows == ((4, -3, 7, 0), (-6, 7, -8, 3))


def test_push_elementary_subtract():
    # w_4 -> w_4 - w_3 lowers p_{1,4} and p_{2,4}
    p = push_plucker(GOLDEN_G24, elementary_subtract(4, 4, 3))
    assert p.entries == (10, 10, 2, -15, 18, 21)


def test_rotation_moves_adjacent_entry_to_corner():
    p = PluckerVector(2, 4, [10, 10, 12, 15, 21, 3])
    rotated = push_plucker(p, rotation_transform(4, 2))
    assert rotated[1, 4] == p[2, 3]
    assert all(value > 0 for value in rotated.entries)


def test_rotation_keeps_random_positive_vectors_positive(rng, instance_factory):
    for _ in range(100):
        n = int(rng.integers(3, 9))
        _, p = instance_factory(2, n, zero_free=True)
        p, _ = positivize_g2n(p)
        for i in range(1, n):
            rotated = push_plucker(p, rotation_transform(n, i))
            assert rotated[1, n] == p[i, i + 1]
            assert all(value > 0 for value in rotated.entries)


def test_push_is_functorial(rng, instance_factory):
    for _ in range(200):
        n = int(rng.integers(2, 7))
        _, p = instance_factory(int(rng.integers(1, n + 1)), n, bound=9)
        a, b = random_transform(n, rng), random_transform(n, rng)
        assert push_plucker(push_plucker(p, a), b) == push_plucker(p, compose(a, b))


def test_elementary_subtract_fixes_unaffected_entries(rng, instance_factory):
    for _ in range(200):
        n = int(rng.integers(3, 7))
        _, p = instance_factory(int(rng.integers(2, n)), n, bound=9)
        s, t = (int(c) + 1 for c in rng.choice(n, size=2, replace=False))
        pushed = push_plucker(p, elementary_subtract(n, s, t, int(rng.integers(1, 6))))
        for indices, value in p.items():
            if s not in indices or t in indices:
                assert pushed[indices] == value


@pytest.mark.parametrize(
    "transform",
    [
        column_swap(4, 1, 3),
        sign_flip(4, 2),
        rotation_transform(4, 3),
        permutation_transform(4, (3, 1, 4, 2)),
        drop_to_last(4, 2),
        elementary_subtract(4, 1, 4, -7),
        general_transform(((1, 2, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1), (0, 0, -1, 0))),
    ],
)
def test_push_matches_minors(transform):
    expected = compute_plucker(apply_matrix(transform, GOLDEN_G24_MATRIX))
    assert push_plucker(GOLDEN_G24, transform) == expected


def test_push_random_pairs(rng, instance_factory):
    for _ in range(50):
        k = int(rng.integers(1, 4))
        n = int(rng.integers(max(k, 2), 7))
        m, p = instance_factory(k, n, bound=10)
        u = compose(random_transform(n, rng), random_transform(n, rng))
        assert push_plucker(p, u) == compute_plucker(apply_matrix(u, m))


def test_push_dimension_mismatch():
    with pytest.raises(DimensionError):
        push_plucker(GOLDEN_G24, identity(3))


def test_general_transform_checks_determinant():
    with pytest.raises(NotUnimodularError):
        general_transform(((1, 1), (1, 1)))


def test_compose_and_invert(rng):
    for _ in range(30):
        a, b = random_transform(5, rng), random_transform(5, rng)
        product = compose(a, b)
        assert product.matrix == matmul(a.matrix, b.matrix)
        assert abs(determinant(product.matrix)) == 1
        for u in (a, product):
            assert matmul(u.matrix, invert(u).matrix) == identity_matrix(5)


def test_invert_keeps_structure():
    assert invert(elementary_subtract(3, 1, 2, 4)).descriptor.params == (1, 2, -4)
    assert invert(column_swap(3, 1, 2)) == column_swap(3, 1, 2)
    inverse = invert(permutation_transform(3, (2, 3, 1)))
    assert inverse.descriptor.kind == DESCRIPTOR.Permutation
    assert inverse.descriptor.params == (3, 1, 2)


def test_pad():
    padded = pad(drop_to_last(3, 1), 5)
    assert padded.descriptor.params == (2, 3, 1, 4, 5)
    assert pad(elementary_subtract(2, 2, 1, 3), 4).descriptor.params == (2, 1, 3)
    block = general_transform(((2, 1), (1, 1)))
    assert pad(block, 3).matrix == ((2, 1, 0), (1, 1, 0), (0, 0, 1))
    with pytest.raises(DimensionError):
        pad(identity(4), 3)


def test_restrict():
    p = PluckerVector(2, 3, [5, 0, 0])
    assert restrict(p) == PluckerVector(2, 2, [5])
    with pytest.raises(PluckerValidationError):
        restrict(GOLDEN_G24)
    with pytest.raises(DimensionError):
        restrict(PluckerVector(2, 2, [5]))


def test_replay_and_composed():
    # w_1 -> w_1 - w_2 - w_3 vanishes on the columns (1, 1), (0, 1), (1, 0)
    p = PluckerVector(2, 3, [1, -1, -1])
    steps = [
        TraceStep(elementary_subtract(3, 1, 2), STAGE.MinSubtract, 3),
        TraceStep(elementary_subtract(3, 1, 3), STAGE.MinSubtract, 3),
        TraceStep(drop_to_last(3, 1), STAGE.CoordinateDrop, 3),
    ]
    trace = Trace(2, 3).extend(steps)
    vectors = list(replay(trace, p))
    assert vectors[-1] == PluckerVector(2, 2, [-1])
    total = composed(trace)
    assert abs(determinant(total.matrix)) == 1
    assert push_plucker(p, total).entries[0] == -1
