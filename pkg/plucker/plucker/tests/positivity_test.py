from unittest.mock import patch

import pytest

from plucker.coordinates import compute_plucker
from plucker.exceptions import DimensionError, ZeroCoordinateError
from plucker.models import DESCRIPTOR, PARITY, PluckerVector
from plucker.positivity import (
    is_totally_positive,
    logger,
    negative_parity,
    positivize_g2n,
)
from plucker.tests.conftest import (
    GOLDEN_G24,
    GOLDEN_G24_MATRIX,
    GOLDEN_G24_POSITIVE,
    GOLDEN_G36,
)
from plucker.transforms import apply_matrix, push_plucker

SIGNED_PERMUTATIONS = (DESCRIPTOR.ColumnSwap, DESCRIPTOR.SignFlip)


def test_positivize_golden_example():
    positive, applied = positivize_g2n(GOLDEN_G24)
    assert positive.entries == GOLDEN_G24_POSITIVE
    assert [u.descriptor.kind for u in applied] == [DESCRIPTOR.ColumnSwap]
    assert applied[0].descriptor.params == (2, 3)


def test_positivize_transforms_act_on_matrices():
    positive, applied = positivize_g2n(GOLDEN_G24)
    m = GOLDEN_G24_MATRIX
    for u in applied:
        m = apply_matrix(u, m)
    assert compute_plucker(m) == positive


def test_strict_scan_gives_the_same_vector(instance_factory):
    for _ in range(50):
        _, p = instance_factory(2, 6, zero_free=True)
        sorted_result, _ = positivize_g2n(p, strict=False)
        scanned, applied = positivize_g2n(p, strict=True)
        assert scanned == sorted_result
        assert all(u.descriptor.kind in SIGNED_PERMUTATIONS for u in applied)


@patch("plucker.positivity.settings.STRICT_TRACE", True)
def test_strict_scan_from_settings():
    positive, applied = positivize_g2n(GOLDEN_G24)
    assert positive.entries == GOLDEN_G24_POSITIVE


def test_positivize_random_vectors(rng, instance_factory):
    for _ in range(200):
        n = int(rng.integers(3, 9))
        _, p = instance_factory(2, n, zero_free=True)
        positive, applied = positivize_g2n(p)
        assert is_totally_positive(positive)
        assert sorted(positive.entries) == sorted(abs(v) for v in p.entries)
        assert all(u.descriptor.kind in SIGNED_PERMUTATIONS for u in applied)
        for u in applied:
            p = push_plucker(p, u)
        assert p == positive


def test_positivize_logs_swap_counts():
    with patch.object(logger, "debug") as debug:
        positivize_g2n(GOLDEN_G24)
    debug.assert_called_once_with("1 swaps in G(2,4), C(2,2)=1")


def test_positivize_refuses():
    with pytest.raises(DimensionError):
        positivize_g2n(GOLDEN_G36)
    with pytest.raises(ZeroCoordinateError):
        positivize_g2n(PluckerVector(2, 3, [1, 0, 2]))


def test_negative_parity():
    assert negative_parity(GOLDEN_G36) == PARITY.odd
    assert negative_parity(GOLDEN_G24) == PARITY.odd
    assert negative_parity(PluckerVector(2, 3, [1, -2, -3])) == PARITY.even
    with pytest.raises(ZeroCoordinateError):
        negative_parity(PluckerVector(2, 3, [1, 0, 2]))
