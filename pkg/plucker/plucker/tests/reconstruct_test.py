from unittest.mock import patch

import pytest

from plucker.coordinates import compute_plucker, scale
from plucker.exceptions import (
    DescentViolation,
    DimensionError,
    IncompleteTraceError,
    PluckerValidationError,
)
from plucker.generators import random_transform
from plucker.helpers import determinant, matmul
from plucker.minee import minee_run
from plucker.models import ALGORITHM, LatticeMatrix, PluckerVector, Trace
from plucker.reconstruct import admissible_tuple, assemble, solve, sublattice_index
from plucker.tests.conftest import GOLDEN_G24, GOLDEN_G36
from plucker.transforms import compose


@pytest.mark.parametrize("algorithm", [ALGORITHM.mee, ALGORITHM.minee])
def test_solve_golden_example(algorithm):
    trace, result = solve(GOLDEN_G24, algorithm=algorithm)
    assert trace.is_complete
    assert result.sublattice_index == 1
    assert compute_plucker(result.matrix) == GOLDEN_G24
    assert all(abs(determinant(step.transform.matrix)) == 1 for step in trace.steps)


@pytest.mark.parametrize("algorithm", [ALGORITHM.mee, ALGORITHM.minee])
def test_solve_scaled_vector(algorithm):
    p = scale(GOLDEN_G24, 6)
    trace, result = solve(p, algorithm=algorithm)
    assert result.sublattice_index == 6
    assert abs(result.p_hat) == 6
    assert compute_plucker(result.matrix) == p
    assert sublattice_index(result.matrix) == 6


def test_solve_unknown_algorithm():
    with pytest.raises(PluckerValidationError):
        solve(GOLDEN_G24, algorithm="lll")


def test_solve_reports_failed_assembly():
    with patch(
        "plucker.reconstruct.assemble",
        side_effect=PluckerValidationError("does not reconstruct"),
    ):
        with pytest.raises(DescentViolation) as e:
            solve(GOLDEN_G24)
    assert e.value.state == GOLDEN_G24


def test_assemble_errors():
    trace = minee_run(GOLDEN_G24)
    with pytest.raises(PluckerValidationError):
        assemble(trace, PluckerVector(2, 4, [1, 0, 0, 0, 0, 0]))
    with pytest.raises(DimensionError):
        assemble(trace, GOLDEN_G36)
    with pytest.raises(IncompleteTraceError):
        assemble(Trace(2, 4), GOLDEN_G24)


def test_admissible_tuples_span_the_same_plane():
    trace = minee_run(GOLDEN_G36)
    p_hat = trace.terminal_p_hat
    seed = ((p_hat, 5, -2), (0, 1, 7), (0, 0, 1))
    m = admissible_tuple(trace, seed)
    assert compute_plucker(m).entries in (
        GOLDEN_G36.entries,
        tuple(-v for v in GOLDEN_G36.entries),
    )
    with pytest.raises(PluckerValidationError):
        admissible_tuple(trace, ((2, 0, 0), (0, 1, 0), (0, 0, 1)))
    with pytest.raises(DimensionError):
        admissible_tuple(trace, ((1, 0), (0, 1)))


def _diagonal_seed(k, p_hat):
    return tuple(
        tuple((p_hat if r == 0 else 1) if r == c else 0 for c in range(k))
        for r in range(k)
    )


def _random_seed(rng, k, p_hat):
    unimodular = compose(random_transform(k, rng), random_transform(k, rng))
    return matmul(unimodular.matrix, _diagonal_seed(k, p_hat))


def _up_to_sign(p):
    return {p.entries, tuple(-value for value in p.entries)}


def test_admissible_tuple_of_diagonal_seed_matches_assemble(rng, instance_factory):
    for _ in range(50):
        k = int(rng.integers(2, 4))
        _, p = instance_factory(k, int(rng.integers(k + 1, 7)), bound=15)
        trace = minee_run(p)
        m = admissible_tuple(trace, _diagonal_seed(k, trace.terminal_p_hat))
        assembled = assemble(trace, p).matrix
        head, *rest = assembled.rows
        negated = LatticeMatrix((tuple(-v for v in head),) + tuple(rest))
        assert m in (assembled, negated)


def test_admissible_tuples_of_random_seeds(rng, instance_factory):
    for _ in range(100):
        k = int(rng.integers(2, 4))
        _, p = instance_factory(k, int(rng.integers(k + 1, 7)), bound=15)
        trace = minee_run(p)
        first = admissible_tuple(trace, _random_seed(rng, k, trace.terminal_p_hat))
        second = admissible_tuple(trace, _random_seed(rng, k, trace.terminal_p_hat))
        assert compute_plucker(first).entries in _up_to_sign(p)
        assert _up_to_sign(compute_plucker(first)) == _up_to_sign(
            compute_plucker(second)
        )


def test_sublattice_index():
    assert sublattice_index(LatticeMatrix([[2, 0], [0, 3]])) == 6
    assert sublattice_index(LatticeMatrix([[2, 0, 4], [0, 2, 6]])) == 4
