from types import SimpleNamespace
from unittest.mock import Mock, patch

import pytest

from plucker.coordinates import check_relations, compute_plucker, plucker_gcd
from plucker.euclid import JacobiPerronResult, jacobi_perron
from plucker.exceptions import (
    DescentViolation,
    NonDecomposableError,
    PluckerValidationError,
)
from plucker.mee import mee_dim_reduce
from plucker.minee import (
    MineeState,
    minee_dim_reduce,
    minee_run,
    minee_select,
    minee_step,
    minee_subtract,
    relation_coefficients,
)
from plucker.models import DESCRIPTOR, STAGE, LatticeMatrix, PluckerVector, Trace
from plucker.reconstruct import assemble
from plucker.tests.conftest import (
    GOLDEN_G24,
    GOLDEN_G36,
    NON_DECOMPOSABLE,
    PROPORTIONAL,
)
from plucker.transforms import replay

ENGINE = "plucker.integrations.registered_reduction_engine"
MULTIPLIERS = [-5, -4, -3, -2, -1, 1, 2, 3, 4, 5]


def test_select_smallest_and_neighbour():
    i, j, t = minee_select(GOLDEN_G24)
    assert i.indices == (2, 4)
    assert j.indices == (1, 4)
    assert t == 1


def test_subtract_reduces_modulo_minimum():
    i, j, t = minee_select(GOLDEN_G24)
    p = minee_subtract(GOLDEN_G24, i, j, t)
    assert p.entries == (10, 70, 0, -15, 3, 21)


def test_step_records_subtraction():
    state = minee_step(MineeState(GOLDEN_G24, Trace(2, 4)))
    assert state.current_min is None
    (step,) = state.trace.steps
    assert step.stage_label == STAGE.MinSubtract
    assert step.transform.descriptor.params == (1, 2, 4)


def test_relation_coefficients():
    assert relation_coefficients(PROPORTIONAL, 1, (3,)) == (2, -1)


def test_dim_reduce_with_engine():
    p, steps = minee_dim_reduce(PROPORTIONAL)
    assert p == PluckerVector(2, 3, [1, 1, 1])
    assert [step.stage_label for step in steps] == [
        STAGE.DimReductionJP,
        STAGE.DimReductionJP,
        STAGE.CoordinateDrop,
    ]
    assert steps[0].transform.descriptor.kind == DESCRIPTOR.SignFlip
    assert steps[1].transform.descriptor.kind == DESCRIPTOR.General


def test_dim_reduce_zero_column():
    p = compute_plucker(LatticeMatrix([[0, 1, 0], [0, 0, 1]]))
    reduced, steps = minee_dim_reduce(p)
    assert reduced == PluckerVector(2, 2, [1])
    assert [step.stage_label for step in steps] == [STAGE.CoordinateDrop]


def test_dim_reduce_uses_registered_engine():
    def unsigned_engine(coefficients):
        return SimpleNamespace(matrix=jacobi_perron(coefficients).matrix)

    engine = Mock(side_effect=unsigned_engine)
    with patch(ENGINE, engine):
        p, _ = minee_dim_reduce(PROPORTIONAL)
    engine.assert_called_once_with((2, -1))
    assert p == PluckerVector(2, 3, [1, 1, 1])


def test_dim_reduce_rejects_bad_engine():
    bad = JacobiPerronResult(1, (), ((1, 0), (0, 2)), ())
    with patch(ENGINE, Mock(return_value=bad)):
        with pytest.raises(DescentViolation) as e:
            minee_dim_reduce(PROPORTIONAL)
    assert e.value.state == PROPORTIONAL


def test_run_terminal_input():
    trace = minee_run(PluckerVector(3, 3, [4]))
    assert trace.steps == ()
    assert trace.terminal_p_hat == 4


def test_run_golden_examples():
    for p in (GOLDEN_G24, GOLDEN_G36):
        trace = minee_run(p)
        assert abs(trace.terminal_p_hat) == 1
        assert compute_plucker(assemble(trace, p).matrix) == p


def test_run_refuses_non_decomposable():
    with pytest.raises(NonDecomposableError):
        minee_run(NON_DECOMPOSABLE)


def test_run_step_limit():
    with pytest.raises(DescentViolation) as e:
        minee_run(GOLDEN_G24, max_steps=0)
    assert e.value.step == 1


def test_run_random_instances(rng, instance_factory):
    for _ in range(40):
        k = int(rng.integers(2, 4))
        n = int(rng.integers(k + 1, 7))
        _, p = instance_factory(k, n, bound=12)
        trace = minee_run(p)
        assert abs(trace.terminal_p_hat) == plucker_gcd(p)
        assert compute_plucker(assemble(trace, p).matrix) == p


def test_minimum_decreases_on_every_subtraction(instance_factory):
    for _ in range(10):
        _, p = instance_factory(3, 6, bound=10)
        trace = minee_run(p)
        before = p
        for step, after in zip(trace.steps, replay(trace, p)):
            if step.stage_label == STAGE.MinSubtract and 0 not in after.entries:
                smallest = min(abs(v) for v in before.entries if v)
                assert min(abs(v) for v in after.entries) < smallest
            before = after


def _full_rank_vector(rows):
    if not all(any(row[c] for row in rows) for c in range(len(rows[0]))):
        return None
    try:
        return compute_plucker(LatticeMatrix(rows))
    except PluckerValidationError:
        return None


def _proportional_instance(rng, matrix_factory):
    # columns s and t are nonzero multiples of one vector, no column is zero
    while True:
        n = int(rng.integers(3, 8))
        rows = matrix_factory(2, n, bound=9)
        s, t = (int(c) for c in rng.choice(n, size=2, replace=False))
        v = [int(value) for value in rng.integers(-9, 10, size=2)]
        a, b = (int(value) for value in rng.choice(MULTIPLIERS, size=2))
        for row, value in zip(rows, v):
            row[s], row[t] = a * value, b * value
        p = _full_rank_vector(rows)
        if p is not None:
            return p


def test_dim_reduce_agrees_with_mee(rng, matrix_factory):
    for _ in range(200):
        p = _proportional_instance(rng, matrix_factory)
        reduced, _ = minee_dim_reduce(p)
        expected, _ = mee_dim_reduce(p)
        assert reduced.n == p.n - 1
        assert sorted(map(abs, reduced.entries)) == sorted(map(abs, expected.entries))
        assert check_relations(reduced)
        assert plucker_gcd(reduced) == plucker_gcd(p)


def test_dim_reduce_dependent_column_in_g36(rng, matrix_factory):
    reduced_count = 0
    while reduced_count < 100:
        rows = matrix_factory(3, 6, bound=9)
        for row in rows:
            row[3] = row[1] + row[2]
        p = _full_rank_vector(rows)
        if p is None:
            continue
        reduced, _ = minee_dim_reduce(p)
        assert reduced.n == 5
        assert plucker_gcd(reduced) == plucker_gcd(p)
        assert check_relations(reduced)
        reduced_count += 1
