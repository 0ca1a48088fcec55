import pytest

from plucker import integrations
from plucker.euclid import jacobi_perron
from plucker.integrations.engines import reduce_coefficients
from plucker.minee import minee_dim_reduce
from plucker.models import PluckerVector
from plucker.tests.conftest import PROPORTIONAL


@pytest.fixture(name="restore_engine")
def fixture_restore_engine():
    yield
    integrations.register_integrations(reduction_engine=reduce_coefficients)


def test_default_engine_is_jacobi_perron():
    assert reduce_coefficients((6, 10, 15)) == jacobi_perron((6, 10, 15))
    assert integrations.registered_reduction_engine is reduce_coefficients


def test_register_reduction_engine(restore_engine):
    calls = []

    def recording_engine(coefficients):
        calls.append(coefficients)
        return jacobi_perron(coefficients)

    integrations.register_integrations(reduction_engine=recording_engine)
    assert integrations.registered_reduction_engine == recording_engine
    p, _ = minee_dim_reduce(PROPORTIONAL)
    assert calls == [(2, -1)]
    assert p == PluckerVector(2, 3, [1, 1, 1])


def test_register_integrations_errors():
    with pytest.raises(ValueError):
        integrations.register_integrations()
    with pytest.raises(TypeError):
        integrations.register_integrations(reduction_engine="jacobi_perron")
