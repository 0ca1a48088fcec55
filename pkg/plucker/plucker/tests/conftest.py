"""
This module sets up the test configuration. It defines the golden vectors
and factory fixtures producing seeded random instances, so that a failing
property test can be rerun from its seed.
"""
import pytest

from plucker.generators import make_rng, random_decomposable, random_lattice_matrix
from plucker.models import LatticeMatrix, PluckerVector

# the worked G(2,4) example and a realizing matrix
GOLDEN_G24 = PluckerVector(2, 4, [10, 10, 12, -15, 3, 21])
GOLDEN_G24_MATRIX = LatticeMatrix([[4, 1, 7, 0], [-6, 1, -8, 3]])
GOLDEN_G24_POSITIVE = (10, 10, 12, 15, 21, 3)

# the G(3,6) example with an odd number of negative coordinates
GOLDEN_G36_MATRIX = LatticeMatrix(
    [[1, 0, 0, 1, 1, 1], [0, 1, 0, -3, -2, -1], [0, 0, 1, 8, 5, 1]]
)
GOLDEN_G36 = PluckerVector(
    3, 6, [1, 8, 5, 1, 3, 2, 1, 1, 5, 3, 1, 1, 1, 3, 7, 4, 1, 2, 1, -1]
)

# a G(2,4) vector with p_{1,2} = 0 whose first column is not zero
PROPORTIONAL_MATRIX = LatticeMatrix([[1, 2, 1, 0], [0, 0, 1, 1]])
PROPORTIONAL = PluckerVector(2, 4, [0, 1, 1, 2, 2, 1])

NON_DECOMPOSABLE = PluckerVector(2, 4, [1, 0, 0, 0, 0, 1])


@pytest.fixture(name="rng")
def fixture_rng():
    return make_rng(20200517)


@pytest.fixture(name="instance_factory")
def fixture_instance_factory(rng):
    """Factory method fixture drawing full-rank matrices and their vectors."""

    def create_instance(k=2, n=4, bound=20, zero_free=False):
        return random_decomposable(k, n, bound=bound, rng=rng, zero_free=zero_free)

    return create_instance


@pytest.fixture(name="matrix_factory")
def fixture_matrix_factory(rng):
    """Factory method fixture drawing full-rank integer matrices as row lists."""

    def create_matrix(k=2, n=4, bound=20):
        matrix = random_lattice_matrix(k, n, bound=bound, rng=rng)
        return [list(row) for row in matrix.rows]

    return create_matrix


@pytest.fixture(name="write_file")
def fixture_write_file(tmp_path):
    """Factory method fixture writing text to a fresh file, returns the path."""
    counter = iter(range(10 ** 6))

    def create_file(text, suffix=".txt"):
        path = tmp_path / f"input{next(counter)}{suffix}"
        path.write_text(text, encoding="utf-8")
        return str(path)

    return create_file
