import pytest

from maxcomm.algebra import AlgebraData
from maxcomm.catalog import catalog_algebra
from maxcomm.fields import PrimeField, Rationals
from maxcomm.linalg import Matrix


@pytest.fixture
def Q():
    return Rationals()


@pytest.fixture
def F101():
    return PrimeField(101)


@pytest.fixture
def shift():
    """Nilpotent Jordan block of size n (ones below the diagonal)."""

    def make(n, field=None):
        field = field or Rationals()
        rows = [[1 if i == j + 1 else 0 for j in range(n)] for i in range(n)]
        return Matrix.from_rows(field, rows)

    return make


@pytest.fixture
def algebra():
    def get(class_id, field=None):
        return catalog_algebra(class_id, field)

    return get


@pytest.fixture
def split_algebra():
    """k x k with basis 1, e and e^2 = e."""

    def make(field=None):
        field = field or Rationals()
        constants = [[[1, 0], [0, 1]], [[0, 1], [0, 1]]]
        return AlgebraData.from_structure_constants(field, ('1', 'e'), constants)

    return make
