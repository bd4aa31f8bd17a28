import pytest

from numeric.schemas import NumericParams
from qsp.cartan import CartanDatum


@pytest.fixture(params=[0, -1, -2, -3])
def a_ij(request) -> int:
    return request.param


@pytest.fixture
def fixed_datum(a_ij) -> CartanDatum:
    """Rank two, `tau = id`, `a_12 = a_ij`."""

    return CartanDatum.rank_two(a_ij, 'fixed')


@pytest.fixture
def swapped_datum(a_ij) -> CartanDatum:
    """Rank two, `tau = (1 2)`, symmetric matrix with `a_12 = a_ij`."""

    return CartanDatum.rank_two(a_ij, 'swap')


@pytest.fixture(scope='session')
def three_index() -> CartanDatum:
    return CartanDatum.three_index()


@pytest.fixture(scope='session')
def params() -> NumericParams:
    return NumericParams(q=0.5, r=2.0, grid=128)
