import pytest

from algebra.errors import AsymmetricLaurentError, NonExactDivisionError
from algebra.polynomials import SymLaurent, XPoly, XYPoly, x_to_z, z_to_x
from algebra.scalars import ParamScalar, vpow

X = XPoly.x()
C = ParamScalar.symbol('c')


def test_xpoly_rendering():
    assert (X ** 2 - C).to_text() == 'x^2 - c'
    assert (X * 4 + 1).to_text() == '4*x + 1'
    assert XPoly().to_text() == '0'


def test_xpoly_latex_uses_q_powers():
    assert (X * vpow(2)).to_latex() == 'q x'


def test_xpoly_degree_and_parity():
    p = X ** 3 * 2 - X
    assert p.degree == 3
    assert p.leading_coefficient() == 2
    assert p.has_parity(1)
    assert not p.has_parity(0)


def test_xypoly_swap_and_slices():
    p = XYPoly.x() ** 2 * XYPoly.y() + 3
    assert p.swap() == XYPoly.y() ** 2 * XYPoly.x() + 3
    slices = p.slices('x')
    assert slices[1] == X ** 2
    assert slices[0] == XPoly.constant(3)
    assert XYPoly.from_slices(slices, 'x') == p


def test_xypoly_product():
    assert XYPoly.product(X + 1, X) == (XYPoly.x() + 1) * XYPoly.y()


@pytest.mark.parametrize('n', range(6))
def test_z_round_trip(n):
    p = X ** n + X * C
    assert z_to_x(x_to_z(p)) == p


def test_x_to_z():
    assert x_to_z(X ** 2) == SymLaurent({2: ParamScalar.constant(1) / 4, 0: ParamScalar.constant(1) / 2, -2: ParamScalar.constant(1) / 4})


def test_asymmetric_laurent_is_rejected():
    with pytest.raises(AsymmetricLaurentError):
        z_to_x(SymLaurent({1: 1}))


def test_division_by_z_minus_zinv():
    s = SymLaurent({2: 1, -2: -1})
    assert s.divide_by_z_minus_zinv() == SymLaurent({1: 1, -1: 1})
    with pytest.raises(NonExactDivisionError):
        SymLaurent({2: 1, -2: 1}).divide_by_z_minus_zinv()


def test_json_shape():
    data = (XYPoly.x() * XYPoly.y() - 1).to_json()
    assert data['vars'] == ['x', 'y']
    assert [term[0] for term in data['terms']] == [[1, 1], [0, 0]]
