import pytest

from algebra.errors import ParameterError
from algebra.qnumbers import qnum_symmetric, qpower
from hermite.bivariate import serre_wv_sum
from qsp import serre
from qsp.cartan import CartanDatum
from qsp.elements import NCElem
from qsp.star import curve_action

PAIRS = [(m, n) for total in range(4) for m in range(total + 1) for n in [total - m]]


def test_serre_polynomial_of_a_simply_laced_pair():
    datum = CartanDatum.rank_two(-1, 'fixed')
    expected = (
        NCElem.word(datum, ('1', '1', '2'))
        - NCElem.word(datum, ('1', '2', '1')).scale(qnum_symmetric(2, 1))
        + NCElem.word(datum, ('2', '1', '1'))
    )
    assert serre.serre_poly(datum, '1', '2') == expected


def test_serre_polynomial_needs_distinct_indices(fixed_datum):
    with pytest.raises(ParameterError):
        serre.serre_poly(fixed_datum, '1', '1')
    with pytest.raises(ParameterError):
        serre.serre_poly_star(fixed_datum, '2', '2')


@pytest.mark.parametrize('m, n', PAIRS)
def test_words_through_wmn(fixed_datum, m, n):
    assert serre.verify_lemma_wmn(fixed_datum, m, n, '1', '2')
    assert serre.extract_wmn_check(fixed_datum, m, n, '1', '2')


def test_serre_element_through_bivariate_sum(fixed_datum):
    assert serre.verify_dqS_bivariate(fixed_datum, '1', '2')


@pytest.mark.parametrize('variant', ['wv', 'vw'])
def test_serre_element_through_univariate_sums(fixed_datum, variant):
    assert serre.verify_dqS_univariate(fixed_datum, '1', '2', variant)


@pytest.mark.parametrize('order', ['wv', 'vw'])
def test_both_orders_resum_to_the_serre_element_itself(fixed_datum, a_ij, order):
    w = serre.in_ci(fixed_datum, '1', serre_wv_sum(1, a_ij, order=order))
    f1, f2 = NCElem.letter(fixed_datum, '1'), NCElem.letter(fixed_datum, '2')
    resummed = curve_action(w, f1, f1, f2)
    assert resummed == serre.serre_poly(fixed_datum, '1', '2')
    assert resummed != -serre.serre_poly(fixed_datum, '1', '2')


def test_unknown_variant(fixed_datum):
    with pytest.raises(ParameterError, match='unknown variant'):
        serre.verify_dqS_univariate(fixed_datum, '1', '2', 'ww')


def test_relation_table_matches_closed_form(fixed_datum, a_ij):
    table = serre.relation_table(fixed_datum, '1', '2')
    assert table.a_ij == a_ij
    assert table.pair == ('1', '2')
    assert table.matches_closed_form


def test_relation_table_orthogonal_pair_is_undeformed():
    table = serre.relation_table(CartanDatum.rank_two(0, 'fixed'), '1', '2')
    assert table.terms == []
    assert table.text == '0'


def test_relation_table_simply_laced():
    datum = CartanDatum.rank_two(-1, 'fixed')
    table = serre.explicit_relation_table(datum, '1', '2')
    assert table == NCElem.word(datum, ('2',)).scale(-(datum.c_symbol('1') * qpower(1, 1)))


def test_relation_table_outside_covered_range():
    with pytest.raises(ParameterError, match='relation table covers'):
        serre.relation_table(CartanDatum.rank_two(-4, 'fixed'), '1', '2')


def test_fixed_checks_reject_swapped_pairs(swapped_datum):
    with pytest.raises(ParameterError):
        serre.verify_lemma_wmn(swapped_datum, 1, 1, '1', '2')
    with pytest.raises(ParameterError):
        serre.relation_table(swapped_datum, '1', '2')


@pytest.mark.parametrize('m, n', PAIRS)
def test_swapped_expansion(swapped_datum, m, n):
    assert serre.verify_tau_ij_expansion(swapped_datum, m, n, '1', '2')


@pytest.mark.parametrize('n', range(5))
def test_fj_star_fi_power(swapped_datum, n):
    assert serre.fj_star_fi_power_check(swapped_datum, n, '1', '2')


def test_swapped_serre_relation(swapped_datum):
    assert serre.verify_sbb2(swapped_datum, '1', '2')


def test_swapped_checks_reject_fixed_pairs(fixed_datum):
    with pytest.raises(ParameterError):
        serre.verify_sbb2(fixed_datum, '1', '2')


@pytest.mark.parametrize('d', [1, 2])
@pytest.mark.parametrize('a', [0, -1, -2, -3, -4])
def test_sum_identities(a, d):
    assert serre.verify_sum_identities(a, d)


def test_undeformed_when_tau_moves_elsewhere(three_index):
    assert serre.undeformed_serre_check(three_index, '2', '1')
    with pytest.raises(ParameterError):
        serre.undeformed_serre_check(three_index, '2', '3')
