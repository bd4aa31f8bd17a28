import random
from itertools import product

import pytest

from algebra.errors import ParameterError
from qsp import star
from qsp.cartan import CartanDatum
from qsp.elements import NCElem, TorusMonomial
from qsp.star import from_star_basis, star_coefficient, star_mul, star_power, to_star_basis


def letter(datum, i):
    return NCElem.letter(datum, i)


def word(datum, *letters):
    return NCElem.word(datum, letters)


def test_fixed_letter_squares_to_a_torus_correction(fixed_datum):
    f1 = letter(fixed_datum, '1')
    torus = NCElem.torus(fixed_datum, TorusMonomial.generator(fixed_datum, '1'))
    assert star_mul(f1, f1) == f1 * f1 + torus.scale(star_coefficient(fixed_datum, '1'))


def test_letters_without_partner_multiply_plainly(fixed_datum):
    f1, f2 = letter(fixed_datum, '1'), letter(fixed_datum, '2')
    assert star_mul(f2, f1) == f2 * f1


def test_unit_is_neutral(three_index):
    e = word(three_index, '1', '2', '3')
    one = NCElem.one(three_index)
    assert star_mul(one, e) == e
    assert star_mul(e, one) == e


def test_mismatched_data_are_rejected(three_index, fixed_datum):
    with pytest.raises(ParameterError):
        star_mul(letter(three_index, '1'), letter(fixed_datum, '1'))


def words_up_to(max_len):
    return [w for length in range(max_len + 1) for w in product(('1', '2', '3'), repeat=length)]


WORDS = words_up_to(2)


@pytest.mark.parametrize('w', words_up_to(4))
@pytest.mark.parametrize('i', ['1', '2', '3'])
def test_right_rule(three_index, w, i):
    assert star.star_mul_right_check(word(three_index, *w), letter(three_index, i))


def test_right_rule_needs_a_single_letter(three_index):
    with pytest.raises(ParameterError):
        star.star_mul_right_check(letter(three_index, '1'), word(three_index, '1', '2'))


@pytest.mark.parametrize('a, b, c', [
    (('1',), ('1',), ('1',)),
    (('2',), ('3',), ('2',)),
    (('1', '2'), ('3',), ('1',)),
    (('3',), ('1', '1'), ('2',)),
])
def test_associativity(three_index, a, b, c):
    assert star.associativity_check(word(three_index, *a), word(three_index, *b), word(three_index, *c))


def test_associativity_on_random_triples(three_index):
    rng = random.Random(0)
    pool = [w for w in words_up_to(4) if w]
    for _ in range(8):
        a, b, c = (rng.choice(pool) for _ in range(3))
        assert star.associativity_check(word(three_index, *a), word(three_index, *b), word(three_index, *c)), (a, b, c)


def test_partials_commute(three_index):
    for w in words_up_to(6):
        for i, j in product(three_index.indices, repeat=2):
            assert star.partials_commute_check(three_index, w, i, j), (w, i, j)


@pytest.mark.parametrize('a, b', [(('1',), ('1', '1')), (('2', '1'), ('3',)), (('3', '2'), ('2', '3'))])
def test_grading(three_index, a, b):
    assert star.grading_check(word(three_index, *a), word(three_index, *b))


def test_grading_rejects_inhomogeneous(three_index):
    mixed = letter(three_index, '1') + letter(three_index, '2')
    with pytest.raises(ParameterError):
        star.grading_check(mixed, letter(three_index, '1'))


@pytest.mark.parametrize('n', range(5))
def test_swapped_letter_powers_are_plain(three_index, n):
    assert star.tau_swap_power_check(three_index, '2', n)


def test_swapped_power_check_needs_a_moved_index(three_index):
    with pytest.raises(ParameterError):
        star.tau_swap_power_check(three_index, '1', 2)


def test_fixed_letter_power_differs_from_plain_power(three_index):
    assert star_power(letter(three_index, '1'), 2) != word(three_index, '1', '1')


@pytest.mark.parametrize('w', WORDS + [('1', '1', '1'), ('2', '1', '3', '1')])
def test_star_basis_round_trip(three_index, w):
    e = word(three_index, *w)
    assert from_star_basis(to_star_basis(e)) == e


def test_star_basis_of_a_star_monomial_is_a_single_word():
    datum = CartanDatum.rank_two(-1, 'fixed')
    monomial = star.star_word(datum, ('1', '2', '1'))
    assert to_star_basis(monomial) == word(datum, '1', '2', '1')
