"""Quantum Serre polynomials and their deformed versions under the star product."""
from __future__ import annotations

import logging

from algebra.errors import ParameterError
from algebra.polynomials import XYPoly
from algebra.qnumbers import qbinomial, qnum_nonsym, qnum_symmetric, qpoch_q, qpower, substitute_combined_c
from algebra.scalars import ParamScalar, RatFuncV

from hermite.bivariate import serre_wmn_sum, serre_wv_sum, wmn_poly

from .cartan import CartanDatum
from .elements import NCElem, TorusMonomial
from .schemas import NCTerm, RelationTable
from .star import curve_action, star_coefficient, star_mul, star_power, star_word, to_star_basis

logger = logging.getLogger(__name__)

SUPPORTED_TABLE = (0, -1, -2, -3)


def _require_fixed(datum: CartanDatum, i: str, j: str) -> None:
    if i == j or datum.tau(i) != i:
        raise ParameterError(f'needs tau({i}) = {i} != {j}')


def _require_swapped(datum: CartanDatum, i: str, j: str) -> None:
    if i == j or datum.tau(i) != j:
        raise ParameterError(f'needs tau({i}) = {j} != {i}')


def _gap(datum: CartanDatum, i: str) -> RatFuncV:
    d = datum.d(i)
    return RatFuncV(qpower(1, d) - qpower(-1, d))


def serre_poly(datum: CartanDatum, i: str, j: str) -> NCElem:
    """`S_ij(F_i, F_j) = sum_n (-1)^n [1 - a_ij, n]_{q_i} F_i^{1-a_ij-n} F_j F_i^n`, concatenation products."""

    if i == j:
        raise ParameterError('serre_poly needs i != j')
    top = 1 - datum.a(i, j)
    result = NCElem.zero(datum)
    for n in range(top + 1):
        word = (i,) * (top - n) + (j,) + (i,) * n
        result = result + NCElem.word(datum, word, qbinomial(top, n, datum.d(i)) * (-1) ** n)
    return result


def serre_poly_star(datum: CartanDatum, i: str, j: str) -> NCElem:
    """`S_ij(F_i ⊛, F_j)`: the same sum with every product a star product, in normal form."""

    if i == j:
        raise ParameterError('serre_poly_star needs i != j')
    top = 1 - datum.a(i, j)
    result = NCElem.zero(datum)
    for n in range(top + 1):
        word = (i,) * (top - n) + (j,) + (i,) * n
        result = result + star_word(datum, word).scale(qbinomial(top, n, datum.d(i)) * (-1) ** n)
    return result


def in_ci(datum: CartanDatum, i: str, poly: XYPoly) -> XYPoly:
    """Writes the combined constant `c` of `poly` as `-c_i q_i^2 / (q_i - q_i^{-1})`."""

    return substitute_combined_c(poly, datum.d(i), datum.c_name(i))


def verify_lemma_wmn(datum: CartanDatum, m: int, n: int, i: str, j: str) -> bool:
    """`F_i^m F_j F_i^n = F_j ↷ w_{m,n}(F_i ⊛, F_i)`."""

    _require_fixed(datum, i, j)
    w = in_ci(datum, i, wmn_poly(m, n, datum.d(i), datum.a(i, j)))
    letter_i, letter_j = NCElem.letter(datum, i), NCElem.letter(datum, j)
    return curve_action(w, letter_i, letter_i, letter_j) == NCElem.word(datum, (i,) * m + (j,) + (i,) * n)


def extract_wmn(datum: CartanDatum, m: int, n: int, i: str, j: str) -> XYPoly:
    """Reads `w_{m,n}` off the star-basis expansion of `F_i^m F_j F_i^n`.

    Raises:
        `ParameterError`: If a star monomial is not of the shape `F_i^{⊛r} ⊛ F_j ⊛ F_i^{⊛s}`.
    """

    _require_fixed(datum, i, j)
    expansion = to_star_basis(NCElem.word(datum, (i,) * m + (j,) + (i,) * n))
    terms = {}
    for (word, torus), coeff in expansion.terms.items():
        if not torus.is_identity or word.count(j) != 1 or set(word) - {i, j}:
            raise ParameterError(f'unexpected star monomial {word} in the expansion')
        split = word.index(j)
        terms[(split, len(word) - split - 1)] = coeff
    return XYPoly(terms)


def extract_wmn_check(datum: CartanDatum, m: int, n: int, i: str, j: str) -> bool:
    return extract_wmn(datum, m, n, i, j) == in_ci(datum, i, wmn_poly(m, n, datum.d(i), datum.a(i, j)))


def verify_dqS_bivariate(datum: CartanDatum, i: str, j: str) -> bool:
    """`sum_l (-1)^l [1 - a_ij, l] F_j ↷ w_{1-a_ij-l, l}(F_i ⊛, F_i)` is the Serre element."""

    _require_fixed(datum, i, j)
    w = in_ci(datum, i, serre_wmn_sum(datum.d(i), datum.a(i, j)))
    letter_i, letter_j = NCElem.letter(datum, i), NCElem.letter(datum, j)
    return curve_action(w, letter_i, letter_i, letter_j) == serre_poly(datum, i, j)


def verify_dqS_univariate(datum: CartanDatum, i: str, j: str, variant: str = 'wv') -> bool:
    """The Serre element through `w_{1-a-l}(F_i ⊛) ⊛ F_j ⊛ v_l(F_i ⊛)`, or `v` and `w` exchanged."""

    _require_fixed(datum, i, j)
    if variant not in ('wv', 'vw'):
        raise ParameterError(f'unknown variant {variant}')
    w = in_ci(datum, i, serre_wv_sum(datum.d(i), datum.a(i, j), order=variant))
    letter_i, letter_j = NCElem.letter(datum, i), NCElem.letter(datum, j)
    return curve_action(w, letter_i, letter_i, letter_j) == serre_poly(datum, i, j)


def explicit_relation_table(datum: CartanDatum, i: str, j: str) -> NCElem:
    """`S_ij(F_i ⊛, F_j) - S_ij(F_i, F_j)` in the star basis, for `tau(i) = i`.

    In `B_c` the ordinary Serre element vanishes, so this is the right side of
    the deformed Serre relation in the generators `B_i, B_j`.

    Raises:
        `ParameterError`: If `a_ij` is outside `{0, -1, -2, -3}` or `tau(i) != i`.
    """

    _require_fixed(datum, i, j)
    if datum.a(i, j) not in SUPPORTED_TABLE:
        raise ParameterError(f'relation table covers a_ij in {SUPPORTED_TABLE}, got {datum.a(i, j)}')
    return to_star_basis(serre_poly_star(datum, i, j) - serre_poly(datum, i, j))


def expected_relation_table(datum: CartanDatum, i: str, j: str) -> NCElem:
    """Closed forms of the deformed Serre relation for `a_ij` in `{0, -1, -2, -3}`, star basis."""

    _require_fixed(datum, i, j)
    a_ij, d = datum.a(i, j), datum.d(i)
    qc = datum.c_symbol(i) * qpower(1, d)
    two, three, four = (qnum_symmetric(k, d) for k in (2, 3, 4))

    def b(*word: str) -> NCElem:
        return NCElem.word(datum, word)

    if a_ij == 0:
        return NCElem.zero(datum)
    if a_ij == -1:
        return b(j).scale(-qc)
    if a_ij == -2:
        return (b(i, j) - b(j, i)).scale(-(qc * two * two))
    if a_ij == -3:
        return (
            (b(i, i, j) + b(j, i, i)).scale(-(qc * (three * three + 1)))
            + b(i, j, i).scale(qc * four * (two * two + 1))
            - b(j).scale(qc * qc * three * three)
        )
    raise ParameterError(f'relation table covers a_ij in {SUPPORTED_TABLE}, got {a_ij}')


def relation_table(datum: CartanDatum, i: str, j: str) -> RelationTable:
    table = explicit_relation_table(datum, i, j)
    return RelationTable(
        pair=(i, j),
        a_ij=datum.a(i, j),
        text=table.to_text(letter='B'),
        terms=[NCTerm(**term) for term in table.to_json()],
        matches_closed_form=table == expected_relation_table(datum, i, j),
    )


def tau_correction_terms(datum: CartanDatum, m: int, n: int, i: str, j: str) -> NCElem:
    """`gamma_i q_i^{n(2-a)} (m)_{q_i^2} F_i^{m+n-1} K_j K_i^{-1} + gamma_j q_i^{(n-1)(a-2)} (n)_{q_i^2} F_i^{m+n-1} K_i K_j^{-1}`."""

    if m + n == 0:
        return NCElem.zero(datum)
    a_ij, d = datum.a(i, j), datum.d(i)
    qi_squared = qpower(2, d)
    power = star_power(NCElem.letter(datum, i), m + n - 1)
    first = (power * NCElem.torus(datum, TorusMonomial.generator(datum, j))).scale(
        star_coefficient(datum, i) * qpower(n * (2 - a_ij), d) * qnum_nonsym(m, qi_squared)
    )
    second = (power * NCElem.torus(datum, TorusMonomial.generator(datum, i))).scale(
        star_coefficient(datum, j) * qpower((n - 1) * (a_ij - 2), d) * qnum_nonsym(n, qi_squared)
    )
    return first + second


def verify_tau_ij_expansion(datum: CartanDatum, m: int, n: int, i: str, j: str) -> bool:
    """`F_i^m F_j F_i^n = F_i^{⊛m} ⊛ F_j ⊛ F_i^{⊛n}` minus the two torus-weighted corrections."""

    _require_swapped(datum, i, j)
    letter_i, letter_j = NCElem.letter(datum, i), NCElem.letter(datum, j)
    star = star_mul(star_mul(star_power(letter_i, m), letter_j), star_power(letter_i, n))
    lhs = NCElem.word(datum, (i,) * m + (j,) + (i,) * n)
    return lhs == star - tau_correction_terms(datum, m, n, i, j)


def fj_star_fi_power_check(datum: CartanDatum, n: int, i: str, j: str) -> bool:
    """`F_j ⊛ F_i^n = F_j F_i^n + gamma_j q_i^{(n-1)(a_ij-2)} (n)_{q_i^2} F_i^{n-1} K_i K_j^{-1}`."""

    _require_swapped(datum, i, j)
    a_ij, d = datum.a(i, j), datum.d(i)
    lhs = star_mul(NCElem.letter(datum, j), NCElem.word(datum, (i,) * n))
    rhs = NCElem.word(datum, (j,) + (i,) * n)
    if n:
        rhs = rhs + (
            NCElem.word(datum, (i,) * (n - 1)) * NCElem.torus(datum, TorusMonomial.generator(datum, i))
        ).scale(star_coefficient(datum, j) * qpower((n - 1) * (a_ij - 2), d) * qnum_nonsym(n, qpower(2, d)))
    return lhs == rhs


def verify_sum_identities(a_ij: int, d: int = 1) -> bool:
    """The two alternating sums over `n = 0 .. 1 - a_ij` against their closed forms.

    `sum (-1)^n [N, n] q_i^{n(2-a)} (N-n)_{q_i^2} = -q_i^{-1} (q_i^2; q_i^2)_N / (q_i - q_i^{-1})` and
    `sum (-1)^n [N, n] q_i^{n(a-2)} (n)_{q_i^2} = -q_i^{-1} (q_i^{-2}; q_i^{-2})_N / (q_i - q_i^{-1})`, `N = 1 - a_ij`.
    """

    top = 1 - a_ij
    qi_squared = qpower(2, d)
    gap = RatFuncV(qpower(1, d) - qpower(-1, d))
    first = ParamScalar()
    second = ParamScalar()
    for n in range(top + 1):
        sign_binom = qbinomial(top, n, d) * (-1) ** n
        first = first + qnum_nonsym(top - n, qi_squared) * (sign_binom * qpower(n * (2 - a_ij), d))
        second = second + qnum_nonsym(n, qi_squared) * (sign_binom * qpower(n * (a_ij - 2), d))
    first_closed = RatFuncV(-qpower(-1, d) * qpoch_q(top, base=4 * d)) / gap
    second_closed = RatFuncV(-qpower(-1, d) * qpoch_q(top, base=-4 * d)) / gap
    return first == first_closed and second == second_closed


def sbb2_correction(datum: CartanDatum, i: str, j: str) -> NCElem:
    """`c_i q_i^{-m} (q_i^2; q_i^2)_m / (q_i - q_i^{-1})^2 B_i^{m-1} K_j K_i^{-1} + c_j q_i (q_i^{-2}; q_i^{-2})_m / (q_i - q_i^{-1})^2 B_i^{m-1} K_i K_j^{-1}`."""

    d = datum.d(i)
    top = 1 - datum.a(i, j)
    gap_squared = _gap(datum, i) ** 2
    power = NCElem.word(datum, (i,) * (top - 1))
    first = (power * NCElem.torus(datum, TorusMonomial.generator(datum, j))).scale(
        datum.c_symbol(i) * (RatFuncV(qpower(-top, d) * qpoch_q(top, base=4 * d)) / gap_squared)
    )
    second = (power * NCElem.torus(datum, TorusMonomial.generator(datum, i))).scale(
        datum.c_symbol(j) * (RatFuncV(qpower(1, d) * qpoch_q(top, base=-4 * d)) / gap_squared)
    )
    return first + second


def verify_sbb2(datum: CartanDatum, i: str, j: str) -> bool:
    """`S_ij(F_i ⊛, F_j)` is the Serre element plus the two torus-weighted terms, for `tau(i) = j`."""

    _require_swapped(datum, i, j)
    return serre_poly_star(datum, i, j) == serre_poly(datum, i, j) + sbb2_correction(datum, i, j)


def undeformed_serre_check(datum: CartanDatum, i: str, j: str) -> bool:
    """`S_ij(F_i, F_j) = S_ij(F_i ⊛, F_j)` when `tau(i)` is neither `i` nor `j`."""

    if datum.tau(i) in (i, j):
        raise ParameterError(f'needs tau({i}) outside {{{i}, {j}}}')
    return serre_poly_star(datum, i, j) == serre_poly(datum, i, j)
