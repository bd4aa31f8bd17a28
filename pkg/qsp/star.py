"""Skew derivations and the star product on `H_theta ⋉ T(V^-)`.

`F_i ⊛ g = F_i g + kappa_i K_{tau(i)} K_i^{-1} dL_{tau(i)}(g)` with
`kappa_i = -c_i q^{(alpha_i, alpha_tau(i))} / (q_i - q_i^{-1})`; torus factors
multiply ordinarily on either side. A word is not the star product of its
letters, so `F_{i1} w ⊛ g` is reduced through
`F_{i1} ⊛ (w ⊛ g) - kappa_{i1} K_{tau(i1)} K_{i1}^{-1} (dL_{tau(i1)}(w) ⊛ g)`.
"""
from __future__ import annotations

from functools import lru_cache

from algebra.errors import ParameterError
from algebra.polynomials import XYPoly
from algebra.qnumbers import qpower
from algebra.scalars import ParamScalar, RatFuncV, vpow

from .cartan import CartanDatum
from .elements import NCElem, TorusMonomial, Word, word_degree


def _partial_word(datum: CartanDatum, i: str, word: Word, side: str) -> list[tuple[Word, int]]:
    """Terms of `dL_i(word)` or `dR_i(word)` as `(shorter word, exponent of q)`."""

    out = []
    for p, letter in enumerate(word):
        if letter != i:
            continue
        others = word[:p] if side == 'L' else word[p + 1:]
        exponent = sum(datum.form(i, k) for k in others)
        out.append((word[:p] + word[p + 1:], exponent))
    return out


def _partial(i: str, e: NCElem, side: str) -> NCElem:
    terms: dict = {}
    for (word, torus), coeff in e.terms.items():
        for shorter, exponent in _partial_word(e.datum, i, word, side):
            key = (shorter, torus)
            value = coeff * vpow(2 * exponent)
            terms[key] = terms[key] + value if key in terms else value
    return NCElem(e.datum, terms)


def partial_L(i: str, e: NCElem) -> NCElem:
    """`dL_i`, with `dL_i(f g) = dL_i(f) g + q^{(alpha_i, deg f)} f dL_i(g)`; torus factors are untouched."""

    return _partial(i, e, 'L')


def partial_R(i: str, e: NCElem) -> NCElem:
    """`dR_i`, with `dR_i(f g) = q^{(alpha_i, deg g)} dR_i(f) g + f dR_i(g)`; torus factors are untouched."""

    return _partial(i, e, 'R')


def _gap(datum: CartanDatum, i: str) -> RatFuncV:
    d = datum.d(i)
    return RatFuncV(qpower(1, d) - qpower(-1, d))


def star_coefficient(datum: CartanDatum, i: str) -> ParamScalar:
    """`kappa_i = -c_i q^{(alpha_i, alpha_tau(i))} / (q_i - q_i^{-1})`.

    This is the combined constant `c` when `tau(i) = i` and `gamma_i` when `tau(i) != i`.
    """

    return datum.c_symbol(i) * (RatFuncV(-vpow(2 * datum.form(i, datum.tau(i)))) / _gap(datum, i))


def right_star_coefficient(datum: CartanDatum, i: str) -> ParamScalar:
    """`-c_{tau(i)} q^{(alpha_i, alpha_tau(i))} / (q_i - q_i^{-1})`."""

    return datum.c_symbol(datum.tau(i)) * (RatFuncV(-vpow(2 * datum.form(i, datum.tau(i)))) / _gap(datum, i))


def left_star_letter(i: str, g: NCElem) -> NCElem:
    """`F_i ⊛ g`."""

    datum = g.datum
    product = NCElem.letter(datum, i) * g
    lowered = partial_L(datum.tau(i), g)
    if lowered.is_zero:
        return product
    torus = NCElem.torus(datum, TorusMonomial.generator(datum, datum.tau(i)))
    return product + (torus * lowered).scale(star_coefficient(datum, i))


def right_star_letter(g: NCElem, i: str) -> NCElem:
    """`g ⊛ F_i` from the right-hand rule.

    For a term `u K_lambda`, `K_lambda F_i = q^{-(lambda, alpha_i)} F_i K_lambda` is
    applied first, then `u ⊛ F_i = u F_i + kappa'_i dR_{tau(i)}(u) K_i K_{tau(i)}^{-1}`.
    """

    datum = g.datum
    letter = NCElem.letter(datum, i)
    correction_torus = NCElem.torus(datum, TorusMonomial.generator(datum, i))
    result = NCElem.zero(datum)
    for (word, torus), coeff in g.terms.items():
        u = NCElem.word(datum, word)
        star = u * letter
        lowered = partial_R(datum.tau(i), u)
        if not lowered.is_zero:
            star = star + (lowered * correction_torus).scale(right_star_coefficient(datum, i))
        shift = vpow(-2 * datum.pairing(torus.exps, {i: 1}))
        result = result + (star * NCElem.torus(datum, torus)).scale(coeff * shift)
    return result


@lru_cache(maxsize=None)
def _word_star(word: Word, g: NCElem) -> NCElem:
    if not word:
        return g
    datum = g.datum
    head, rest = word[0], word[1:]
    result = left_star_letter(head, _word_star(rest, g))
    lowered = partial_L(datum.tau(head), NCElem.word(datum, rest))
    if lowered.is_zero:
        return result
    torus = NCElem.torus(datum, TorusMonomial.generator(datum, datum.tau(head)))
    return result - (torus * star_mul(lowered, g)).scale(star_coefficient(datum, head))


def star_mul(e1: NCElem, e2: NCElem) -> NCElem:
    """`e1 ⊛ e2` in normal form."""

    if e1.datum != e2.datum:
        raise ParameterError('elements over different Cartan data')
    result = NCElem.zero(e1.datum)
    for (word, torus), coeff in e1.terms.items():
        right = e2 if torus.is_identity else NCElem.torus(e1.datum, torus) * e2
        result = result + _word_star(word, right).scale(coeff)
    return result


def star_power(e: NCElem, n: int) -> NCElem:
    """Left-nested `e ⊛ ... ⊛ e`, `n` factors; `1` for `n = 0`."""

    result = NCElem.one(e.datum)
    for _ in range(n):
        result = star_mul(result, e)
    return result


@lru_cache(maxsize=None)
def star_word(datum: CartanDatum, word: Word) -> NCElem:
    """The star monomial `F_{i1} ⊛ ... ⊛ F_{ik}` in normal form."""

    if not word:
        return NCElem.one(datum)
    return left_star_letter(word[0], star_word(datum, word[1:]))


def curve_action(w: XYPoly, u1: NCElem, u2: NCElem, u3: NCElem) -> NCElem:
    """`u3 ↷ w(u1 ⊛, u2) = sum_{r,s} b_rs u1^{⊛r} ⊛ u3 ⊛ u2^{⊛s}`."""

    datum = u3.datum
    left_powers: dict[int, NCElem] = {}
    right_powers: dict[int, NCElem] = {}
    result = NCElem.zero(datum)
    for (r, s), coeff in w.terms.items():
        if r not in left_powers:
            left_powers[r] = star_power(u1, r)
        if s not in right_powers:
            right_powers[s] = star_power(u2, s)
        term = star_mul(star_mul(left_powers[r], u3), right_powers[s])
        result = result + term.scale(coeff)
    return result


def to_star_basis(e: NCElem) -> NCElem:
    """Rewrites `e` as `sum coeff * (F_{i1} ⊛ ... ⊛ F_{ik}) K_lambda`.

    The returned element lists the star monomials by their words. The rewrite
    is triangular in word length: a star monomial is its word plus shorter terms.
    """

    datum = e.datum
    remaining = e
    found: dict = {}
    while not remaining.is_zero:
        top = remaining.max_length
        leading = [(key, coeff) for key, coeff in remaining.terms.items() if len(key[0]) == top]
        for (word, torus), coeff in leading:
            found[(word, torus)] = found[(word, torus)] + coeff if (word, torus) in found else coeff
            expansion = star_word(datum, word) * NCElem.torus(datum, torus)
            remaining = remaining - expansion.scale(coeff)
    return NCElem(datum, found)


def from_star_basis(e: NCElem) -> NCElem:
    """Inverse of `to_star_basis`."""

    result = NCElem.zero(e.datum)
    for (word, torus), coeff in e.terms.items():
        result = result + (star_word(e.datum, word) * NCElem.torus(e.datum, torus)).scale(coeff)
    return result


def star_mul_right_check(e1: NCElem, e2: NCElem) -> bool:
    """Compares `star_mul(e1, F_i)` with the right-hand rule.

    Raises:
        `ParameterError`: If `e2` is not a single letter `F_i`.
    """

    if len(e2.terms) != 1:
        raise ParameterError('the right factor must be a single letter F_i')
    ((word, torus), coeff), = e2.terms.items()
    if len(word) != 1 or not torus.is_identity or coeff != 1:
        raise ParameterError('the right factor must be a single letter F_i')
    return star_mul(e1, e2) == right_star_letter(e1, word[0])


def associativity_check(a: NCElem, b: NCElem, c: NCElem) -> bool:
    return star_mul(star_mul(a, b), c) == star_mul(a, star_mul(b, c))


def partials_commute_check(datum: CartanDatum, word: Word, i: str, j: str) -> bool:
    """`dL_i dR_j = dR_j dL_i` on a word."""

    e = NCElem.word(datum, word)
    return partial_L(i, partial_R(j, e)) == partial_R(j, partial_L(i, e))


def grading_check(e1: NCElem, e2: NCElem) -> bool:
    """Every term of `e1 ⊛ e2` has degree `deg e1 + deg e2` minus a sum of `alpha_i + alpha_tau(i)`.

    `e1` and `e2` must be homogeneous.
    """

    datum = e1.datum
    total: dict[str, int] = {}
    for e in (e1, e2):
        degrees = {tuple(sorted(word_degree(w).items())) for w, _ in e.terms}
        if len(degrees) > 1:
            raise ParameterError('grading_check needs homogeneous elements')
        for i, mult in (dict(degrees.pop()) if degrees else {}).items():
            total[i] = total.get(i, 0) + mult
    for word, _ in star_mul(e1, e2).terms:
        degree = word_degree(word)
        gap = {i: total.get(i, 0) - degree.get(i, 0) for i in datum.indices}
        for i in datum.indices:
            partner = datum.tau(i)
            if gap[i] < 0:
                return False
            if partner == i and gap[i] % 2:
                return False
            if partner != i and gap[i] != gap[partner]:
                return False
    return True


def tau_swap_power_check(datum: CartanDatum, i: str, n: int) -> bool:
    """`F_i^{⊛n} = F_i^n` when `tau(i) != i`."""

    if datum.tau(i) == i:
        raise ParameterError(f'tau fixes {i}')
    return star_power(NCElem.letter(datum, i), n) == NCElem.word(datum, (i,) * n)
