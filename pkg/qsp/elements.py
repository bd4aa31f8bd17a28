"""Elements of `H_theta ⋉ T(V^-)`: sums of `coeff * F_{i1} ... F_{ik} * K_lambda`.

The normal form keeps torus factors to the right of words. Moving
`K_lambda` right past `F_k` produces `q^{-(lambda, alpha_k)}`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from algebra.errors import ParameterError
from algebra.scalars import LaurentV, ParamScalar, vpow

from .cartan import CartanDatum

Word = tuple[str, ...]


@dataclass(frozen=True)
class TorusMonomial:
    """`prod_i K_i^{exps[i]}`, exponents ordered as the datum's indices."""

    exps: tuple[int, ...]

    @classmethod
    def identity(cls, datum: CartanDatum) -> TorusMonomial:
        return cls((0,) * len(datum.indices))

    @classmethod
    def from_exponents(cls, datum: CartanDatum, exps: Mapping[str, int]) -> TorusMonomial:
        return cls(tuple(exps.get(i, 0) for i in datum.indices))

    @classmethod
    def generator(cls, datum: CartanDatum, i: str) -> TorusMonomial:
        """`L_i = K_i K_{tau(i)}^{-1}`."""

        return cls.from_exponents(datum, {i: 1}) * cls.from_exponents(datum, {datum.tau(i): -1})

    @property
    def is_identity(self) -> bool:
        return not any(self.exps)

    def __mul__(self, other: TorusMonomial) -> TorusMonomial:
        return TorusMonomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def inverse(self) -> TorusMonomial:
        return TorusMonomial(tuple(-a for a in self.exps))

    def as_dict(self, datum: CartanDatum) -> dict[str, int]:
        return {i: e for i, e in zip(datum.indices, self.exps) if e}

    def render(self, datum: CartanDatum) -> str:
        return '*'.join(f'K_{i}' if e == 1 else f'K_{i}^{e}' for i, e in self.as_dict(datum).items())


def word_degree(word: Iterable[str]) -> dict[str, int]:
    """The root-lattice degree `sum_k alpha_{i_k}`."""

    degree: dict[str, int] = {}
    for letter in word:
        degree[letter] = degree.get(letter, 0) + 1
    return degree


def commute_torus_past_word(datum: CartanDatum, t: TorusMonomial, word: Word) -> tuple[LaurentV, Word, TorusMonomial]:
    """Rewrites `t * word` as `scalar * word * t`.

    Returns:
        `tuple[LaurentV, Word, TorusMonomial]`: `(q^{-(lambda, deg word)}, word, t)`.
    """

    if t.is_identity or not word:
        return LaurentV.constant(1), word, t
    return vpow(-2 * datum.pairing(t.exps, word_degree(word))), word, t


Key = tuple[Word, TorusMonomial]


class NCElem:
    """A finite sum of `coeff * word * torus` with `ParamScalar` coefficients."""

    __slots__ = ('datum', 'terms', '_hash')

    def __init__(self, datum: CartanDatum, terms: Mapping[Key, ParamScalar] | None = None):
        self.datum = datum
        self.terms: dict[Key, ParamScalar] = {
            key: coeff for key, coeff in (terms or {}).items() if not coeff.is_zero
        }
        self._hash = None

    @classmethod
    def zero(cls, datum: CartanDatum) -> NCElem:
        return cls(datum)

    @classmethod
    def one(cls, datum: CartanDatum) -> NCElem:
        return cls.word(datum, ())

    @classmethod
    def word(cls, datum: CartanDatum, letters: Iterable[str], coeff=1) -> NCElem:
        letters = tuple(letters)
        unknown = set(letters) - set(datum.indices)
        if unknown:
            raise ParameterError(f'letters {sorted(unknown)} are not indices of the datum')
        return cls(datum, {(letters, TorusMonomial.identity(datum)): ParamScalar.coerce(coeff)})

    @classmethod
    def letter(cls, datum: CartanDatum, i: str) -> NCElem:
        return cls.word(datum, (i,))

    @classmethod
    def torus(cls, datum: CartanDatum, t: TorusMonomial, coeff=1) -> NCElem:
        return cls(datum, {((), t): ParamScalar.coerce(coeff)})

    @classmethod
    def scalar(cls, datum: CartanDatum, value) -> NCElem:
        return cls.word(datum, (), value)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: NCElem) -> None:
        if other.datum != self.datum:
            raise ParameterError('elements over different Cartan data')

    def __add__(self, other: NCElem) -> NCElem:
        if not isinstance(other, NCElem):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms[key] + coeff if key in terms else coeff
        return NCElem(self.datum, terms)

    def __neg__(self) -> NCElem:
        return NCElem(self.datum, {key: -coeff for key, coeff in self.terms.items()})

    def __sub__(self, other: NCElem) -> NCElem:
        if not isinstance(other, NCElem):
            return NotImplemented
        return self + (-other)

    def scale(self, value) -> NCElem:
        value = ParamScalar.coerce(value)
        return NCElem(self.datum, {key: coeff * value for key, coeff in self.terms.items()})

    def __mul__(self, other) -> NCElem:
        """Concatenation product, torus factors moved to the right."""

        if not isinstance(other, NCElem):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        self._check(other)
        terms: dict[Key, ParamScalar] = {}
        for (w1, t1), c1 in self.terms.items():
            for (w2, t2), c2 in other.terms.items():
                shift, _, _ = commute_torus_past_word(self.datum, t1, w2)
                key = (w1 + w2, t1 * t2)
                product = c1 * c2 * shift
                terms[key] = terms[key] + product if key in terms else product
        return NCElem(self.datum, terms)

    def __rmul__(self, other) -> NCElem:
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def map_coefficients(self, fn) -> NCElem:
        return NCElem(self.datum, {key: fn(coeff) for key, coeff in self.terms.items()})

    def substitute(self, name: str, value) -> NCElem:
        return self.map_coefficients(lambda coeff: coeff.substitute(name, value))

    def coefficient(self, word: Iterable[str], torus: TorusMonomial | None = None) -> ParamScalar:
        torus = torus or TorusMonomial.identity(self.datum)
        return self.terms.get((tuple(word), torus), ParamScalar())

    @property
    def max_length(self) -> int:
        return max((len(w) for w, _ in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[Key, ParamScalar]]:
        return sorted(
            self.terms.items(),
            key=lambda kv: (-len(kv[0][0]), [self.datum.position[i] for i in kv[0][0]], kv[0][1].exps),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, NCElem):
            return NotImplemented
        return self.datum == other.datum and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(('NCElem', self.datum, tuple((k, c) for k, c in self.sorted_terms())))
        return self._hash

    def to_text(self, letter: str = 'F') -> str:
        if not self.terms:
            return '0'
        parts = []
        for (word, torus), coeff in self.sorted_terms():
            factors = [f'{letter}_{i}' for i in word]
            if not torus.is_identity:
                factors.append(torus.render(self.datum))
            mono = ' '.join(factors)
            text = str(coeff)
            if not mono:
                parts.append(f'({text})' if ' ' in text else text)
            elif text == '1':
                parts.append(mono)
            elif text == '-1':
                parts.append(f'-{mono}')
            else:
                parts.append(f'({text})*{mono}' if ' ' in text else f'{text}*{mono}')
        return ' + '.join(parts).replace('+ -', '- ')

    def to_json(self) -> list[dict]:
        return [
            {'coeff': coeff.to_json(), 'torus': torus.as_dict(self.datum), 'word': list(word)}
            for (word, torus), coeff in self.sorted_terms()
        ]

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f'NCElem({self})'
