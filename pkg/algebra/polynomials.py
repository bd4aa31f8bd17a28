"""Commutative carriers: `XPoly` in `x`, `XYPoly` in `x, y` and `SymLaurent` in `z`.

Coefficients are `ParamScalar`. `x` and `z` are tied by `x = (z + z^{-1}) / 2`.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Iterable, Mapping

from .errors import AsymmetricLaurentError, NonExactDivisionError
from .scalars import ParamScalar


def _render(parts: Iterable[tuple[str, ParamScalar]], latex: bool = False) -> str:
    out = []
    for mono, coeff in parts:
        text = coeff.to_latex() if latex else str(coeff)
        compound = ' ' in text
        if not mono:
            negative = text.startswith('-') and not compound
            body = text[1:] if negative else text
            if compound:
                body = f'\\left({text}\\right)' if latex else f'({text})'
        elif text == '1':
            negative, body = False, mono
        elif text == '-1':
            negative, body = True, mono
        elif compound:
            negative = False
            body = f'\\left({text}\\right) {mono}' if latex else f'({text})*{mono}'
        else:
            negative = text.startswith('-')
            text = text[1:] if negative else text
            body = f'{text} {mono}' if latex else f'{text}*{mono}'
        out.append((negative, body))
    if not out:
        return '0'
    first_negative, first = out[0]
    rendered = f'-{first}' if first_negative else first
    for negative, body in out[1:]:
        rendered += f' - {body}' if negative else f' + {body}'
    return rendered


def _power(var: str, exp: int, latex: bool) -> str:
    if exp == 0:
        return ''
    if exp == 1:
        return var
    return f'{var}^{{{exp}}}' if latex else f'{var}^{exp}'


class _ScalarPoly:
    """Shared arithmetic of the commutative carriers. Keys are exponents."""

    __slots__ = ('terms', '_hash')

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        for key, coeff in (terms or {}).items():
            coeff = ParamScalar.coerce(coeff)
            if not coeff.is_zero:
                clean[key] = coeff
        self.terms = clean
        self._hash = None

    @staticmethod
    def _mul_keys(a, b):
        raise NotImplementedError

    @staticmethod
    def _zero_key():
        raise NotImplementedError

    @classmethod
    def constant(cls, value):
        return cls({cls._zero_key(): value})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, key) -> ParamScalar:
        return self.terms.get(key, ParamScalar())

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, _ScalarPoly):
            raise TypeError(f'cannot combine {type(self).__name__} with {type(other).__name__}')
        return type(self).constant(ParamScalar.coerce(other))

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms[key] + coeff if key in terms else coeff
        return type(self)(terms)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({key: -coeff for key, coeff in self.terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, _ScalarPoly):
            try:
                scalar = ParamScalar.coerce(other)
            except TypeError:
                return NotImplemented
            return type(self)({key: coeff * scalar for key, coeff in self.terms.items()})
        if not isinstance(other, type(self)):
            return NotImplemented
        terms: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = self._mul_keys(k1, k2)
                product = c1 * c2
                terms[key] = terms[key] + product if key in terms else product
        return type(self)(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = type(self).constant(1)
        for _ in range(n):
            result = result * self
        return result

    def map_coefficients(self, fn: Callable[[ParamScalar], ParamScalar]):
        return type(self)({key: fn(coeff) for key, coeff in self.terms.items()})

    def substitute(self, name: str, value):
        return self.map_coefficients(lambda coeff: coeff.substitute(name, value))

    def __eq__(self, other) -> bool:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, tuple(sorted(self.terms.items(), key=lambda kv: kv[0]))))
        return self._hash

    def __repr__(self) -> str:
        return f'{type(self).__name__}({self})'


class XPoly(_ScalarPoly):
    """A polynomial in `x`; keys are exponents."""

    __slots__ = ()

    @staticmethod
    def _mul_keys(a: int, b: int) -> int:
        return a + b

    @staticmethod
    def _zero_key() -> int:
        return 0

    @classmethod
    def x(cls) -> XPoly:
        return cls({1: 1})

    @classmethod
    def monomial(cls, exp: int, coeff=1) -> XPoly:
        return cls({exp: coeff})

    @property
    def degree(self) -> int:
        return max(self.terms) if self.terms else -1

    def leading_coefficient(self) -> ParamScalar:
        return self.coefficient(self.degree)

    def has_parity(self, parity: int) -> bool:
        return all(exp % 2 == parity % 2 for exp in self.terms)

    def sorted_terms(self) -> list[tuple[int, ParamScalar]]:
        return sorted(self.terms.items(), reverse=True)

    def to_text(self, var: str = 'x') -> str:
        return _render((_power(var, e, False), c) for e, c in self.sorted_terms())

    def to_latex(self, var: str = 'x') -> str:
        return _render(((_power(var, e, True), c) for e, c in self.sorted_terms()), latex=True)

    def to_json(self, var: str = 'x') -> dict:
        return {'var': var, 'terms': [[e, c.to_json()] for e, c in self.sorted_terms()]}

    def __str__(self) -> str:
        return self.to_text()


class XYPoly(_ScalarPoly):
    """A polynomial in `x` and `y`; keys are `(ex, ey)`."""

    __slots__ = ()

    @staticmethod
    def _mul_keys(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
        return a[0] + b[0], a[1] + b[1]

    @staticmethod
    def _zero_key() -> tuple[int, int]:
        return 0, 0

    @classmethod
    def x(cls) -> XYPoly:
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> XYPoly:
        return cls({(0, 1): 1})

    @classmethod
    def monomial(cls, ex: int, ey: int, coeff=1) -> XYPoly:
        return cls({(ex, ey): coeff})

    @classmethod
    def from_xpoly(cls, p: XPoly, axis: str = 'x') -> XYPoly:
        """Embeds a polynomial in one variable as a polynomial in `x` or in `y`."""

        if axis == 'x':
            return cls({(e, 0): c for e, c in p.terms.items()})
        return cls({(0, e): c for e, c in p.terms.items()})

    @classmethod
    def product(cls, px: XPoly, py: XPoly) -> XYPoly:
        """`px(x) * py(y)`."""

        return cls.from_xpoly(px, 'x') * cls.from_xpoly(py, 'y')

    @property
    def degree(self) -> int:
        return max(ex + ey for ex, ey in self.terms) if self.terms else -1

    def swap(self) -> XYPoly:
        """Exchanges `x` and `y`."""

        return XYPoly({(ey, ex): c for (ex, ey), c in self.terms.items()})

    def slices(self, axis: str = 'x') -> dict[int, XPoly]:
        """Splits into polynomials in `axis`, keyed by the exponent of the other variable."""

        groups: dict[int, dict[int, ParamScalar]] = {}
        for (ex, ey), c in self.terms.items():
            var_exp, other_exp = (ex, ey) if axis == 'x' else (ey, ex)
            groups.setdefault(other_exp, {})[var_exp] = c
        return {other: XPoly(terms) for other, terms in groups.items()}

    @classmethod
    def from_slices(cls, slices: Mapping[int, XPoly], axis: str = 'x') -> XYPoly:
        terms = {}
        for other_exp, p in slices.items():
            for var_exp, c in p.terms.items():
                terms[(var_exp, other_exp) if axis == 'x' else (other_exp, var_exp)] = c
        return cls(terms)

    def sorted_terms(self) -> list[tuple[tuple[int, int], ParamScalar]]:
        return sorted(self.terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0]))

    def _mono(self, key: tuple[int, int], latex: bool) -> str:
        parts = [_power('x', key[0], latex), _power('y', key[1], latex)]
        return (' ' if latex else '*').join(p for p in parts if p)

    def to_text(self) -> str:
        return _render((self._mono(k, False), c) for k, c in self.sorted_terms())

    def to_latex(self) -> str:
        return _render(((self._mono(k, True), c) for k, c in self.sorted_terms()), latex=True)

    def to_json(self) -> dict:
        return {'vars': ['x', 'y'], 'terms': [[list(k), c.to_json()] for k, c in self.sorted_terms()]}

    def __str__(self) -> str:
        return self.to_text()


class SymLaurent(_ScalarPoly):
    """A Laurent polynomial in `z`; keys are exponents, possibly negative."""

    __slots__ = ()

    @staticmethod
    def _mul_keys(a: int, b: int) -> int:
        return a + b

    @staticmethod
    def _zero_key() -> int:
        return 0

    @classmethod
    def monomial(cls, exp: int, coeff=1) -> SymLaurent:
        return cls({exp: coeff})

    @property
    def is_symmetric(self) -> bool:
        return all(self.coefficient(-e) == c for e, c in self.terms.items())

    def dilate(self, scale: Callable[[int], ParamScalar]) -> SymLaurent:
        """Multiplies the coefficient of `z^e` by `scale(e)`."""

        return SymLaurent({e: c * scale(e) for e, c in self.terms.items()})

    def divide_by_z_minus_zinv(self) -> SymLaurent:
        """Exact division by `z - z^{-1}`.

        Raises:
            `NonExactDivisionError`: If `z - z^{-1}` does not divide the polynomial.
        """

        if self.is_zero:
            return SymLaurent()
        top = max(self.terms)
        low = min(self.terms)
        # h[k-1] = b[k] + h[k+1], from the top exponent down
        quotient: dict[int, ParamScalar] = {}
        for k in range(top, low + 1, -1):
            quotient[k - 1] = self.coefficient(k) + quotient.get(k + 1, ParamScalar())
        result = SymLaurent(quotient)
        if result * SymLaurent({1: 1, -1: -1}) != self:
            raise NonExactDivisionError('z - 1/z does not divide the Laurent polynomial')
        return result

    def __str__(self) -> str:
        return _render((_power('z', e, False) if e >= 0 else f'z^{e}', c) for e, c in sorted(self.terms.items(), reverse=True))


@lru_cache(maxsize=None)
def _chebyshev(k: int) -> tuple[tuple[int, int], ...]:
    """Integer coefficients of `T_k(x)`, as `(exponent, coefficient)` pairs."""

    prev, cur = {0: 1}, {1: 1}
    if k == 0:
        return tuple(prev.items())
    for _ in range(k - 1):
        nxt = {e + 1: 2 * c for e, c in cur.items()}
        for e, c in prev.items():
            nxt[e] = nxt.get(e, 0) - c
        prev, cur = cur, {e: c for e, c in nxt.items() if c}
    return tuple(sorted(cur.items()))


def x_to_z(p: XPoly) -> SymLaurent:
    """Rewrites `p(x)` in `z` through `x = (z + z^{-1}) / 2`."""

    terms: dict[int, ParamScalar] = {}
    for exp, coeff in p.terms.items():
        for j in range(exp + 1):
            key = exp - 2 * j
            term = coeff * Fraction(comb(exp, j), 2 ** exp)
            terms[key] = terms[key] + term if key in terms else term
    return SymLaurent(terms)


def z_to_x(s: SymLaurent) -> XPoly:
    """Rewrites a symmetric Laurent polynomial in `x`, using `z^k + z^{-k} = 2 T_k(x)`.

    Raises:
        `AsymmetricLaurentError`: If `s` is not invariant under `z -> 1/z`.
    """

    if not s.is_symmetric:
        raise AsymmetricLaurentError(f'{s} is not symmetric under z -> 1/z')
    terms: dict[int, ParamScalar] = {}
    for exp, coeff in s.terms.items():
        if exp < 0:
            continue
        if exp == 0:
            terms[0] = terms[0] + coeff if 0 in terms else coeff
            continue
        for x_exp, t_coeff in _chebyshev(exp):
            term = coeff * (2 * t_coeff)
            terms[x_exp] = terms[x_exp] + term if x_exp in terms else term
    return XPoly(terms)
