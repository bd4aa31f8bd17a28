"""Exact scalars in `v = q^{1/2}` and in the formal parameters `r`, `c`, `c_i`.

The tower is `LaurentV` (Laurent polynomials in `v` over QQ) inside `RatFuncV`
(reduced quotients) inside `ParamScalar` (polynomials in the named parameters
with `RatFuncV` coefficients). All three are immutable and hashable.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Mapping, Union

from sympy.polys import QQ, ring

from .errors import NonExactDivisionError, ParameterError

V_RING, _V = ring('v', QQ)

Rational = Union[int, Fraction]
Monomial = tuple[tuple[str, int], ...]


def _to_qq(value: Rational):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _to_fraction(coeff) -> Fraction:
    return Fraction(int(coeff.numerator), int(coeff.denominator))


def _format_rational(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f'{value.numerator}/{value.denominator}'


def _latex_v_power(exp: int) -> str:
    """`v^exp` written as a power of `q`."""

    if exp == 2:
        return 'q'
    if exp % 2 == 0:
        return f'q^{{{exp // 2}}}'
    return f'q^{{{exp}/2}}'


def _join_signed(parts: list[tuple[bool, str]]) -> str:
    if not parts:
        return '0'
    negative, body = parts[0]
    out = f'-{body}' if negative else body
    for negative, body in parts[1:]:
        out += f' - {body}' if negative else f' + {body}'
    return out


class LaurentV:
    """A Laurent polynomial `v^shift * poly` with `poly` in `QQ[v]`.

    `poly` has a nonzero constant term unless the value is zero, in which case
    `shift` is 0. This makes the representation canonical.
    """

    __slots__ = ('poly', 'shift', '_hash')

    def __init__(self, poly=None, shift: int = 0):
        if poly is None:
            poly = V_RING.zero
        if poly:
            low = min(monom[0] for monom in poly.keys())
            if low:
                poly = V_RING.from_dict({(monom[0] - low,): c for monom, c in poly.items()})
                shift += low
        else:
            shift = 0
        self.poly = poly
        self.shift = shift
        self._hash = None

    @classmethod
    def from_terms(cls, terms: Mapping[int, Rational]) -> LaurentV:
        """Builds a `LaurentV` from an `{exponent: coefficient}` mapping.

        Args:
            `terms` (Mapping[int, Rational]): Exponents of `v` and their rational coefficients.

        Returns:
            `LaurentV`: The canonical Laurent polynomial.
        """

        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls()
        low = min(terms)
        return cls(V_RING.from_dict({(e - low,): _to_qq(c) for e, c in terms.items()}), low)

    @classmethod
    def monomial(cls, exp: int, coeff: Rational = 1) -> LaurentV:
        return cls.from_terms({exp: coeff})

    @classmethod
    def constant(cls, value: Rational) -> LaurentV:
        return cls.from_terms({0: value})

    @classmethod
    def coerce(cls, value) -> LaurentV:
        if isinstance(value, LaurentV):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.constant(value)
        raise TypeError(f'cannot interpret {type(value).__name__} as a Laurent polynomial in v')

    @property
    def is_zero(self) -> bool:
        return not self.poly

    @property
    def is_monomial(self) -> bool:
        return len(self.poly) == 1

    @property
    def min_exp(self) -> int:
        return self.shift

    @property
    def max_exp(self) -> int:
        return self.shift + self.poly.degree() if self.poly else 0

    def terms(self) -> list[tuple[int, Fraction]]:
        """Returns `(exponent, coefficient)` pairs sorted by descending exponent."""

        return sorted(
            ((monom[0] + self.shift, _to_fraction(c)) for monom, c in self.poly.items()),
            reverse=True,
        )

    def coefficient(self, exp: int) -> Fraction:
        c = self.poly.get((exp - self.shift,))
        return _to_fraction(c) if c is not None else Fraction(0)

    def constant_term(self) -> Fraction:
        return self.coefficient(0)

    def _aligned(self, other: LaurentV) -> tuple:
        shift = min(self.shift, other.shift)
        return (
            self.poly.mul_monom((self.shift - shift,)),
            other.poly.mul_monom((other.shift - shift,)),
            shift,
        )

    def __add__(self, other) -> LaurentV:
        try:
            other = LaurentV.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        a, b, shift = self._aligned(other)
        return LaurentV(a + b, shift)

    __radd__ = __add__

    def __neg__(self) -> LaurentV:
        return LaurentV(-self.poly, self.shift)

    def __sub__(self, other) -> LaurentV:
        try:
            other = LaurentV.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentV:
        return LaurentV.coerce(other) - self

    def __mul__(self, other) -> LaurentV:
        if isinstance(other, (int, Fraction)):
            return LaurentV(self.poly * _to_qq(other), self.shift)
        if not isinstance(other, LaurentV):
            return NotImplemented
        return LaurentV(self.poly * other.poly, self.shift + other.shift)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentV:
        if n >= 0:
            return LaurentV(self.poly ** n, self.shift * n)
        if not self.is_monomial:
            raise ParameterError('only a monomial in v has a Laurent inverse')
        ((exp, coeff),) = self.terms()
        return LaurentV.monomial(-exp * (-n), Fraction(1) / coeff ** (-n))

    def dilate(self, k: int) -> LaurentV:
        """Substitutes `v -> v^k`."""

        return LaurentV.from_terms({e * k: c for e, c in self.terms()})

    def bar(self) -> LaurentV:
        """Substitutes `v -> v^{-1}`."""

        return self.dilate(-1)

    def evaluate(self, v: complex) -> complex:
        return sum(float(c) * v ** e for e, c in self.terms())

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentV.constant(other)
        if not isinstance(other, LaurentV):
            return NotImplemented
        return self.shift == other.shift and self.poly == other.poly

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(('LaurentV', tuple(self.terms())))
        return self._hash

    def __repr__(self) -> str:
        return f'LaurentV({self})'

    def __str__(self) -> str:
        parts = []
        for exp, coeff in self.terms():
            mag = abs(coeff)
            if exp == 0:
                body = _format_rational(mag)
            else:
                mono = 'v' if exp == 1 else f'v^{exp}'
                body = mono if mag == 1 else f'{_format_rational(mag)}*{mono}'
            parts.append((coeff < 0, body))
        return _join_signed(parts)

    def to_latex(self) -> str:
        parts = []
        for exp, coeff in self.terms():
            mag = abs(coeff)
            if mag.denominator == 1:
                num = '' if (mag == 1 and exp != 0) else str(mag.numerator)
            else:
                num = f'\\tfrac{{{mag.numerator}}}{{{mag.denominator}}}'
            body = num + ('' if exp == 0 else _latex_v_power(exp))
            parts.append((coeff < 0, body))
        return _join_signed(parts)

    def to_json(self) -> list:
        return [[exp, _format_rational(coeff)] for exp, coeff in self.terms()]


def _poly_scale(poly) -> Fraction:
    """The rational `s` making `s * poly` integral, primitive, with positive leading coefficient."""

    coeffs = [_to_fraction(c) for c in poly.values()]
    denominators = reduce(lcm, (c.denominator for c in coeffs), 1)
    numerators = reduce(gcd, (int(c * denominators) for c in coeffs), 0)
    scale = Fraction(denominators, numerators)
    return -scale if _to_fraction(poly.LC) < 0 else scale


class RatFuncV:
    """A reduced quotient `num / den` of Laurent polynomials in `v`.

    `den` is a polynomial in `v` with nonzero constant term, integer
    coefficients of content 1 and a positive leading coefficient; `num` and `den`
    are coprime. Every value has exactly one such representation.
    """

    __slots__ = ('num', 'den', '_hash')

    def __init__(self, num=None, den=None):
        num = LaurentV() if num is None else LaurentV.coerce(num)
        den = LaurentV.constant(1) if den is None else LaurentV.coerce(den)
        if den.is_zero:
            raise ZeroDivisionError('RatFuncV with zero denominator')
        if num.is_zero:
            self.num, self.den, self._hash = LaurentV(), V_RING.one, None
            return
        shift = num.shift - den.shift
        top, bottom = num.poly, den.poly
        if bottom.degree() > 0:
            _, top, bottom = top.cofactors(bottom)
        scale = _poly_scale(bottom)
        self.num = LaurentV(top * _to_qq(scale), shift)
        self.den = bottom * _to_qq(scale)
        self._hash = None

    @classmethod
    def coerce(cls, value) -> RatFuncV:
        if isinstance(value, RatFuncV):
            return value
        return cls(LaurentV.coerce(value))

    @classmethod
    def monomial(cls, exp: int, coeff: Rational = 1) -> RatFuncV:
        return cls(LaurentV.monomial(exp, coeff))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_laurent(self) -> bool:
        return self.den == V_RING.one

    @property
    def denominator(self) -> LaurentV:
        return LaurentV(self.den)

    def as_laurent(self) -> LaurentV:
        """Returns the value as a `LaurentV`.

        Raises:
            `NonExactDivisionError`: If the denominator is not 1.
        """

        if not self.is_laurent:
            raise NonExactDivisionError(f'{self} is not a Laurent polynomial in v')
        return self.num

    def _with_den(self, num: LaurentV, den) -> RatFuncV:
        out = RatFuncV.__new__(RatFuncV)
        out.num, out.den, out._hash = num, den, None
        return out

    def __add__(self, other) -> RatFuncV:
        try:
            other = RatFuncV.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        if self.is_laurent and other.is_laurent:
            total = self.num + other.num
            return self._with_den(total, V_RING.one) if not total.is_zero else RatFuncV()
        if self.den == other.den:
            return RatFuncV(self.num + other.num, LaurentV(self.den))
        return RatFuncV(
            self.num * LaurentV(other.den) + other.num * LaurentV(self.den),
            LaurentV(self.den * other.den),
        )

    __radd__ = __add__

    def __neg__(self) -> RatFuncV:
        return self._with_den(-self.num, self.den)

    def __sub__(self, other) -> RatFuncV:
        try:
            other = RatFuncV.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> RatFuncV:
        return RatFuncV.coerce(other) - self

    def __mul__(self, other) -> RatFuncV:
        try:
            other = RatFuncV.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RatFuncV()
        if self.is_laurent and other.is_laurent:
            return self._with_den(self.num * other.num, V_RING.one)
        return RatFuncV(self.num * other.num, LaurentV(self.den * other.den))

    __rmul__ = __mul__

    def inverse(self) -> RatFuncV:
        if self.is_zero:
            raise ZeroDivisionError('inverse of zero')
        return RatFuncV(LaurentV(self.den), self.num)

    def __truediv__(self, other) -> RatFuncV:
        try:
            other = RatFuncV.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> RatFuncV:
        return RatFuncV.coerce(other) / self

    def __pow__(self, n: int) -> RatFuncV:
        if n < 0:
            return self.inverse() ** (-n)
        return RatFuncV(self.num ** n, LaurentV(self.den ** n))

    def bar(self) -> RatFuncV:
        return RatFuncV(self.num.bar(), LaurentV(self.den).bar())

    def dilate(self, k: int) -> RatFuncV:
        return RatFuncV(self.num.dilate(k), LaurentV(self.den).dilate(k))

    def evaluate(self, v: complex) -> complex:
        return self.num.evaluate(v) / LaurentV(self.den).evaluate(v)

    def __eq__(self, other) -> bool:
        try:
            other = RatFuncV.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(('RatFuncV', self.num, tuple(LaurentV(self.den).terms())))
        return self._hash

    def __repr__(self) -> str:
        return f'RatFuncV({self})'

    def __str__(self) -> str:
        if self.is_laurent:
            return str(self.num)
        return f'({self.num})/({LaurentV(self.den)})'

    def to_latex(self) -> str:
        if self.is_laurent:
            return self.num.to_latex()
        return f'\\frac{{{self.num.to_latex()}}}{{{LaurentV(self.den).to_latex()}}}'

    def to_json(self) -> dict:
        return {'num': self.num.to_json(), 'den': LaurentV(self.den).to_json()}


def _normal_monomial(powers: Mapping[str, int]) -> Monomial:
    return tuple(sorted((name, exp) for name, exp in powers.items() if exp))


def _mul_monomials(a: Monomial, b: Monomial) -> Monomial:
    powers = dict(a)
    for name, exp in b:
        powers[name] = powers.get(name, 0) + exp
    return _normal_monomial(powers)


def _format_monomial(monomial: Monomial) -> str:
    return '*'.join(name if exp == 1 else f'{name}^{exp}' for name, exp in monomial)


def _latex_symbol(name: str) -> str:
    if '_' in name:
        head, tail = name.split('_', 1)
        return f'{head}_{{{tail}}}'
    return name


class ParamScalar:
    """A polynomial in the named parameters with `RatFuncV` coefficients.

    Parameters are `r`, `c` and the per-index `c_i`; they are commuting and
    appear only with nonnegative exponents.
    """

    __slots__ = ('terms', '_hash')

    def __init__(self, terms: Mapping[Monomial, RatFuncV] | None = None):
        self.terms: dict[Monomial, RatFuncV] = {
            monomial: coeff for monomial, coeff in (terms or {}).items() if not coeff.is_zero
        }
        self._hash = None

    @classmethod
    def symbol(cls, name: str, exp: int = 1) -> ParamScalar:
        return cls({((name, exp),): RatFuncV.coerce(1)})

    @classmethod
    def constant(cls, value) -> ParamScalar:
        return cls({(): RatFuncV.coerce(value)})

    @classmethod
    def coerce(cls, value) -> ParamScalar:
        if isinstance(value, ParamScalar):
            return value
        return cls.constant(value)

    @classmethod
    def zero(cls) -> ParamScalar:
        return cls()

    @classmethod
    def one(cls) -> ParamScalar:
        return cls.constant(1)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(not monomial for monomial in self.terms)

    @property
    def symbols(self) -> set[str]:
        return {name for monomial in self.terms for name, _ in monomial}

    def coefficient(self, monomial: Monomial | Mapping[str, int] = ()) -> RatFuncV:
        if isinstance(monomial, Mapping):
            monomial = _normal_monomial(monomial)
        return self.terms.get(monomial, RatFuncV())

    def as_ratfunc(self) -> RatFuncV:
        """Returns the value as a `RatFuncV`.

        Raises:
            `ParameterError`: If a parameter occurs.
        """

        if not self.is_constant:
            raise ParameterError(f'{self} depends on {sorted(self.symbols)}')
        return self.coefficient(())

    def __add__(self, other) -> ParamScalar:
        try:
            other = ParamScalar.coerce(other)
        except TypeError:
            return NotImplemented
        terms = dict(self.terms)
        for monomial, coeff in other.terms.items():
            terms[monomial] = terms[monomial] + coeff if monomial in terms else coeff
        return ParamScalar(terms)

    __radd__ = __add__

    def __neg__(self) -> ParamScalar:
        return ParamScalar({monomial: -coeff for monomial, coeff in self.terms.items()})

    def __sub__(self, other) -> ParamScalar:
        try:
            other = ParamScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> ParamScalar:
        return ParamScalar.coerce(other) - self

    def __mul__(self, other) -> ParamScalar:
        try:
            other = ParamScalar.coerce(other)
        except TypeError:
            return NotImplemented
        terms: dict[Monomial, RatFuncV] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                monomial = _mul_monomials(m1, m2)
                product = c1 * c2
                terms[monomial] = terms[monomial] + product if monomial in terms else product
        return ParamScalar(terms)

    __rmul__ = __mul__

    def __truediv__(self, other) -> ParamScalar:
        """Divides by a parameter-free scalar.

        Raises:
            `ParameterError`: If `other` depends on a parameter.
        """

        divisor = ParamScalar.coerce(other).as_ratfunc()
        return ParamScalar({monomial: coeff / divisor for monomial, coeff in self.terms.items()})

    def __pow__(self, n: int) -> ParamScalar:
        if n < 0:
            return ParamScalar.one() / self ** (-n)
        result = ParamScalar.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def map_coefficients(self, fn) -> ParamScalar:
        return ParamScalar({monomial: fn(coeff) for monomial, coeff in self.terms.items()})

    def bar(self) -> ParamScalar:
        return self.map_coefficients(RatFuncV.bar)

    def substitute(self, name: str, value) -> ParamScalar:
        """Replaces the parameter `name` by `value` everywhere.

        Args:
            `name` (str): Parameter to eliminate.
            `value` (ParamScalar | RatFuncV | LaurentV | int | Fraction): Its replacement.

        Returns:
            `ParamScalar`: The substituted scalar.
        """

        value = ParamScalar.coerce(value)
        result = ParamScalar()
        for monomial, coeff in self.terms.items():
            powers = dict(monomial)
            exp = powers.pop(name, 0)
            rest = ParamScalar({_normal_monomial(powers): coeff})
            result = result + (rest * value ** exp if exp else rest)
        return result

    def evaluate(self, v: complex, values: Mapping[str, complex] | None = None) -> complex:
        values = values or {}
        total = 0
        for monomial, coeff in self.terms.items():
            term = coeff.evaluate(v)
            for name, exp in monomial:
                if name not in values:
                    raise ParameterError(f'no numeric value given for parameter {name}')
                term *= values[name] ** exp
            total += term
        return total

    def sorted_terms(self) -> list[tuple[Monomial, RatFuncV]]:
        return sorted(self.terms.items(), key=lambda item: item[0])

    def __eq__(self, other) -> bool:
        try:
            other = ParamScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(('ParamScalar', tuple(self.sorted_terms())))
        return self._hash

    def __repr__(self) -> str:
        return f'ParamScalar({self})'

    def __str__(self) -> str:
        parts = []
        for monomial, coeff in self.sorted_terms():
            mono = _format_monomial(monomial)
            text = str(coeff)
            if not mono:
                parts.append((False, f'({text})' if ' ' in text and len(self.terms) > 1 else text))
            elif text == '1':
                parts.append((False, mono))
            elif text == '-1':
                parts.append((True, mono))
            elif ' ' in text or '/' in text:
                parts.append((False, f'({text})*{mono}'))
            else:
                parts.append((text.startswith('-'), f'{text.lstrip("-")}*{mono}'))
        return _join_signed(parts)

    def to_latex(self) -> str:
        parts = []
        for monomial, coeff in self.sorted_terms():
            mono = ' '.join(
                _latex_symbol(name) if exp == 1 else f'{_latex_symbol(name)}^{{{exp}}}' for name, exp in monomial
            )
            text = coeff.to_latex()
            if not mono:
                parts.append((False, f'\\left({text}\\right)' if ' ' in text and len(self.terms) > 1 else text))
            elif text == '1':
                parts.append((False, mono))
            elif text == '-1':
                parts.append((True, mono))
            else:
                parts.append((False, f'\\left({text}\\right) {mono}' if ' ' in text else f'{text} {mono}'))
        return _join_signed(parts)

    def to_json(self) -> list:
        return [[dict(monomial), coeff.to_json()] for monomial, coeff in self.sorted_terms()]


def vpow(k: int) -> LaurentV:
    """`v^k`."""

    return LaurentV.monomial(k)
