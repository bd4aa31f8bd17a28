from __future__ import annotations

import logging
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import yaml

from algebra.errors import CartanDatumError
from algebra.scalars import ParamScalar

from .schemas import CartanDatumConfig

logger = logging.getLogger(__name__)


def cartan_violations(
        indices: Sequence[str],
        a: Sequence[Sequence[int]],
        d: Sequence[int],
        tau: Mapping[str, str],
) -> list[str]:
    """Returns every violated invariant of a Cartan datum, in a fixed order.

    Args:
        `indices` (Sequence[str]): The index set `I`.
        `a` (Sequence[Sequence[int]]): Generalized Cartan matrix, rows and columns ordered as `indices`.
        `d` (Sequence[int]): Symmetrizers.
        `tau` (Mapping[str, str]): The diagram involution.

    Returns:
        `list[str]`: Messages naming the invariant and the offending entries; empty if the datum is valid.
    """

    violations = []
    size = len(indices)
    if len(set(indices)) != size:
        violations.append('I has repeated indices')
    if len(a) != size or any(len(row) != size for row in a):
        violations.append(f'a must be a {size}x{size} matrix')
        return violations
    if len(d) != size:
        violations.append(f'd must have {size} entries')
        return violations
    for k, i in enumerate(indices):
        if d[k] <= 0:
            violations.append(f'd_i > 0 fails at i={i}')
        if a[k][k] != 2:
            violations.append(f'a_ii = 2 fails at i={i}')
    for k, i in enumerate(indices):
        for l, j in enumerate(indices):
            if k == l:
                continue
            if a[k][l] > 0:
                violations.append(f'a_ij <= 0 fails at (i, j)=({i}, {j})')
            if (a[k][l] == 0) != (a[l][k] == 0):
                violations.append(f'a_ij = 0 iff a_ji = 0 fails at (i, j)=({i}, {j})')
            if k < l and d[k] * a[k][l] != d[l] * a[l][k]:
                violations.append(f'd_i a_ij = d_j a_ji fails at (i, j)=({i}, {j})')
    unknown = sorted((set(tau) | set(tau.values())) - set(indices))
    if unknown:
        violations.append(f'tau maps outside I: {unknown}')
        return violations
    position = {i: k for k, i in enumerate(indices)}
    for i in indices:
        image = tau.get(i, i)
        if tau.get(image, image) != i:
            violations.append(f'tau is an involution fails at i={i}')
    for i in indices:
        ti = tau.get(i, i)
        if d[position[ti]] != d[position[i]]:
            violations.append(f'd_tau(i) = d_i fails at i={i}')
        for j in indices:
            tj = tau.get(j, j)
            if a[position[ti]][position[tj]] != a[position[i]][position[j]]:
                violations.append(f'a_tau(i)tau(j) = a_ij fails at (i, j)=({i}, {j})')
    return violations


class CartanDatum:
    """An index set with a symmetrizable Cartan matrix, a diagram involution and parameter symbols.

    The parameters `c_i` are the symbols `c_<i>`; when `tau(i) != i` and
    `a_{i tau(i)} = 0` the two indices share one symbol, named after the
    index listed first.

    Raises:
        `CartanDatumError`: With every violated invariant, if the datum is invalid.
    """

    def __init__(
            self,
            indices: Iterable[str],
            a: Sequence[Sequence[int]],
            d: Sequence[int],
            tau: Mapping[str, str] | None = None,
    ):
        indices = tuple(str(i) for i in indices)
        tau = {str(k): str(v) for k, v in (tau or {}).items()}
        violations = cartan_violations(indices, a, d, tau)
        if violations:
            raise CartanDatumError(violations)
        self.indices = indices
        self.position = {i: k for k, i in enumerate(indices)}
        self.matrix = tuple(tuple(int(x) for x in row) for row in a)
        self.symmetrizers = tuple(int(x) for x in d)
        self.involution = {i: tau.get(i, i) for i in indices}
        self._symbols = {}
        for i in indices:
            partner = self.involution[i]
            if partner != i and self.a(i, partner) == 0:
                first = min(i, partner, key=self.position.__getitem__)
                self._symbols[i] = f'c_{first}'
            else:
                self._symbols[i] = f'c_{i}'
        self._key = (self.indices, self.matrix, self.symmetrizers, tuple(sorted(self.involution.items())))

    @classmethod
    def from_config(cls, config: CartanDatumConfig) -> CartanDatum:
        return cls(config.I, config.a, config.d, config.tau)

    @classmethod
    def load(cls, path: str | Path) -> CartanDatum:
        """Reads a datum from a JSON or YAML file.

        Raises:
            `CartanDatumError`: If the file does not describe a valid datum.
        """

        text = Path(path).read_text()
        try:
            raw = yaml.safe_load(text)
        except yaml.YAMLError as error:
            raise CartanDatumError([f'{path} is not valid JSON or YAML: {error}'])
        if not isinstance(raw, dict):
            raise CartanDatumError([f'{path} must hold a mapping with keys I, a, d, tau'])
        missing = [key for key in ('I', 'a', 'd') if key not in raw]
        if missing:
            raise CartanDatumError([f'missing key {key}' for key in missing])
        logger.debug('loaded Cartan datum from %s', path)
        return cls(raw['I'], raw['a'], raw['d'], raw.get('tau'))

    @classmethod
    def rank_two(cls, a_ij: int, tau: str = 'fixed') -> CartanDatum:
        """A rank-two datum on `I = ("1", "2")` with off-diagonal entry `a_12 = a_ij`.

        Args:
            `a_ij` (int): Nonpositive off-diagonal entry.
            `tau` (str, optional): `'fixed'` for `tau = id` (then `a_21 = -1` unless `a_ij = 0`),
                `'swap'` for `tau = (1 2)` (then the matrix is symmetric). Defaults to `'fixed'`.
        """

        if tau == 'swap':
            return cls(('1', '2'), [[2, a_ij], [a_ij, 2]], [1, 1], {'1': '2', '2': '1'})
        if a_ij == 0:
            return cls(('1', '2'), [[2, 0], [0, 2]], [1, 1])
        return cls(('1', '2'), [[2, a_ij], [-1, 2]], [1, -a_ij])

    @classmethod
    def three_index(cls) -> CartanDatum:
        """Type `A_2^{(1)}` with `tau` fixing `1` and exchanging `2` and `3`."""

        return cls(
            ('1', '2', '3'),
            [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]],
            [1, 1, 1],
            {'1': '1', '2': '3', '3': '2'},
        )

    def a(self, i: str, j: str) -> int:
        return self.matrix[self.position[i]][self.position[j]]

    def d(self, i: str) -> int:
        return self.symmetrizers[self.position[i]]

    def tau(self, i: str) -> str:
        return self.involution[i]

    def form(self, i: str, j: str) -> int:
        """`(alpha_i, alpha_j) = d_i a_ij`."""

        return self.d(i) * self.a(i, j)

    def pairing(self, weight: Sequence[int], root: Mapping[str, int]) -> int:
        """`(lambda, beta)` for a torus exponent vector `weight` and a root-lattice vector `root`."""

        return sum(
            exp * self.form(i, j) * mult
            for i, exp in zip(self.indices, weight) if exp
            for j, mult in root.items() if mult
        )

    def c_name(self, i: str) -> str:
        return self._symbols[i]

    def c_symbol(self, i: str) -> ParamScalar:
        return ParamScalar.symbol(self._symbols[i])

    def to_config(self) -> CartanDatumConfig:
        return CartanDatumConfig(
            I=list(self.indices),
            a=[list(row) for row in self.matrix],
            d=list(self.symmetrizers),
            tau=dict(self.involution),
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, CartanDatum) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f'CartanDatum(I={list(self.indices)}, a={[list(r) for r in self.matrix]}, tau={self.involution})'
