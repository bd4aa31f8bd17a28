"""Named verification suites over the exact identities.

Every suite is a deterministic list of `(case name, check)` pairs; a check
returns a boolean, or a boolean with a rendered counterexample.
"""
from __future__ import annotations

import logging
import random
import time
from itertools import product
from typing import Callable, Iterator, Union

from algebra.errors import AlgebraError
from algebra.qnumbers import qbinom_alternating_sum, truncated_product_check
from hermite import bivariate, univariate
from qsp import serre, star
from qsp.cartan import CartanDatum
from qsp.elements import NCElem

from .schemas import Failure, Report, Suite, SuiteBounds

logger = logging.getLogger(__name__)

Outcome = Union[bool, tuple[bool, str]]
Case = tuple[str, Callable[[], Outcome]]

DEFAULT_MAX = {
    Suite.univariate: 12,
    Suite.bivariate: 8,
    Suite.starproduct: 4,
    Suite.serre_tauii: 6,
    Suite.serre_tauij: 6,
    Suite.sums: 10,
}
TABLE_RANGE = (0, -1, -2, -3)
RANDOM_TRIPLES = 12


def _compare(lhs, rhs) -> Outcome:
    if lhs == rhs:
        return True
    return False, f'{lhs}  !=  {rhs}'


def _a_values(bounds: SuiteBounds, default: tuple[int, ...] = TABLE_RANGE) -> tuple[int, ...]:
    return default if bounds.a is None else (bounds.a,)


def univariate_cases(top: int, bounds: SuiteBounds) -> Iterator[Case]:
    for n in range(top + 1):
        yield f'hermite_rec = hermite_explicit n={n}', lambda n=n: _compare(
            univariate.hermite_rec(n), univariate.hermite_explicit(n)
        )
        yield f'dq_forward n={n}', lambda n=n: univariate.dq_forward_check(n)
        yield f'hermite_parity n={n}', lambda n=n: univariate.hermite_parity_check(n)
    yield f'genfun_uni n<={min(top, 8)}', lambda: univariate.genfun_check_uni(min(top, 8))
    yield 'truncated_product N=6', lambda: truncated_product_check(6, 4)
    for m in range(min(top, 6) + 1):
        for k in range(m + 1):
            yield f'dq_power m={m} k={k}', lambda m=m, k=k: univariate.dq_power_on_hermite_check(m, k)
    for d, m in product((1, 2), range(min(top, 8) + 1)):
        yield f'wm_divided m={m} d={d}', lambda m=m, d=d: univariate.wm_divided_check(m, d)
        yield f'vm_defsum n={m} d={d}', lambda m=m, d=d: univariate.vm_defsum_check(m, d)
        yield f'wm_rescaled_hermite m={m} d={d}', lambda m=m, d=d: univariate.wm_is_rescaled_hermite_check(m, d)
        yield f'vm_rescaled_hermite m={m} d={d}', lambda m=m, d=d: univariate.vm_is_rescaled_hermite_check(m, d)
        yield f'vm_wm m={m} d={d}', lambda m=m, d=d: univariate.vmwm_check(m, d)


def _dq_relation(m: int, n: int, axis: str) -> Outcome:
    report = bivariate.dq_relation_check(m, n, axis)
    return report.half_exponent_holds, f'variant={report.variant.value}'


def bivariate_cases(top: int, bounds: SuiteBounds) -> Iterator[Case]:
    for total in range(top + 1):
        for m in range(total + 1):
            n = total - m
            yield f'recursion = expansion ({m},{n})', lambda m=m, n=n: _compare(
                bivariate.bihermite_rec(m, n), bivariate.bihermite_expand(m, n)
            )
            yield f'symmetry ({m},{n})', lambda m=m, n=n: bivariate.symmetry_check(m, n)
            yield f'shape ({m},{n})', lambda m=m, n=n: bivariate.bihermite_shape_check(m, n)
            yield f'r=0 ({m},{n})', lambda m=m, n=n: bivariate.r_zero_check(m, n)
            yield f'y_recursion ({m},{n})', lambda m=m, n=n: bivariate.y_recursion_check(m, n)
            if m:
                yield f'dq_x ({m},{n})', lambda m=m, n=n: _dq_relation(m, n, 'x')
            if n:
                yield f'dq_y ({m},{n})', lambda m=m, n=n: _dq_relation(m, n, 'y')
    yield f'genfun_biv total<={top}', lambda: bivariate.genfun_check_biv(top)
    yield f'path_independence total<={top} seed={bounds.seed}', lambda: bivariate.path_independence_check(
        top, bounds.seed
    )
    for m, n in product(range(min(top, 5) + 1), repeat=2):
        yield f'operator_formulation ({m},{n})', lambda m=m, n=n: bivariate.operator_formulation_check(m, n)


def _words(datum: CartanDatum, max_len: int) -> list[tuple[str, ...]]:
    return [w for length in range(max_len + 1) for w in product(datum.indices, repeat=length)]


def _random_triples(datum: CartanDatum, max_len: int, count: int, seed: int) -> list[tuple[tuple[str, ...], ...]]:
    """`count` triples of nonempty words, each of length at most `max_len`."""

    words = [w for w in _words(datum, max_len) if w]
    if not words:
        return []
    rng = random.Random(seed)
    return [tuple(rng.choice(words) for _ in range(3)) for _ in range(count)]


def starproduct_cases(top: int, bounds: SuiteBounds) -> Iterator[Case]:
    datum = CartanDatum.three_index()
    words = _words(datum, top)
    for word in _words(datum, top + 1):
        for i in datum.indices:
            yield f'left = right rule {word}*{i}', lambda w=word, i=i: star.star_mul_right_check(
                NCElem.word(datum, w), NCElem.letter(datum, i)
            )
    for word in _words(datum, top + 2):
        for i, j in product(datum.indices, repeat=2):
            yield f'partials commute {word} L{i} R{j}', lambda w=word, i=i, j=j: star.partials_commute_check(
                datum, w, i, j
            )
    for word in words:
        yield f'star basis round trip {word}', lambda w=word: _compare(
            star.from_star_basis(star.to_star_basis(NCElem.word(datum, w))), NCElem.word(datum, w)
        )
    for a, b in product(words, repeat=2):
        if a and b and len(a) + len(b) <= top:
            yield f'grading {a}*{b}', lambda a=a, b=b: star.grading_check(
                NCElem.word(datum, a), NCElem.word(datum, b)
            )
    for a, b, c in product([w for w in words if w], repeat=3):
        if len(a) + len(b) + len(c) <= top:
            yield f'associativity {a}*{b}*{c}', lambda a=a, b=b, c=c: star.associativity_check(
                NCElem.word(datum, a), NCElem.word(datum, b), NCElem.word(datum, c)
            )
    for a, b, c in _random_triples(datum, top, RANDOM_TRIPLES, bounds.seed):
        yield f'associativity seed={bounds.seed} {a}*{b}*{c}', lambda a=a, b=b, c=c: star.associativity_check(
            NCElem.word(datum, a), NCElem.word(datum, b), NCElem.word(datum, c)
        )
    for n in range(top + 1):
        yield f'tau swap power n={n}', lambda n=n: star.tau_swap_power_check(datum, '2', n)


def _relation_table(datum: CartanDatum) -> Outcome:
    table = serre.relation_table(datum, '1', '2')
    return table.matches_closed_form, table.text


def serre_tauii_cases(top: int, bounds: SuiteBounds) -> Iterator[Case]:
    for a in _a_values(bounds):
        datum = CartanDatum.rank_two(a, 'fixed')
        d = datum.d('1')
        for total in range(top + 1):
            for m in range(total + 1):
                n = total - m
                yield f'lemma_wmn a={a} ({m},{n})', lambda datum=datum, m=m, n=n: serre.verify_lemma_wmn(
                    datum, m, n, '1', '2'
                )
                yield f'extract_wmn a={a} ({m},{n})', lambda datum=datum, m=m, n=n: serre.extract_wmn_check(
                    datum, m, n, '1', '2'
                )
                yield f'wmn_recursions a={a} ({m},{n})', lambda a=a, d=d, m=m, n=n: bivariate.wmn_recursions_check(
                    m, n, d, a
                )
                yield f'wmn_mixed a={a} ({m},{n})', lambda a=a, d=d, m=m, n=n: bivariate.wmn_mixed_expansion_check(
                    m, n, d, a
                )
                yield f'wmn_hermite a={a} ({m},{n})', lambda a=a, d=d, m=m, n=n: bivariate.wmn_hermite_check(
                    m, n, d, a
                )
        yield f'resummation a={a}', lambda a=a, d=d: bivariate.resummation_check(a, d)
        yield f'dqS bivariate a={a}', lambda datum=datum: serre.verify_dqS_bivariate(datum, '1', '2')
        for variant in ('wv', 'vw'):
            yield f'dqS univariate {variant} a={a}', lambda datum=datum, variant=variant: serre.verify_dqS_univariate(
                datum, '1', '2', variant
            )
        if a in TABLE_RANGE:
            yield f'relation table a={a}', lambda datum=datum: _relation_table(datum)


def serre_tauij_cases(top: int, bounds: SuiteBounds) -> Iterator[Case]:
    for a in _a_values(bounds):
        datum = CartanDatum.rank_two(a, 'swap')
        for total in range(top + 1):
            for m in range(total + 1):
                n = total - m
                yield f'tau_ij expansion a={a} ({m},{n})', lambda datum=datum, m=m, n=n: serre.verify_tau_ij_expansion(
                    datum, m, n, '1', '2'
                )
        for n in range(top + 1):
            yield f'F_j * F_i^{n} a={a}', lambda datum=datum, n=n: serre.fj_star_fi_power_check(datum, n, '1', '2')
        yield f'sbb2 a={a} m={1 - a}', lambda datum=datum: serre.verify_sbb2(datum, '1', '2')
    datum = CartanDatum.three_index()
    yield 'undeformed serre (2,1)', lambda: serre.undeformed_serre_check(datum, '2', '1')


def sums_cases(top: int, bounds: SuiteBounds) -> Iterator[Case]:
    for d, ell in product((1, 2), range(top + 1)):
        yield f'qbinom alternating sum l={ell} d={d}', lambda ell=ell, d=d: qbinom_alternating_sum(ell, d)
    for d, a in product((1, 2), _a_values(bounds, (0, -1, -2, -3, -4))):
        yield f'sum identities a={a} d={d}', lambda a=a, d=d: serre.verify_sum_identities(a, d)


SUITES: dict[Suite, Callable[[int, SuiteBounds], Iterator[Case]]] = {
    Suite.univariate: univariate_cases,
    Suite.bivariate: bivariate_cases,
    Suite.starproduct: starproduct_cases,
    Suite.serre_tauii: serre_tauii_cases,
    Suite.serre_tauij: serre_tauij_cases,
    Suite.sums: sums_cases,
}


def cases_for(suite: Suite, bounds: SuiteBounds) -> Iterator[Case]:
    if suite is Suite.all:
        for name in SUITES:
            for case, check in cases_for(name, bounds):
                yield f'{name.value}: {case}', check
        return
    top = DEFAULT_MAX[suite] if bounds.max is None else bounds.max
    if suite is Suite.starproduct:
        top = min(top, 4)
    yield from SUITES[suite](top, bounds)


def run_suite(suite: Suite | str, bounds: SuiteBounds | None = None, timings: bool = False) -> Report:
    """Runs every case of `suite` in order and collects the failures.

    Args:
        `suite` (Suite | str): Suite name.
        `bounds` (SuiteBounds | None, optional): Degree bounds. Defaults to each suite's own bounds.
        `timings` (bool, optional): Record the wall time in the report. Defaults to False.

    Raises:
        `ValueError`: If `suite` is not a known suite.

    Returns:
        `Report`: Cases run and failures, each failure with its rendered counterexample.
    """

    suite = Suite(suite)
    bounds = bounds or SuiteBounds()
    start = time.perf_counter()
    failures = []
    count = 0
    for case, check in cases_for(suite, bounds):
        count += 1
        try:
            outcome = check()
        except AlgebraError as error:
            failures.append(Failure(case=case, detail=f'{type(error).__name__}: {error}'))
            logger.warning('case %s raised %s', case, error)
            continue
        ok, detail = outcome if isinstance(outcome, tuple) else (outcome, 'identity does not hold')
        if not ok:
            failures.append(Failure(case=case, detail=detail))
            logger.warning('case %s failed', case)
        else:
            logger.debug('case %s passed', case)
    elapsed = time.perf_counter() - start
    logger.info('suite %s: %d cases, %d failures, %.2fs', suite.value, count, len(failures), elapsed)
    return Report(
        suite=suite.value,
        cases_run=count,
        failures=failures,
        wall_time=round(elapsed, 3) if timings else None,
    )
