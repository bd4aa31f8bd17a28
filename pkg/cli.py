"""Command-line front end.

Exit status is 0 on success, 1 when a verification fails and 2 on usage,
configuration or domain errors. Logging goes to stderr.
"""
import logging
import sys
from functools import wraps

import click
from pydantic import ValidationError

import services
from algebra.errors import AlgebraError
from numeric.orthogonality import askey_wilson_check, askey_wilson_mod_check, gram_matrix
from numeric.schemas import NumericParams, QuadRule
from qsp.serre import relation_table
from verification.schemas import Suite, SuiteBounds
from verification.suites import run_suite

logger = logging.getLogger(__name__)

EXIT_FAILED = 1
EXIT_USAGE = 2

cartan_option = click.option('--cartan', type=click.Path(exists=True, dir_okay=False), help='Cartan datum file (JSON or YAML).')
pair_option = click.option('--pair', nargs=2, type=str, default=None, help='The pair of indices i j.')
a_option = click.option('--a', 'a_ij', type=click.IntRange(-4, 0), default=None, help='Rank-two datum with a_ij = A.')
format_option = click.option(
    '--format', 'fmt',
    type=click.Choice([f.value for f in services.OutputFormat]),
    default=services.OutputFormat.text.value,
    show_default=True,
)


def exit_2_on_domain_error(func):
    """Reports library and validation errors on stderr and exits with status 2."""

    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (AlgebraError, ValidationError) as error:
            click.echo(f'error: {error}', err=True)
            sys.exit(EXIT_USAGE)

    return wrapper


@click.group()
@click.option('--verbose', is_flag=True, help='Log at DEBUG level on stderr.')
def main(verbose: bool):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s',
    )


@main.command()
@click.argument('kind', type=click.Choice([k.value for k in services.PolyKind]))
@click.argument('n', type=click.IntRange(min=0))
@cartan_option
@pair_option
@a_option
@format_option
@exit_2_on_domain_error
def poly(kind, n, cartan, pair, a_ij, fmt):
    """Prints H_n(x; q), or w_n / v_n for the index i of a pair."""

    datum = i = None
    if kind != services.PolyKind.hermite.value:
        datum = services.resolve_datum(cartan, a_ij)
        if datum is None:
            raise click.UsageError(f'{kind} needs --cartan (or --a) and --pair')
        i, _ = services.resolve_pair(datum, pair)
    click.echo(services.render(services.univariate_poly(kind, n, datum, i), fmt))


@main.command()
@click.argument('m', type=click.IntRange(min=0))
@click.argument('n', type=click.IntRange(min=0))
@format_option
@exit_2_on_domain_error
def bipoly(m, n, fmt):
    """Prints H_{m,n}(x, y; q, r)."""

    click.echo(services.render(services.bivariate_poly(m, n), fmt))


@main.command()
@click.argument('m', type=click.IntRange(min=0))
@click.argument('n', type=click.IntRange(min=0))
@cartan_option
@pair_option
@a_option
@format_option
@exit_2_on_domain_error
def wmn(m, n, cartan, pair, a_ij, fmt):
    """Prints w_{m,n}(x, y) for a pair with tau(i) = i."""

    datum = services.resolve_datum(cartan, a_ij)
    if datum is None:
        raise click.UsageError('wmn needs --cartan or --a')
    i, j = services.resolve_pair(datum, pair)
    click.echo(services.render(services.wmn(datum, i, j, m, n), fmt))


@main.command()
@cartan_option
@pair_option
@a_option
@click.option('--format', 'fmt', type=click.Choice(['text', 'json']), default='text', show_default=True)
@exit_2_on_domain_error
def relation(cartan, pair, a_ij, fmt):
    """Prints the deformed Serre relation of a pair with tau(i) = i in the B generators."""

    datum = services.resolve_datum(cartan, a_ij)
    if datum is None:
        raise click.UsageError('relation needs --cartan or --a')
    i, j = services.resolve_pair(datum, pair)
    table = relation_table(datum, i, j)
    if fmt == 'json':
        click.echo(table.json(sort_keys=True))
    else:
        click.echo(f'S_{i}{j}(B_{i} *, B_{j}) = {table.text}')
    if not table.matches_closed_form:
        sys.exit(EXIT_FAILED)


@main.command()
@click.argument('suite', type=click.Choice([s.value for s in Suite]))
@click.option('--max', 'max_', type=click.IntRange(0, 12), default=None, help='Degree bound.')
@click.option('--a', 'a_ij', type=click.IntRange(-4, 0), default=None, help='Restrict to a_ij = A.')
@click.option('--seed', type=int, default=0, show_default=True)
@click.option('--json', 'as_json', is_flag=True, help='Machine-readable report.')
@click.option('--timings', is_flag=True, help='Include the wall time in the report.')
@exit_2_on_domain_error
def verify(suite, max_, a_ij, seed, as_json, timings):
    """Runs a verification suite; exits with 1 if any case fails."""

    report = run_suite(suite, SuiteBounds(max=max_, a=a_ij, seed=seed), timings=timings)
    if as_json:
        click.echo(report.json(sort_keys=True))
    else:
        click.echo(f'{report.suite}: {report.cases_run} cases, {len(report.failures)} failures')
        for failure in report.failures:
            click.echo(f'  FAIL {failure.case}: {failure.detail}')
        if report.wall_time is not None:
            click.echo(f'  wall time {report.wall_time}s')
    if not report.passed:
        sys.exit(EXIT_FAILED)


def _numeric_params(q, r, grid, rule) -> NumericParams:
    return NumericParams(q=q, r=r, grid=grid, quad_rule=rule)


numeric_options = [
    click.option('--q', type=float, default=0.5, show_default=True),
    click.option('--r', type=float, default=2.0, show_default=True),
    click.option('--grid', type=int, default=256, show_default=True),
    click.option('--rule', type=click.Choice([r.value for r in QuadRule]), default=QuadRule.gauss_legendre.value),
]


def with_numeric_options(func):
    for option in reversed(numeric_options):
        func = option(func)
    return func


@main.command()
@with_numeric_options
@click.option('--maxdeg', type=click.IntRange(0, 4), default=2, show_default=True)
@exit_2_on_domain_error
def gram(q, r, grid, rule, maxdeg):
    """Emits the Gram report of the bivariate polynomials as JSON.

    Exits with 1 if the quadrature did not converge under grid doubling.
    """

    report = gram_matrix(maxdeg, _numeric_params(q, r, grid, rule))
    click.echo(report.json(sort_keys=True))
    if not report.converged:
        sys.exit(EXIT_FAILED)


@main.command(name='askey-wilson')
@with_numeric_options
@click.argument('parameters', nargs=4, type=float)
@click.option('--modified', is_flag=True, help='Use the weight |(e^{2i theta}/r; q)_inf|^2.')
@exit_2_on_domain_error
def askey_wilson(q, r, grid, rule, parameters, modified):
    """Compares an Askey-Wilson integral with its closed form; exits with 1 if they differ."""

    params = _numeric_params(q, r, grid, rule)
    check = askey_wilson_mod_check if modified else askey_wilson_check
    report = check(*parameters, params)
    click.echo(report.json(sort_keys=True))
    if not report.holds:
        sys.exit(EXIT_FAILED)


if __name__ == '__main__':
    main()
