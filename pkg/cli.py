"""
flagpos - Lusztig positivity against Plücker positivity on flag varieties
Command-line frontend for the verification suites

Exit codes: 0 every check passed, 1 some check failed, 2 usage error,
3 malformed input (matrix files, scalar literals, hint files).
"""
import functools
import json
import logging
from pathlib import Path
from typing import Optional, Tuple

import click

from algebra.matrix import DimensionMismatchError, ExactMatrix, MatrixFormatError
from algebra.plucker import plucker_vector
from algebra.scalar import ScalarParseError, parse_scalar_list
from config.settings import DEFAULT_SEED, DEFAULT_SAMPLES, LOG_FILE, LOG_LEVEL
from counterexamples.catalog import Catalog
from counterexamples.constructions import ConstructionError, b2_equality_report, build_counterexample
from counterexamples.hints import HintError, load_hints
from counterexamples.type_d import WITNESS_T, pfaffian_demo_report, type_d_report
from pinning.groups import GroupDescriptor, MembershipError, PinningError
from positivity.harness import (
    distinguished_report,
    duality_report,
    fold_report,
    longest_word_folding_report,
    pinning_report,
    theorem_forward_report,
)
from positivity.reports import REPORT_FORMATS, Report
from positivity.sampling import ParameterError
from weyl.elements import WeylError
from weyl.subexpressions import NotBelowError
from weyl.words import CapExceededError, Word

logger = logging.getLogger(__name__)

EXIT_FAILED = 1
EXIT_BAD_INPUT = 3

# Errors raised for bad option values; click reports them as usage errors
USAGE_ERRORS = (PinningError, MembershipError, WeylError, NotBelowError, ConstructionError, ParameterError,
                DimensionMismatchError)
INPUT_ERRORS = (MatrixFormatError, ScalarParseError, HintError, OSError)


def configure_logging(verbose: bool = False) -> None:
    log_handlers = [logging.StreamHandler()]
    if LOG_FILE:
        log_handlers.append(logging.FileHandler(LOG_FILE))
    logging.basicConfig(
        level=logging.DEBUG if verbose else getattr(logging, LOG_LEVEL, logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=log_handlers
    )


def parse_ranks(ctx, param, value: Optional[str]) -> Optional[Tuple[int, ...]]:
    if value is None:
        return None
    try:
        ranks = tuple(sorted({int(k) for k in value.split(",") if k.strip()}))
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got '{value}'")
    if not ranks:
        raise click.BadParameter("K must not be empty")
    return ranks


def descriptor(system: str, n: int) -> GroupDescriptor:
    try:
        return GroupDescriptor(system, n)
    except PinningError as e:
        raise click.UsageError(str(e))


def handle_errors(func):
    """Map domain errors onto the documented exit codes"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except USAGE_ERRORS as e:
            raise click.UsageError(str(e))
        except CapExceededError as e:
            logger.error(f"Cap exceeded: {e}")
            click.echo(f"Error: {e}", err=True)
            click.get_current_context().exit(EXIT_FAILED)
        except INPUT_ERRORS as e:
            logger.error(f"Bad input: {e}")
            click.echo(f"Error: {e}", err=True)
            click.get_current_context().exit(EXIT_BAD_INPUT)
    return wrapper


def emit_text(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
        logger.info(f"Wrote {output}")
    else:
        click.echo(text)


def emit(report: Report, fmt: str, output: Optional[str]) -> None:
    """Write the report and exit 1 when a check failed"""
    emit_text(report.render(fmt), output)
    if not report.passed:
        click.get_current_context().exit(EXIT_FAILED)


def report_options(func):
    func = click.option('-o', '--output', type=click.Path(dir_okay=False),
                        help='Write the report here instead of stdout')(func)
    func = click.option('--format', 'fmt', type=click.Choice(REPORT_FORMATS), default='json',
                        show_default=True, help='Report format')(func)
    return func


def group_options(systems):
    def decorate(func):
        func = click.option('--n', 'n', type=int, required=True, help='Rank')(func)
        func = click.option('--system', type=click.Choice(systems), required=True, help='Root system')(func)
        return func
    return decorate


def sampling_options(default_samples: int = DEFAULT_SAMPLES):
    def decorate(func):
        func = click.option('--seed', type=int, default=DEFAULT_SEED, envvar='FLAGPOS_SEED',
                            show_default=True, help='Seed for every random draw')(func)
        func = click.option('--samples', type=click.IntRange(min=1), default=default_samples,
                            show_default=True, help='Number of seeded samples')(func)
        return func
    return decorate


# ============================================================================
# COMMANDS
# ============================================================================

@click.group()
@click.option('-v', '--verbose', is_flag=True, help='Log certifier steps and suite progress')
def cli(verbose: bool):
    """Exact checks of Lusztig against Plücker positivity for flag varieties"""
    configure_logging(verbose)


@cli.command('verify-pinning')
@group_options(["A", "B", "C", "D"])
@sampling_options(default_samples=20)
@report_options
@handle_errors
def verify_pinning(system, n, samples, seed, fmt, output):
    """Generators are group members; B and C generators fold to type A"""
    emit(pinning_report(descriptor(system, n), samples, seed), fmt, output)


@cli.command()
@group_options(["B", "C"])
@click.option('--word', default=None, help='Comma-separated letters; every reduced word of w0 when omitted')
@report_options
@handle_errors
def fold(system, n, word, fmt, output):
    """Fold a word of B(n) or C(n) into type A"""
    if word is None:
        report = longest_word_folding_report(system, n)
    else:
        report = fold_report(Word.parse(system, n, word))
    emit(report, fmt, output)


@cli.command()
@group_options(["A", "B", "C"])
@click.option('--K', 'ranks', required=True, callback=parse_ranks, help='Comma-separated ranks, e.g. 2,3')
@sampling_options()
@click.option('--total-positivity', is_flag=True, help='Also check total positivity of group elements in GL')
@report_options
@handle_errors
def theorem(system, n, ranks, samples, seed, total_positivity, fmt, output):
    """Lusztig-positive samples are Plücker positive at ranks K"""
    g = descriptor(system, n)
    emit(theorem_forward_report(g, ranks, samples, seed, total_positivity=total_positivity), fmt, output)


@cli.command()
@group_options(["B", "C"])
@sampling_options()
@report_options
@handle_errors
def duality(system, n, samples, seed, fmt, output):
    """L_(N-i) is the perp of L_i with the same Plücker vector up to sign"""
    emit(duality_report(descriptor(system, n), samples, seed), fmt, output)


@cli.command()
@group_options(["B", "C"])
@click.option('--K', 'ranks', required=True, callback=parse_ranks, help='Comma-separated ranks, e.g. 1,3,4')
@click.option('--hints-file', type=click.Path(dir_okay=False), default=None, help='Proof hint YAML file')
@report_options
@handle_errors
def counterexample(system, n, ranks, hints_file, fmt, output):
    """Build, verify and certify the counterexample at ranks K"""
    c = build_counterexample(system, n, ranks)
    catalog = Catalog(hints=load_hints(hints_file))
    emit(catalog.run(c), fmt, output)


@cli.command()
@click.option('--system', type=click.Choice(["B", "C"]), default=None, help='Only this system')
@click.option('--n', 'n', type=int, default=None, help='Only this rank')
@click.option('--list', 'list_only', is_flag=True, help='Print the construction names only')
@report_options
@handle_errors
def catalog(system, n, list_only, fmt, output):
    """Run every catalog construction; one check per construction"""
    entries = Catalog()
    if list_only:
        names = [name for name, c in entries.entries.items()
                 if (not system or c.descriptor.system == system) and (not n or c.descriptor.n == n)]
        emit_text(json.dumps(names, indent=2), output)
        return
    emit(entries.summary_report(system, n), fmt, output)


@cli.command('b2')
@sampling_options()
@report_options
@handle_errors
def b2(samples, seed, fmt, output):
    """Positive isotropic lines of B(2) extend to positive flags"""
    emit(b2_equality_report(samples, seed), fmt, output)


@cli.command()
@click.option('--matrix', 'matrix_file', type=click.Path(dir_okay=False), required=True,
              help='Matrix JSON file {rows, cols, entries}')
@click.option('--k', 'k', type=click.IntRange(min=0), required=True, help='Use the first k columns')
@click.option('-o', '--output', type=click.Path(dir_okay=False), help='Write here instead of stdout')
@handle_errors
def plucker(matrix_file, k, output):
    """Every maximal minor of the first k columns"""
    M = ExactMatrix.from_json(Path(matrix_file).read_text(encoding="utf-8"))
    if k > M.n_cols:
        raise click.BadParameter(f"the matrix has {M.n_cols} columns", param_hint="--k")
    emit_text(json.dumps(plucker_vector(M.leading_columns(k)).to_json_dict(), indent=2), output)


@cli.command('pfaffian-demo')
@click.option('--t', 't', default=",".join(WITNESS_T), show_default=True, help='Six comma-separated parameters')
@report_options
@handle_errors
def pfaffian_demo(t, fmt, output):
    """Spin coordinates of the D(4) plane y4 y2 y3 y1 y2 y4 (t)"""
    emit(pfaffian_demo_report(parse_scalar_list(t)), fmt, output)


@cli.command('type-d')
@sampling_options(default_samples=20)
@report_options
@handle_errors
def type_d(samples, seed, fmt, output):
    """Closed form, Pfaffian identities and canonical positivity on seeded D(4) samples"""
    emit(type_d_report(samples, seed), fmt, output)


@cli.group()
def weyl():
    """Weyl group combinatorics"""


@weyl.command()
@group_options(["B", "C"])
@click.option('--exhaustive', is_flag=True, help='Every element and every subexpression')
@report_options
@handle_errors
def distinguished(system, n, exhaustive, fmt, output):
    """Distinguished subexpressions of the closed-form w0 word"""
    emit(distinguished_report(system, n, exhaustive), fmt, output)


def main():
    cli()


if __name__ == '__main__':
    main()
