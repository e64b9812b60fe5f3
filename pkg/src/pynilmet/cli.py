"""The `pynilmet` command line.

Reports go to stdout, as JSON with `--json` and as `key: value` lines otherwise;
logs go to stderr. Exit codes: 0 success or affirmative verdict, 1 negative
verdict, 2 input error, 3 numerical failure.
"""

from __future__ import annotations

import functools
import json
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, NoReturn, TypeVar

import click

from pynilmet.algebra.bracket import gl_act
from pynilmet.algebra.checks import jacobi_residual, nilpotency_index
from pynilmet.catalog.registry import CATALOG, get_entry
from pynilmet.config import FlowConfig, NumericsConfig
from pynilmet.curvature.ricci import F_value, invariant_ricci, ricci, scalar_curvature
from pynilmet.exceptions import (
    CurvatureConsistencyError,
    DimensionMismatchError,
    DocumentError,
    FlowDivergenceError,
    IllConditionedError,
    MetricFlowError,
    NonFiniteError,
    NotALieBracketError,
    NotAntisymmetricError,
    NotNilpotentError,
    RationalizationFailedError,
    StructureError,
    UnknownCatalogEntryError,
)
from pynilmet.flow.bracket_flow import flow_run
from pynilmet.minimality.certificate import soliton_test
from pynilmet.minimality.invariants import (
    DistinctionVerdict,
    Normalization,
    distinguish,
    isometry_invariants,
    normalize,
)
from pynilmet.minimality.types import critical_type
from pynilmet.structures.integrability import integrability_residual
from pynilmet.structures.projection import random_structure_group_element
from pynilmet.utils.logging import set_log_level
from pynilmet.utils.serialization.deserializer import parse_document
from pynilmet.utils.serialization.serializer import document, dump, emit_document
from pynilmet.version import __version__

if TYPE_CHECKING:
    from collections.abc import Callable, Mapping
    from typing import TextIO

    from pynilmet.utils.serialization.deserializer import ParsedDocument
    from pynilmet.utils.serialization.types import (
        DistinguishReport,
        FlowReport,
        RicciReport,
        ValidationReport,
    )

logger = logging.getLogger(__name__)

NEGATIVE_EXIT = 1
INPUT_ERROR_EXIT = 2
NUMERICAL_ERROR_EXIT = 3

INPUT_ERRORS = (
    DocumentError,
    NotALieBracketError,
    StructureError,
    UnknownCatalogEntryError,
    DimensionMismatchError,
    NotAntisymmetricError,
    NonFiniteError,
)
NUMERICAL_ERRORS = (
    RationalizationFailedError,
    FlowDivergenceError,
    MetricFlowError,
    NotNilpotentError,
    IllConditionedError,
    CurvatureConsistencyError,
)

F = TypeVar("F", bound="Callable[..., Any]")


class NilmetCliError(click.ClickException):
    def __init__(self, message: str, exit_code: int) -> None:
        super().__init__(message)
        self.exit_code = exit_code


@dataclass(frozen=True)
class CliOptions:
    tol: float
    seed: int | None
    as_json: bool


def _translate_errors(func: F) -> F:
    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except INPUT_ERRORS as e:
            # args[0] avoids the quoting KeyError adds to str()
            raise NilmetCliError(str(e.args[0]), INPUT_ERROR_EXIT) from e
        except NUMERICAL_ERRORS as e:
            raise NilmetCliError(str(e), NUMERICAL_ERROR_EXIT) from e

    return wrapper  # type: ignore[return-value]


def _emit(options: CliOptions, report: Mapping[str, Any]) -> None:
    if options.as_json:
        click.echo(json.dumps(report, indent=2))
        return
    for key, value in report.items():
        text = value if isinstance(value, str | int | float) else json.dumps(value)
        click.echo(f"{key}: {text}")


def _read(file: TextIO) -> ParsedDocument:
    return parse_document(file.read())


def _negative_verdict() -> NoReturn:
    click.get_current_context().exit(NEGATIVE_EXIT)


@click.group()
@click.option(
    "--tol",
    type=float,
    default=NumericsConfig().tol,
    show_default=True,
    help="Tolerance of residual based verdicts.",
)
@click.option("--seed", type=int, default=NumericsConfig().seed, help="Random seed.")
@click.option("--json", "as_json", is_flag=True, help="Write reports as JSON.")
@click.option("--verbose", "-v", is_flag=True, help="Log debug messages to stderr.")
@click.version_option(__version__, prog_name="pynilmet")
@click.pass_context
def cli(
    ctx: click.Context, tol: float, seed: int | None, as_json: bool, verbose: bool
) -> None:
    """Compatible metrics on nilpotent Lie groups with geometric structures."""
    set_log_level(logging.DEBUG if verbose else logging.INFO)
    ctx.obj = CliOptions(tol=tol, seed=seed, as_json=as_json)


@cli.command()
@click.argument("file", type=click.File("r"))
@click.pass_obj
@_translate_errors
def validate(options: CliOptions, file: TextIO) -> None:
    """Checks the Jacobi identity, nilpotency and integrability of FILE."""
    parsed = _read(file)
    mu, gamma = parsed.bracket, parsed.structure
    try:
        index: int | None = nilpotency_index(mu, options.tol)
    except (NotALieBracketError, NotNilpotentError) as e:
        logger.info("No nilpotency index: %s", e)
        index = None
    jacobi = jacobi_residual(mu)
    integrability = integrability_residual(mu, gamma)
    report: ValidationReport = {
        "dim": mu.dim,
        "jacobi_residual": jacobi,
        "nilpotency_index": index,
        "structure": gamma.kind.value,
        "integrability_residual": integrability,
        "valid": jacobi <= options.tol
        and index is not None
        and integrability <= NumericsConfig().integrability_tol,
    }
    _emit(options, report)
    if not report["valid"]:
        _negative_verdict()


@cli.command("ricci")
@click.argument("file", type=click.File("r"))
@click.pass_obj
@_translate_errors
def ricci_command(options: CliOptions, file: TextIO) -> None:
    """Prints the Ricci and invariant Ricci operators of FILE."""
    parsed = _read(file)
    mu, gamma = parsed.bracket, parsed.structure
    report: RicciReport = {
        "scal": scalar_curvature(mu),
        "f_value": None if mu.is_zero() else F_value(mu, gamma),
        "ricci": dump(ricci(mu)),
        "invariant_ricci": dump(invariant_ricci(mu, gamma)),
    }
    _emit(options, report)


@cli.command()
@click.argument("file", type=click.File("r"))
@click.pass_obj
@_translate_errors
def minimal(options: CliOptions, file: TextIO) -> None:
    """Certifies whether the metric of FILE is minimal."""
    parsed = _read(file)
    certificate = soliton_test(parsed.bracket, parsed.structure, options.tol)
    _emit(options, dump(certificate))
    if not certificate.is_minimal:
        _negative_verdict()


@cli.command("type")
@click.argument("file", type=click.File("r"))
@click.pass_obj
@_translate_errors
def type_command(options: CliOptions, file: TextIO) -> None:
    """Extracts the type of the critical point in FILE."""
    parsed = _read(file)
    certificate = soliton_test(parsed.bracket, parsed.structure, options.tol)
    if not certificate.is_minimal:
        _emit(options, {"certificate": dump(certificate), "type": None})
        _negative_verdict()
    _emit(
        options,
        {"certificate": dump(certificate), "type": dump(critical_type(certificate))},
    )


@cli.command()
@click.argument("file", type=click.File("r"))
@click.option("--step", type=float, default=FlowConfig().step, show_default=True)
@click.option(
    "--max-steps", type=int, default=FlowConfig().max_steps, show_default=True
)
@click.option(
    "--grad-tol", type=float, default=FlowConfig().grad_tol, show_default=True
)
@click.option(
    "--perturb",
    type=float,
    default=0.0,
    show_default=True,
    help="Start from g.mu for a random g in G_gamma of this scale.",
)
@click.option(
    "--out",
    type=click.Path(dir_okay=False, writable=True),
    default=None,
    help="CSV file for the trace (t,F,scal,grad_norm).",
)
@click.pass_obj
@_translate_errors
def flow(  # noqa: PLR0913
    options: CliOptions,
    file: TextIO,
    step: float,
    max_steps: int,
    grad_tol: float,
    perturb: float,
    out: str | None,
) -> None:
    """Runs the gradient flow of F from the bracket of FILE."""
    parsed = _read(file)
    mu, gamma = parsed.bracket, parsed.structure
    if perturb > 0:
        mu = gl_act(random_structure_group_element(gamma, perturb, options.seed), mu)
    trace = flow_run(
        mu, gamma, step=step, max_steps=max_steps, grad_tol=grad_tol, tol=options.tol
    )
    if out is not None:
        trace.to_csv(out)
    report: FlowReport = {
        "steps": trace.steps,
        "converged": trace.converged,
        "halvings": trace.halvings,
        "final_f": trace.f_values[-1],
        "final_grad_norm": trace.grad_norms[-1],
        "max_constraint_residual": max(trace.constraint_residuals),
        "certificate": dump(trace.final_certificate),
        "final": document(trace.final, gamma, parsed.basis_labels),
    }
    _emit(options, report)
    if not trace.converged:
        _negative_verdict()


@cli.command("distinguish")
@click.argument("file_a", type=click.File("r"))
@click.argument("file_b", type=click.File("r"))
@click.option(
    "--normalization",
    type=click.Choice([n.value for n in Normalization]),
    default=Normalization.SCAL.value,
    show_default=True,
)
@click.pass_obj
@_translate_errors
def distinguish_command(
    options: CliOptions, file_a: TextIO, file_b: TextIO, normalization: str
) -> None:
    """Tries to prove that FILE_A and FILE_B are not isomorphic."""
    first, second = _read(file_a), _read(file_b)
    if first.structure != second.structure:
        raise StructureError("Both documents must carry the same structure.")
    gamma = first.structure
    mode = Normalization(normalization)
    distinction = distinguish(
        first.bracket, second.bracket, gamma, options.tol, normalization=mode
    )
    report: DistinguishReport = {
        "normalization": mode.value,
        "distinction": dump(distinction),
        "invariants": [
            dump(isometry_invariants(normalize(parsed.bracket, mode), gamma))
            for parsed in (first, second)
        ],
    }
    _emit(options, report)
    if distinction.verdict is not DistinctionVerdict.DISTINCT:
        _negative_verdict()


def _parse_params(name: str, items: tuple[str, ...]) -> dict[str, Any]:
    entry = get_entry(name)
    values: dict[str, Any] = {}
    for item in items:
        key, separator, text = item.partition("=")
        if not separator:
            raise click.BadParameter(
                f"expected KEY=VALUE, got {item!r}.", param_hint="--param"
            )
        try:
            values[key.strip()] = entry.parse_param(key.strip(), text)
        except ValueError as e:
            raise click.BadParameter(str(e), param_hint="--param") from e
    return values


@cli.command("catalog")
@click.argument("name")
@click.option(
    "-p", "--param", "params", multiple=True, metavar="KEY=VALUE", help="Parameter."
)
@click.option("--out", type=click.File("w"), default="-", help="Output document.")
@_translate_errors
def catalog_command(name: str, params: tuple[str, ...], out: TextIO) -> None:
    """Writes the bracket document of the catalog entry NAME."""
    entry = get_entry(name)
    values = _parse_params(name, params)
    try:
        mu = entry.build(**values)
    except ValueError as e:
        if isinstance(e, INPUT_ERRORS):
            raise
        raise click.BadParameter(str(e), param_hint="--param") from e
    metadata = {"catalog": name, "params": {**entry.params, **values}}
    out.write(emit_document(mu, entry.structure(mu), metadata=metadata) + "\n")


@cli.command("catalog-list")
@click.pass_obj
def catalog_list(options: CliOptions) -> None:
    """Lists the catalog entries."""
    entries = [
        {
            "name": entry.name,
            "dim": entry.dim,
            "structure": entry.structure_kind.value,
            "params": dump(dict(entry.params)),
            "description": entry.description,
        }
        for entry in CATALOG.values()
    ]
    if options.as_json:
        click.echo(json.dumps(entries, indent=2))
        return
    for item in entries:
        click.echo(
            f"{item['name']} ({item['structure']}, dim {item['dim']}): "
            f"{item['description']}"
        )
