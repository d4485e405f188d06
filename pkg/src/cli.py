"""
qginv command line: invariant tables of G_q, U_F+ reports, fusion-ring
diagnostics, i.c.c. constants and the tabulated E(2)/az+b cases.
"""
from __future__ import annotations

import logging
import sys
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

import click

from src import __version__
from src.errors import InputError, InvariantError, NumericalError
from src.freeunitary import analyze_f, analyze_spectrum, icc_constants, load_f_matrix, load_spectrum
from src.fusionring import (
    RepParams,
    Word,
    alternating_word,
    dim_word,
    fuse,
    qdim_word,
    un_ratio_quantity,
    un_sequence,
)
from src.invariant_config import ResolutionConfig, get_resolution_config
from src.invariant_table import consistency_report
from src.knowntables import KnownCase, citation, known_invariants
from src.numerics import format_rational
from src.report import Report, render
from src.rootsystems import (
    build_datum,
    invariant_table_gq,
    parse_type_string,
    two_rho_pairing,
    upsilon,
    upsilon_closed_form,
    upsilon_sweep,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NUMERICAL = 3
SEQUENCE_PREVIEW = 10


class InputFailure(click.ClickException):
    exit_code = EXIT_INPUT


class NumericalFailure(click.ClickException):
    exit_code = EXIT_NUMERICAL


class QginvGroup(click.Group):
    """Turns library errors into click errors with our exit codes."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except InputError as exc:
            raise InputFailure(str(exc)) from exc
        except NumericalError as exc:
            raise NumericalFailure(str(exc)) from exc


@dataclass(frozen=True)
class CliState:
    config: ResolutionConfig
    fmt: str


def _emit(ctx: click.Context, report: Report) -> None:
    state: CliState = ctx.obj
    click.echo(render(report, state.fmt, state.config))


def _one_of(**given: Any) -> str:
    chosen = [name for name, value in given.items() if value not in (None, False)]
    if len(chosen) != 1:
        names = ", ".join(f"--{n.replace('_', '-')}" for n in given)
        raise click.UsageError(f"exactly one of {names} is required")
    return chosen[0]


@click.group(cls=QginvGroup)
@click.option("--format", "fmt", type=click.Choice(["json", "markdown"]), default="json", show_default=True)
@click.option("--rel-tol", type=float, default=None, help="Tolerance of rational recognition.")
@click.option("--max-denominator", type=int, default=None, help="Denominator bound of rational recognition.")
@click.option("--lattice-rel-tol", type=float, default=None, help="Tolerance for subgroup commensurability.")
@click.option("--lattice-max-denominator", type=int, default=None,
              help="Denominator bound for subgroup commensurability.")
@click.option("--eig-threshold", type=float, default=None, help="Jacobi stopping threshold.")
@click.option("--verbose", is_flag=True, help="Debug logging on stderr.")
@click.version_option(version=__version__, prog_name="qginv")
@click.pass_context
def cli(
    ctx: click.Context,
    fmt: str,
    rel_tol: Optional[float],
    max_denominator: Optional[int],
    lattice_rel_tol: Optional[float],
    lattice_max_denominator: Optional[int],
    eig_threshold: Optional[float],
    verbose: bool,
) -> None:
    """Modular invariants of compact quantum groups."""
    if verbose:
        logging.basicConfig(level=logging.DEBUG, stream=sys.stderr,
                            format="%(levelname)s %(name)s: %(message)s")
    config = get_resolution_config().with_overrides(
        rel_tol=rel_tol,
        max_denominator=max_denominator,
        lattice_rel_tol=lattice_rel_tol,
        lattice_max_denominator=lattice_max_denominator,
        eig_threshold=eig_threshold,
    )
    logger.debug("cli(): config %s", config.to_dict())
    ctx.obj = CliState(config=config, fmt=fmt)


@cli.command()
@click.option("--type", "type_string", default=None, help="Root system, e.g. A2, E7 or A2xD4xG2.")
@click.option("--q", type=float, default=0.5, show_default=True)
@click.option("--sweep", type=int, default=None, help="Check every simple type up to this rank.")
@click.pass_context
def rootsys(ctx: click.Context, type_string: Optional[str], q: float, sweep: Optional[int]) -> None:
    """Invariant table of G_q for a (semisimple) root system."""
    mode = _one_of(type=type_string, sweep=sweep)
    if mode == "sweep":
        frame = upsilon_sweep(sweep)
        _emit(ctx, Report("rootsys", {"max_rank": sweep, "all_agree": bool(frame["agrees"].all())},
                          frames={"sweep": frame}))
        return

    components = parse_type_string(type_string)
    datum = build_datum(components)
    table = invariant_table_gq(datum, q)
    payload: Dict[str, Any] = {
        "type": datum.name,
        "q": q,
        "rank": datum.rank,
        "cartan": [list(row) for row in datum.cartan],
        "inv_cartan": [[format_rational(v) for v in row] for row in datum.inv_cartan],
        "lengths": list(datum.lengths),
        "pairing": list(two_rho_pairing(datum)),
        "upsilon": upsilon(datum),
        "reference_upsilon": {str(t): upsilon_closed_form(t) for t in components},
        "consistency": consistency_report(table),
    }
    _emit(ctx, Report("rootsys", payload, tables={"table": table}))


@cli.command()
@click.option("--matrix", type=click.Path(exists=True, dir_okay=False), default=None,
              help='F as JSON: {"n": 3, "entries": [[re, im], ...]}.')
@click.option("--spectrum", type=click.Path(exists=True, dir_okay=False), default=None,
              help='Exact spectrum: {"base": 0.5, "exponents": ["2", "7", "-8"]}.')
@click.option("--raw", is_flag=True, help="Skip the balance check of an exact spectrum.")
@click.option("--n-icc", type=int, default=None, help="Also compute the n-i.c.c. constants.")
@click.pass_context
def ufp(ctx: click.Context, matrix: Optional[str], spectrum: Optional[str], raw: bool,
        n_icc: Optional[int]) -> None:
    """Invariants of U_F+ from F or from an exact spectrum of rho_alpha."""
    state: CliState = ctx.obj
    mode = _one_of(matrix=matrix, spectrum=spectrum)
    if mode == "matrix":
        if raw:
            raise click.UsageError("--raw only applies to --spectrum")
        report = analyze_f(load_f_matrix(matrix), n_icc=n_icc, config=state.config)
    else:
        if n_icc is not None:
            raise click.UsageError("--n-icc needs --matrix")
        report = analyze_spectrum(load_spectrum(spectrum, raw=raw), state.config)
    payload = report.to_dict()
    payload.pop("invariants")
    payload.pop("symbolic")
    _emit(ctx, Report("ufp", payload, tables={"table": report.table}))


def _parse_pair(text: str) -> List[Word]:
    parts = text.split(",")
    if len(parts) != 2:
        raise InputError(f"--fuse expects two words separated by a comma, got {text!r}")
    return [Word.parse(p) for p in parts]


@cli.command()
@click.option("--fuse", "fuse_pair", default=None, help="Two words, e.g. abab,abab.")
@click.option("--dim", "dim_of", default=None, help="Word whose (quantum) dimension to compute.")
@click.option("--thmun", "--un-ratio", "thmun", is_flag=True, help="Sequence diagnostics for U^n = w^{2n}.")
@click.option("--N", "N", type=int, default=2, show_default=True)
@click.option("--q", type=float, default=0.5, show_default=True)
@click.option("--nmax", type=int, default=50, show_default=True)
@click.pass_context
def fusion(ctx: click.Context, fuse_pair: Optional[str], dim_of: Optional[str], thmun: bool,
           N: int, q: float, nmax: int) -> None:
    """Fusion rules, dimensions and sequence diagnostics of U_F+."""
    mode = _one_of(fuse=fuse_pair, dim=dim_of, thmun=thmun)
    if mode == "fuse":
        x, y = _parse_pair(fuse_pair)
        payload = {"mode": "fuse", "left": str(x), "right": str(y), "terms": fuse(x, y).to_list()}
    elif mode == "dim":
        w = Word.parse(dim_of)
        params = RepParams(N=N, q=q)
        payload = {
            "mode": "dim",
            "word": str(w),
            "N": N,
            "q": q,
            "dim": dim_word(w, params),
            "qdim": qdim_word(w, params),
            "alternating": w == alternating_word(len(w), w.letters[:1] or "a"),
        }
    else:
        result = un_ratio_quantity(q, nmax)
        payload = {"mode": "thmun", **result.to_dict()}
        payload["sequence"] = [
            [n, *un_sequence(q, n)] for n in range(1, min(nmax, SEQUENCE_PREVIEW) + 1)
        ]
    _emit(ctx, Report("fusion", payload))


@cli.command()
@click.option("--matrix", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--n", "n", type=int, default=1, show_default=True)
@click.pass_context
def icc(ctx: click.Context, matrix: str, n: int) -> None:
    """n-i.c.c. certification constants of the dual of U_F+."""
    state: CliState = ctx.obj
    report = icc_constants(load_f_matrix(matrix), n, state.config)
    _emit(ctx, Report("icc", report.to_dict()))


@cli.command()
@click.option("--case", "case_name", required=True, help="eq2, azb1, azb2 or azb3.")
@click.option("--q", type=float, default=0.5, show_default=True)
@click.option("--N", "N", type=int, default=None, help="azb1: q = exp(2 pi i/N), N even >= 6.")
@click.pass_context
def known(ctx: click.Context, case_name: str, q: float, N: Optional[int]) -> None:
    """Tabulated invariants of quantum E(2) and quantum az+b."""
    case = KnownCase.parse(case_name, q=q, N=N)
    g_table, dual_table = known_invariants(case)
    payload = {
        "case": case.which.value,
        "citation": citation(case),
        "consistency": {"G": consistency_report(g_table), "dual": consistency_report(dual_table)},
    }
    if case.q is not None and case.which.value in ("eq2", "azb2"):
        payload["q"] = case.q
    if case.N is not None:
        payload["N"] = case.N
    _emit(ctx, Report("known", payload, tables={"G": g_table, "dual": dual_table}))


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point returning an exit code instead of exiting."""
    try:
        result = cli.main(args=list(argv) if argv is not None else None, prog_name="qginv",
                          standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return 1
    except InvariantError as exc:
        click.echo(f"Error: {exc}", err=True)
        return EXIT_NUMERICAL if isinstance(exc, NumericalError) else EXIT_INPUT
    return result if isinstance(result, int) else EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
