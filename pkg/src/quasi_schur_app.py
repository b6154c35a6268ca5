import functools
import json
import logging
import sys
from typing import Callable, Optional

import click

from quasi_schur.certifier import ChainCertifier, compare_with_golden
from quasi_schur.chains import scd
from quasi_schur.exceptions import CrossCheckError, QuasiSchurError, ValidationError, exit_code_for
from quasi_schur.models import OUTPUT_FORMATS, Partition, RunConfig
from quasi_schur.plethysm import (DEFAULT_SIZE_GUARD, leading_term, plethysm_F, plethysm_schur,
                                  second_leading_term)
from quasi_schur.quasi_kostka import (F_to_schur, F_to_schur_via_chains, checked_inverse, enumerate_chains,
                                      inverse_matrix, quasi_kostka_matrix)
from quasi_schur.serialization import (dump_chains, dump_symfunc, dump_two_row, load_chain_decomposition,
                                       load_symfunc, matrix_to_csv, matrix_to_dict)
from quasi_schur.two_variables import METHODS, two_var_plethysm, two_var_plethysm_all
from quasi_schur.utils import render_chains, render_matrix, render_signed_chains, render_symfunc, render_two_row

LOG_FORMAT = "%(levelname)s: %(message)s"


class CommandFailure(click.ClickException):
    """A library error surfaced as a click error with the mapped exit code."""

    def __init__(self, error: BaseException):
        super().__init__(str(error))
        self.exit_code = exit_code_for(error)


class PartitionParam(click.ParamType):
    name = "partition"

    def convert(self, value, param, ctx):
        if isinstance(value, Partition):
            return value
        try:
            return Partition.from_string(value)
        except ValidationError as e:
            self.fail(str(e), param, ctx)


PARTITION = PartitionParam()


def configure_logging(verbosity: int) -> None:
    if verbosity <= 0:
        level = logging.WARNING
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)
    logging.getLogger().setLevel(level)


def _require_format(config: RunConfig, *allowed: str) -> None:
    if config.output_format not in allowed:
        raise ValidationError(f"Command {config.subcommand} does not write {config.output_format}; "
                              f"use one of {allowed}")


def _emit(config: RunConfig, text: str) -> None:
    if config.output_path:
        with click.open_file(config.output_path, "w") as f:
            f.write(text)
        logging.info(f"Wrote {config.subcommand} output to {config.output_path}")
    else:
        click.echo(text, nl=False)


def _read(path: str) -> str:
    with click.open_file(path, "r") as f:
        return f.read()


def output_options(default_format: str = "json") -> Callable:
    """--output and --format, shared by every command."""
    def decorate(command: Callable) -> Callable:
        command = click.option("--format", "output_format", type=click.Choice(OUTPUT_FORMATS),
                               default=default_format, show_default=True, help="Output format.")(command)
        command = click.option("--output", "output_path", type=click.Path(dir_okay=False),
                               default=None, help="Write to this file instead of stdout.")(command)
        return command
    return decorate


def handle_errors(command: Callable) -> Callable:
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except QuasiSchurError as e:
            logging.debug(f"{type(e).__name__}: {e}")
            raise CommandFailure(e) from e
    return wrapper


def _verbosity() -> int:
    ctx = click.get_current_context(silent=True)
    if ctx is None or ctx.find_root().obj is None:
        return 0
    return ctx.find_root().obj.get("verbosity", 0)


# Runners: each consumes a RunConfig and returns the text to emit.

def run_qk(config: RunConfig) -> str:
    n = config.parameters["n"]
    max_len = config.parameters.get("max_len")
    if n < 1:
        raise ValidationError(f"qk needs n >= 1, got {n}")
    q = quasi_kostka_matrix(n, max_len)
    if config.parameters.get("inverse"):
        matrix = checked_inverse(q) if config.parameters.get("cross_check") else inverse_matrix(n, max_len)
    else:
        matrix = q
    click.echo(f"max |entry| = {matrix.max_abs_entry()}", err=True)
    if config.output_format == "csv":
        return matrix_to_csv(matrix)
    if config.output_format == "text":
        return render_matrix(matrix)
    return json.dumps(matrix_to_dict(matrix), indent=2) + "\n"


def run_f2s(config: RunConfig) -> str:
    _require_format(config, "json", "text")
    f = load_symfunc(_read(config.input_path))
    check = not config.skip_symmetry_check
    if config.parameters.get("via_chains"):
        result = F_to_schur_via_chains(f, check_symmetry=check)
    else:
        result = F_to_schur(f, max_len=config.parameters.get("max_len"), check_symmetry=check)
    return render_symfunc(result) if config.output_format == "text" else dump_symfunc(result)


def run_plethysm(config: RunConfig) -> str:
    _require_format(config, "json", "text")
    lam, mu = config.parameters["lam"], config.parameters["mu"]
    if config.parameters.get("leading_only"):
        nu = leading_term(lam, mu)
        kappa = second_leading_term(lam, mu, config.size_guard) if config.parameters.get("second") else None
        if config.output_format == "text":
            return f"{nu}\n" + (f"{kappa}\n" if kappa is not None else "")
        payload = {"leading_term": list(nu.parts)}
        if config.parameters.get("second"):
            payload["second_leading_term"] = None if kappa is None else list(kappa.parts)
        return json.dumps(payload, indent=2) + "\n"
    if config.parameters.get("basis") == "s":
        result = plethysm_schur(lam, mu, config.size_guard)
    else:
        result = plethysm_F(lam, mu, config.size_guard)
    return render_symfunc(result) if config.output_format == "text" else dump_symfunc(result)


def run_twovar(config: RunConfig) -> str:
    _require_format(config, "json", "text")
    w, h = config.parameters["w"], config.parameters["h"]
    method = config.parameters.get("method", "formula")
    result = two_var_plethysm_all(w, h) if method == "all" else two_var_plethysm(w, h, method)
    return render_two_row(result) if config.output_format == "text" else dump_two_row(result)


def run_scd(config: RunConfig) -> str:
    """Returns the rendered decomposition; raises after emitting when a check or the golden file fails."""
    _require_format(config, "json", "text")
    decomposition = scd(config.parameters["w"], config.parameters["h"])
    report = ChainCertifier(decomposition).certify() if config.parameters.get("certify") else None
    differences = None
    golden_path: Optional[str] = config.parameters.get("golden")
    if golden_path:
        differences = compare_with_golden(decomposition, load_chain_decomposition(_read(golden_path)))
    if config.output_format == "text":
        text = render_chains(decomposition, report, differences)
    else:
        text = dump_chains(decomposition, report, differences)
    _emit(config, text)
    if report is not None and not report.passed:
        raise CrossCheckError(f"Certification of {decomposition.lattice} failed")
    if differences:
        raise CrossCheckError(f"{len(differences)} differences from the golden file {golden_path}")
    return ""


def run_chains(config: RunConfig) -> str:
    _require_format(config, "json", "text")
    mu, lam = config.parameters["mu"], config.parameters["lam"]
    found = enumerate_chains(mu, lam)
    total = sum(chain.sign for chain in found)
    expected = inverse_matrix(mu.size).entry(mu, lam) if mu.size > 0 else 1
    if total != expected:
        logging.error(f"Signed chains from {mu} to {lam} sum to {total}, inverse entry is {expected}")
        raise CrossCheckError(f"Signed chain sum {total} differs from the inverse matrix entry {expected}")
    if config.output_format == "text":
        return render_signed_chains(found, total, expected)
    payload = {
        "mu": list(mu.parts),
        "lambda": list(lam.parts),
        "chains": [{"sign": str(chain.sign), "tableaux": [str(t) for t in chain.tableaux]} for chain in found],
        "sum": str(total),
    }
    return json.dumps(payload, indent=2) + "\n"


def _run(config: RunConfig, runner: Callable[[RunConfig], str]) -> None:
    text = runner(config)
    if text:
        _emit(config, text)


@click.group()
@click.option("-v", "--verbose", count=True, help="-v for progress, -vv for details (stderr).")
@click.version_option("0.1.0", prog_name="quasi-schur")
@click.pass_context
def main(ctx, verbose):
    """Exact quasisymmetric to Schur conversion, plethysm and symmetric chain decompositions."""
    configure_logging(verbose)
    ctx.obj = {"verbosity": verbose}


@main.command()
@click.argument("n", type=int)
@click.option("--max-len", type=click.IntRange(min=0), default=None, help="Only partitions of at most this length.")
@click.option("--inverse", is_flag=True, help="Write the inverse matrix.")
@click.option("--cross-check", is_flag=True, help="Compare the inverse against the series inverse.")
@output_options(default_format="csv")
@handle_errors
def qk(n, max_len, inverse, cross_check, output_path, output_format):
    """Quasi-Kostka matrix for partitions of N, or its inverse."""
    config = RunConfig("qk", {"n": n, "max_len": max_len, "inverse": inverse, "cross_check": cross_check},
                       output_path=output_path, output_format=output_format, verbosity=_verbosity())
    _run(config, run_qk)


@main.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--via-chains", is_flag=True, help="Use signed chains instead of the inverse matrix.")
@click.option("--max-len", type=click.IntRange(min=1), default=None,
              help="Assert no Schur term is longer than this and use the smaller matrix.")
@click.option("--skip-symmetry-check", is_flag=True, help="Do not refuse non-symmetric input.")
@output_options()
@handle_errors
def f2s(input_path, via_chains, max_len, skip_symmetry_check, output_path, output_format):
    """Schur expansion of the F-expansion stored in INPUT_PATH."""
    config = RunConfig("f2s", {"via_chains": via_chains, "max_len": max_len}, input_path=input_path,
                       output_path=output_path, skip_symmetry_check=skip_symmetry_check,
                       output_format=output_format, verbosity=_verbosity())
    _run(config, run_f2s)


@main.command()
@click.argument("lam", type=PARTITION)
@click.argument("mu", type=PARTITION)
@click.option("--basis", type=click.Choice(["F", "s"]), default="F", show_default=True)
@click.option("--leading-only", is_flag=True, help="Only the lexicographically largest Schur term.")
@click.option("--second", is_flag=True, help="With --leading-only, also the second largest term.")
@click.option("--size-guard", type=click.IntRange(min=0), default=DEFAULT_SIZE_GUARD, show_default=True,
              help="Largest |lam|*|mu| to enumerate.")
@output_options()
@handle_errors
def plethysm(lam, mu, basis, leading_only, second, size_guard, output_path, output_format):
    """s_LAM[s_MU] in the F or Schur basis; partitions are written like [2,1]."""
    config = RunConfig("plethysm", {"lam": lam, "mu": mu, "basis": basis, "leading_only": leading_only,
                                    "second": second},
                       output_path=output_path, size_guard=size_guard, output_format=output_format,
                       verbosity=_verbosity())
    _run(config, run_plethysm)


@main.command()
@click.argument("w", type=int)
@click.argument("h", type=int)
@click.option("--method", type=click.Choice(METHODS + ("all",)), default="formula", show_default=True)
@output_options()
@handle_errors
def twovar(w, h, method, output_path, output_format):
    """s_W[s_H](x,y) on two-row Schur polynomials."""
    config = RunConfig("twovar", {"w": w, "h": h, "method": method}, output_path=output_path,
                       output_format=output_format, verbosity=_verbosity())
    _run(config, run_twovar)


@main.command("scd")
@click.argument("w", type=int)
@click.argument("h", type=int)
@click.option("--certify", is_flag=True, help="Append the six-check certificate.")
@click.option("--golden", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Compare against a chain file.")
@output_options()
@handle_errors
def scd_command(w, h, certify, golden, output_path, output_format):
    """Symmetric chain decomposition of L(W,H) for W = 2, 3, 4."""
    config = RunConfig("scd", {"w": w, "h": h, "certify": certify, "golden": golden},
                       output_path=output_path, output_format=output_format, verbosity=_verbosity())
    _run(config, run_scd)


@main.command("chains")
@click.argument("mu", type=PARTITION)
@click.argument("lam", type=PARTITION)
@output_options()
@handle_errors
def chains_command(mu, lam, output_path, output_format):
    """Signed chains of quasi-Yamanouchi tableaux from MU to LAM."""
    config = RunConfig("chains", {"mu": mu, "lam": lam}, output_path=output_path,
                       output_format=output_format, verbosity=_verbosity())
    _run(config, run_chains)


if __name__ == "__main__":
    main()
