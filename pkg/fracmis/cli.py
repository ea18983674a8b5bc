import logging
import os

import click

from fracmis.commands import DEFAULT_ENUMERATION_LIMIT
from fracmis.commands import DEFAULT_MAX_N
from fracmis.commands import EXIT_USAGE
from fracmis.commands import Command
from fracmis.commands import Method
from fracmis.commands import Subcommand
from fracmis.commands import emit_report
from fracmis.commands import run
from fracmis.errors import FracmisError
from fracmis.graphs import ExportFormat
from fracmis.graphs import Family
from fracmis.limits import DEFAULT_LIMITS

DEFAULT_WORKERS = os.cpu_count() or 1

FAMILIES = [family.label for family in Family]
METHODS = [method.value for method in Method]
FORMATS = [fmt.value for fmt in ExportFormat]


class FracmisClickError(click.ClickException):
  """A library error surfaced on the command line; exits with the usage code."""

  exit_code = EXIT_USAGE


family_option = click.option(
  "--family", "-F", required=True, type=click.Choice(FAMILIES), help="Graph family: psw (scale-free web) or gasket"
)
n_option = click.option("--n", "-n", "n", required=True, type=click.IntRange(min=1), help="Generation n >= 1")
out_option = click.option("--out", "-o", help="Write the output to this path instead of stdout")
cap_n_option = click.option(
  "--cap-n",
  type=click.IntRange(min=1),
  help=f"Largest generation that may be built (default: {DEFAULT_LIMITS.build_cap})",
)
cap_vertices_option = click.option(
  "--cap-vertices",
  type=click.IntRange(min=1),
  help=f"Largest vertex count the brute-force oracle accepts (default: {DEFAULT_LIMITS.oracle_cap})",
)


def method_option(default: str = Method.DP.value):
  return click.option(
    "--method", "-m", type=click.Choice(METHODS), default=default, show_default=True, help="How to compute the result"
  )


def dispatch(ctx: click.Context, cmd: Command):
  """Return the command when only parsing, otherwise run it, emit the report and exit."""
  if ctx.obj.get("parse_only"):
    return cmd

  try:
    report, exit_code = run(cmd)
    if report is not None:
      emit_report(report, None if cmd.subcommand is Subcommand.GENERATE else cmd.out)
      if cmd.out and cmd.subcommand is not Subcommand.GENERATE:
        click.echo(f"Report written to {cmd.out}", err=True)
  except FracmisError as e:
    raise FracmisClickError(str(e)) from e

  ctx.exit(exit_code)


def make_command(subcommand: Subcommand, family=None, n=None, method=None, cap_n=None, cap_vertices=None, **kwargs):
  return Command(
    subcommand=subcommand,
    family=Family.parse(family) if family else None,
    n=n,
    method=Method(method) if method else Method.DP,
    limits=DEFAULT_LIMITS.with_overrides(build_cap=cap_n, oracle_cap=cap_vertices),
    **kwargs,
  )


@click.group()
@click.version_option(version=__import__("fracmis").__version__, prog_name="fracmis")
@click.option("--verbose", "-v", is_flag=True, default=False, help="Log debug output to stderr")
@click.pass_context
def cli(ctx, verbose):
  """Exact maximum independent sets of the scale-free web and the Sierpinski gasket."""
  # Ensure that ctx.obj exists and is a dict (in case `cli()` is called by scripts)
  ctx.ensure_object(dict)
  if verbose:
    logging.basicConfig(level=logging.DEBUG, format="%(asctime)s %(name)s %(levelname)s %(message)s")


@cli.command()
def info():
  """Show package information."""
  version = __import__("fracmis").__version__
  click.echo(f"fracmis version: {version}")
  click.echo("Exact MIS solver for the pseudofractal scale-free web and the Sierpinski gasket")


@cli.command()
@family_option
@n_option
@click.option(
  "--format",
  "-f",
  "fmt",
  type=click.Choice(FORMATS),
  default=ExportFormat.EDGE_LIST.value,
  show_default=True,
  help="Export format",
)
@out_option
@cap_n_option
@click.pass_context
def generate(ctx, family, n, fmt, out, cap_n):
  """Build G_n or S_n and export it."""
  return dispatch(ctx, make_command(Subcommand.GENERATE, family, n, format=ExportFormat(fmt), out=out, cap_n=cap_n))


@cli.command()
@family_option
@n_option
@method_option()
@click.option("--classes", is_flag=True, default=False, help="Also report the value of every boundary class")
@out_option
@cap_n_option
@cap_vertices_option
@click.pass_context
def alpha(ctx, family, n, method, classes, out, cap_n, cap_vertices):
  """Independence number."""
  cmd = make_command(Subcommand.ALPHA, family, n, method, cap_n, cap_vertices, classes=classes, out=out)
  return dispatch(ctx, cmd)


@cli.command()
@family_option
@n_option
@method_option()
@out_option
@cap_n_option
@cap_vertices_option
@click.pass_context
def count(ctx, family, n, method, out, cap_n, cap_vertices):
  """Number of maximum independent sets."""
  return dispatch(ctx, make_command(Subcommand.COUNT, family, n, method, cap_n, cap_vertices, out=out))


@cli.command("enumerate")
@family_option
@n_option
@method_option(Method.ORACLE.value)
@click.option(
  "--limit",
  "-l",
  type=click.IntRange(min=1),
  default=DEFAULT_ENUMERATION_LIMIT,
  show_default=True,
  help="Most sets to list",
)
@out_option
@cap_n_option
@cap_vertices_option
@click.pass_context
def enumerate_sets(ctx, family, n, method, limit, out, cap_n, cap_vertices):
  """List maximum independent sets in lexicographic order (oracle only)."""
  cmd = make_command(Subcommand.ENUMERATE, family, n, method, cap_n, cap_vertices, limit=limit, out=out)
  return dispatch(ctx, cmd)


@cli.command()
@family_option
@n_option
@method_option()
@out_option
@cap_n_option
@cap_vertices_option
@click.pass_context
def witness(ctx, family, n, method, out, cap_n, cap_vertices):
  """One maximum independent set."""
  return dispatch(ctx, make_command(Subcommand.WITNESS, family, n, method, cap_n, cap_vertices, out=out))


@cli.command()
@family_option
@n_option
@method_option()
@out_option
@cap_n_option
@cap_vertices_option
@click.pass_context
def cover(ctx, family, n, method, out, cap_n, cap_vertices):
  """Minimum vertex cover size and witness."""
  return dispatch(ctx, make_command(Subcommand.COVER, family, n, method, cap_n, cap_vertices, out=out))


@cli.command()
@click.option(
  "--max-n",
  type=click.IntRange(min=2),
  default=DEFAULT_MAX_N,
  show_default=True,
  help="Largest generation for structural and oracle checks",
)
@click.option(
  "--workers",
  "-w",
  type=click.IntRange(min=1),
  default=DEFAULT_WORKERS,
  help=f"Number of parallel workers (default: {DEFAULT_WORKERS})",
)
@out_option
@cap_n_option
@cap_vertices_option
@click.pass_context
def verify(ctx, max_n, workers, out, cap_n, cap_vertices):
  """Run every cross-check and report pass/fail per check."""
  cmd = make_command(Subcommand.VERIFY, cap_n=cap_n, cap_vertices=cap_vertices, max_n=max_n, workers=workers, out=out)
  return dispatch(ctx, cmd)


@cli.command()
@family_option
@n_option
@out_option
@cap_n_option
@cap_vertices_option
@click.pass_context
def bench(ctx, family, n, out, cap_n, cap_vertices):
  """Wall times for generation, the DP and (within the caps) the oracle."""
  return dispatch(ctx, make_command(Subcommand.BENCH, family, n, cap_n=cap_n, cap_vertices=cap_vertices, out=out))


def parse_args(argv: list[str]) -> Command:
  """
  Parse an argument vector into a validated Command without running it.

  Raises click.UsageError (exit code 2) on invalid input; `--help` raises
  click.exceptions.Exit after printing usage.
  """
  try:
    result = cli.main(args=list(argv), prog_name="fracmis", standalone_mode=False, obj={"parse_only": True})
  except click.MissingParameter as e:
    # str() of a MissingParameter drops the flag name that format_message() carries
    raise click.UsageError(e.format_message(), ctx=e.ctx) from e
  if not isinstance(result, Command):
    raise click.exceptions.Exit(result or 0)
  return result


def main():
  """Main CLI function."""
  cli()


if __name__ == "__main__":
  main()
