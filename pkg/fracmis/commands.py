"""
Command objects and their execution, independent of the click surface.

`parse_args` (in `fracmis.cli`) turns an argument vector into a `Command`; `run`
executes it and returns a `ResultReport` together with the process exit code.
"""

from dataclasses import dataclass
from dataclasses import field
from dataclasses import fields
from enum import Enum
import logging
from pathlib import Path
import time

from fracmis.decimation import class_table
from fracmis.decimation import closed_alpha
from fracmis.decimation import closed_classes
from fracmis.decimation import closed_mis_count
from fracmis.decimation import closed_vertex_cover
from fracmis.decimation import independence_number
from fracmis.decimation import mis_count
from fracmis.decimation import mis_witness
from fracmis.decimation import psw_mis_witness
from fracmis.decimation import vertex_cover_witness
from fracmis.errors import ArgumentError
from fracmis.errors import CapacityError
from fracmis.graphs import ExportFormat
from fracmis.graphs import Family
from fracmis.graphs import Graph
from fracmis.graphs import build
from fracmis.graphs import edge_count
from fracmis.graphs import export_graph
from fracmis.graphs import vertex_count
from fracmis.helpers import class_value_string
from fracmis.helpers import count_document
from fracmis.helpers import decimal_string
from fracmis.limits import DEFAULT_LIMITS
from fracmis.limits import Limits
from fracmis.oracle import RestrictedQuery
from fracmis.oracle import count_maximum_independent_sets
from fracmis.oracle import enumerate_maximum_independent_sets
from fracmis.oracle import max_independent_set
from fracmis.oracle import min_vertex_cover
from fracmis.oracle import restricted_alpha
from fracmis.transformers import JSONTransformer
from fracmis.verify import verify_suite
from fracmis.writers import LocalWriter
from fracmis.writers import StreamWriter
from fracmis.writers import writer_for

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_LIMIT = 100
DEFAULT_MAX_N = 4

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class Subcommand(Enum):
  GENERATE = "generate"
  ALPHA = "alpha"
  COUNT = "count"
  ENUMERATE = "enumerate"
  WITNESS = "witness"
  COVER = "cover"
  VERIFY = "verify"
  BENCH = "bench"


class Method(Enum):
  DP = "dp"
  CLOSED = "closed"
  ORACLE = "oracle"


@dataclass(frozen=True)
class Command:
  subcommand: Subcommand
  family: Family | None = None
  n: int | None = None
  method: Method = Method.DP
  format: ExportFormat = ExportFormat.EDGE_LIST
  limit: int | None = None
  out: str | None = None
  classes: bool = False
  max_n: int = DEFAULT_MAX_N
  workers: int = 1
  limits: Limits = DEFAULT_LIMITS


@dataclass
class ResultReport:
  """
  One report document per invocation. Every integer that can outgrow 64 bits is a
  decimal string; fields left as None are omitted from the serialized report.
  """

  family: str | None = None
  n: int | None = None
  method: str | None = None
  format: str | None = None
  num_vertices: str | None = None
  num_edges: str | None = None
  alpha: str | None = None
  classes: dict[str, str | None] | None = None
  count: dict[str, str | None] | None = None
  witness: list[int] | None = None
  cover: dict | None = None
  enumeration: list[list[int]] | None = None
  truncated: bool | None = None
  checks: list[dict] | None = None
  passed: bool | None = None
  timings_ms: dict[str, int] | None = None
  path: str | None = None
  elapsed_ms: int | None = field(default=None, compare=False)

  def to_dict(self) -> dict:
    return {f.name: getattr(self, f.name) for f in fields(self) if getattr(self, f.name) is not None}


def _elapsed_ms(started_ns: int) -> int:
  return (time.perf_counter_ns() - started_ns) // 1_000_000


def _header(cmd: Command) -> ResultReport:
  return ResultReport(
    family=cmd.family.label,
    n=cmd.n,
    method=cmd.method.value,
    num_vertices=str(vertex_count(cmd.n)),
    num_edges=str(edge_count(cmd.n)),
  )


def _oracle_graph(cmd: Command) -> Graph:
  """Build the graph for an oracle query, refusing up front when it is over the vertex cap."""
  num_vertices = vertex_count(cmd.n)
  if num_vertices > cmd.limits.oracle_cap:
    raise CapacityError(
      "vertex count",
      num_vertices,
      cmd.limits.oracle_cap,
      "use --method dp (decimation) or raise --cap-vertices",
    )
  return build(cmd.family, cmd.n, cmd.limits.build_cap)


def _class_document(values) -> dict[str, str | None]:
  return {str(size): class_value_string(value) for size, value in enumerate(values)}


def _oracle_classes(cmd: Command, graph: Graph) -> tuple:
  # Classes are symmetric in the boundary positions, so class k is queried with positions 0..k-1.
  sizes = range(2) if cmd.family is Family.SCALE_FREE_WEB else range(4)
  return tuple(
    restricted_alpha(graph, RestrictedQuery.for_pattern(graph.boundary, range(size)), cmd.limits.oracle_cap)
    for size in sizes
  )


def run_alpha(cmd: Command) -> ResultReport:
  report = _header(cmd)
  match cmd.method:
    case Method.DP:
      table = class_table(cmd.family, cmd.n)
      alpha, classes = independence_number(cmd.family, cmd.n), table.classes
    case Method.CLOSED:
      alpha = closed_alpha(cmd.family, cmd.n)
      classes = closed_classes(cmd.family, cmd.n) if cmd.classes else None
    case Method.ORACLE:
      graph = _oracle_graph(cmd)
      alpha = max_independent_set(graph, cmd.limits.oracle_cap).alpha
      classes = _oracle_classes(cmd, graph) if cmd.classes else None
  report.alpha = decimal_string(alpha, cmd.limits.max_digits)
  if cmd.classes:
    report.classes = _class_document(classes)
  return report


def run_count(cmd: Command) -> ResultReport:
  report = _header(cmd)
  match cmd.method:
    case Method.DP:
      alpha, count = independence_number(cmd.family, cmd.n), mis_count(cmd.family, cmd.n)
    case Method.CLOSED:
      alpha, count = closed_alpha(cmd.family, cmd.n), closed_mis_count(cmd.family, cmd.n)
    case Method.ORACLE:
      graph = _oracle_graph(cmd)
      alpha = max_independent_set(graph, cmd.limits.oracle_cap).alpha
      count = count_maximum_independent_sets(graph, cmd.limits.oracle_cap)
  report.alpha = decimal_string(alpha, cmd.limits.max_digits)
  report.count = count_document(count, cmd.limits.max_digits)
  return report


def run_enumerate(cmd: Command) -> ResultReport:
  if cmd.method is not Method.ORACLE:
    raise ArgumentError("enumerate lists sets with the brute-force oracle only; use --method oracle")
  limit = cmd.limit or DEFAULT_ENUMERATION_LIMIT
  result = enumerate_maximum_independent_sets(_oracle_graph(cmd), limit, cmd.limits.oracle_cap)

  report = _header(cmd)
  report.alpha = str(result.alpha)
  report.count = count_document(result.count, cmd.limits.max_digits)
  report.enumeration = [members.to_list() for members in result.enumeration]
  report.truncated = result.truncated
  return report


def run_witness(cmd: Command) -> ResultReport:
  match cmd.method:
    case Method.DP:
      witness = mis_witness(cmd.family, cmd.n, cmd.limits.build_cap)
    case Method.CLOSED:
      if cmd.family is not Family.SCALE_FREE_WEB:
        raise ArgumentError("the gasket has no closed-form maximum independent set; use --method dp")
      witness = psw_mis_witness(cmd.n, cmd.limits.build_cap)
    case Method.ORACLE:
      witness = max_independent_set(_oracle_graph(cmd), cmd.limits.oracle_cap).witness

  report = _header(cmd)
  report.alpha = str(len(witness))
  report.witness = witness.to_list()
  return report


def run_cover(cmd: Command) -> ResultReport:
  match cmd.method:
    case Method.DP:
      cover = vertex_cover_witness(cmd.family, cmd.n, cmd.limits.build_cap)
      size, witness = cover.size, cover.witness
    case Method.CLOSED:
      size, witness = closed_vertex_cover(cmd.family, cmd.n), None
    case Method.ORACLE:
      cover = min_vertex_cover(_oracle_graph(cmd), cmd.limits.oracle_cap)
      size, witness = cover.size, cover.witness

  report = _header(cmd)
  report.cover = {
    "size": decimal_string(size, cmd.limits.max_digits),
    "witness": witness.to_list() if witness is not None else None,
  }
  return report


def run_generate(cmd: Command) -> ResultReport | None:
  graph = build(cmd.family, cmd.n, cmd.limits.build_cap)
  logger.debug("built %s n=%d: %d vertices, %d edges", cmd.family.label, cmd.n, graph.num_vertices, graph.num_edges)
  if cmd.out is None:
    StreamWriter().write(export_graph(graph, cmd.format))
    return None

  path = LocalWriter(cmd.out).write(export_graph(graph, cmd.format))
  return ResultReport(
    family=cmd.family.label,
    n=cmd.n,
    format=cmd.format.value,
    num_vertices=str(graph.num_vertices),
    num_edges=str(graph.num_edges),
    path=str(path),
  )


def run_verify(cmd: Command) -> ResultReport:
  results = verify_suite(cmd.max_n, limits=cmd.limits, workers=cmd.workers)
  failed = [result.name for result in results if not result.passed]
  if failed:
    logger.debug("%d of %d checks failed: %s", len(failed), len(results), failed)
  return ResultReport(
    checks=[{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
    passed=not failed,
  )


def run_bench(cmd: Command) -> ResultReport:
  timings = {}

  if cmd.n <= cmd.limits.build_cap:
    started = time.perf_counter_ns()
    build(cmd.family, cmd.n, cmd.limits.build_cap)
    timings["generate"] = _elapsed_ms(started)

  started = time.perf_counter_ns()
  alpha = independence_number(cmd.family, cmd.n)
  class_table(cmd.family, cmd.n)
  mis_count(cmd.family, cmd.n)
  timings["dp"] = _elapsed_ms(started)

  if cmd.n <= cmd.limits.build_cap and vertex_count(cmd.n) <= cmd.limits.oracle_cap:
    graph = build(cmd.family, cmd.n, cmd.limits.build_cap)
    started = time.perf_counter_ns()
    max_independent_set(graph, cmd.limits.oracle_cap)
    count_maximum_independent_sets(graph, cmd.limits.oracle_cap)
    timings["oracle"] = _elapsed_ms(started)
  else:
    logger.debug("oracle skipped: %s n=%d is over the caps", cmd.family.label, cmd.n)

  report = _header(cmd)
  report.alpha = decimal_string(alpha, cmd.limits.max_digits)
  report.timings_ms = timings
  return report


RUNNERS = {
  Subcommand.GENERATE: run_generate,
  Subcommand.ALPHA: run_alpha,
  Subcommand.COUNT: run_count,
  Subcommand.ENUMERATE: run_enumerate,
  Subcommand.WITNESS: run_witness,
  Subcommand.COVER: run_cover,
  Subcommand.VERIFY: run_verify,
  Subcommand.BENCH: run_bench,
}


def run(cmd: Command) -> tuple[ResultReport | None, int]:
  """
  Execute a command.

  Returns the report (None when `generate` streamed its export to stdout) and the
  exit code: 0 on success, 1 when a verification check failed. Capacity, range and
  argument errors propagate as `FracmisError`.
  """
  started = time.perf_counter_ns()
  report = RUNNERS[cmd.subcommand](cmd)
  if report is None:
    return None, EXIT_OK

  report.elapsed_ms = _elapsed_ms(started)
  exit_code = EXIT_FAILED if report.passed is False else EXIT_OK
  return report, exit_code


def emit_report(report: ResultReport, out: str | Path | None = None) -> str | Path:
  """Serialize a report as JSON to `out`, or to stdout when no path is given."""
  document = JSONTransformer().transform(report.to_dict())
  return writer_for(out).write(document)
