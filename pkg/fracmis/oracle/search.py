"""
Exact, family-agnostic maximum independent set queries for graphs within the
oracle cap. These are the ground truth the decimation results are checked against.
"""

from itertools import islice
import logging
from weakref import WeakKeyDictionary

from fracmis.algebra import INFEASIBLE
from fracmis.algebra import ClassValue
from fracmis.errors import ArgumentError
from fracmis.errors import CapacityError
from fracmis.limits import DEFAULT_ORACLE_CAP
from fracmis.oracle.predicates import covers_all_edges
from fracmis.oracle.sets import GraphLike
from fracmis.oracle.sets import MisReport
from fracmis.oracle.sets import RestrictedQuery
from fracmis.oracle.sets import VertexCover
from fracmis.oracle.sets import VertexSet
from fracmis.oracle.solver import IndependenceSolver

logger = logging.getLogger(__name__)

_solvers: WeakKeyDictionary = WeakKeyDictionary()


def solver_for(graph: GraphLike, cap: int = DEFAULT_ORACLE_CAP) -> IndependenceSolver:
  """Solver for `graph`, reused across calls on the same graph object."""
  if graph.num_vertices > cap:
    raise CapacityError(
      "oracle vertex count",
      graph.num_vertices,
      cap,
      "use --method dp (decimation) for larger generations or raise --cap-vertices",
    )
  try:
    solver = _solvers.get(graph)
  except TypeError:
    return IndependenceSolver(graph.num_vertices, graph.edges)
  if solver is None:
    solver = IndependenceSolver(graph.num_vertices, graph.edges)
    _solvers[graph] = solver
  return solver


def max_independent_set(graph: GraphLike, cap: int = DEFAULT_ORACLE_CAP) -> MisReport:
  """Independence number and the lexicographically smallest maximum independent set."""
  solver = solver_for(graph, cap)
  alpha = solver.alpha()
  witness = next(solver.lex_sets(solver.full, alpha))
  solver.log_stats("max_independent_set")
  return MisReport(alpha=alpha, witness=VertexSet(witness))


def count_maximum_independent_sets(graph: GraphLike, cap: int = DEFAULT_ORACLE_CAP) -> int:
  solver = solver_for(graph, cap)
  return solver.count(solver.full, solver.alpha())


def enumerate_maximum_independent_sets(graph: GraphLike, limit: int, cap: int = DEFAULT_ORACLE_CAP) -> MisReport:
  """
  Up to `limit` maximum independent sets in lexicographic order.

  Args:
    graph: graph within the oracle cap
    limit: maximum number of sets to return
    cap: oracle vertex cap

  Returns:
    MisReport with the full count and `truncated` set when more sets exist.
  """
  if limit < 1:
    raise ArgumentError(f"limit must be positive, got {limit}")
  solver = solver_for(graph, cap)
  alpha = solver.alpha()
  found = [VertexSet(members) for members in islice(solver.lex_sets(solver.full, alpha), limit + 1)]
  truncated = len(found) > limit
  found = found[:limit]
  return MisReport(
    alpha=alpha,
    witness=found[0],
    count=solver.count(solver.full, alpha),
    enumeration=found,
    truncated=truncated,
  )


def _restricted(graph: GraphLike, query: RestrictedQuery, cap: int) -> tuple[IndependenceSolver, int | None]:
  query.required.check_range(graph.num_vertices)
  query.forbidden.check_range(graph.num_vertices)
  solver = solver_for(graph, cap)
  return solver, solver.restricted_mask(query.required.bitmask(), query.forbidden.bitmask())


def restricted_alpha(graph: GraphLike, query: RestrictedQuery, cap: int = DEFAULT_ORACLE_CAP) -> ClassValue:
  """Largest independent set honoring `query`, or INFEASIBLE when `required` is not independent."""
  solver, free = _restricted(graph, query, cap)
  if free is None:
    return INFEASIBLE
  return len(query.required) + solver.alpha(free)


def count_restricted_maximum(graph: GraphLike, query: RestrictedQuery, cap: int = DEFAULT_ORACLE_CAP) -> int:
  """Number of independent sets honoring `query` whose size equals restricted_alpha."""
  solver, free = _restricted(graph, query, cap)
  if free is None:
    return 0
  return solver.count(free, solver.alpha(free))


def min_vertex_cover(graph: GraphLike, cap: int = DEFAULT_ORACLE_CAP) -> VertexCover:
  """Minimum vertex cover as the complement of the maximum independent set witness."""
  report = max_independent_set(graph, cap)
  witness = report.witness.complement(graph.num_vertices)
  if not covers_all_edges(graph, witness):
    raise AssertionError("complement of a maximum independent set must cover every edge")
  return VertexCover(size=graph.num_vertices - report.alpha, witness=witness, verified=True)
