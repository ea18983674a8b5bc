"""
Cross-check suite: structural invariants of the generated graphs, generic DP
against transcribed recurrences and closed forms, and DP against the brute-force
oracle at small generations.
"""

import numpy as np

from fracmis.algebra import INFEASIBLE
from fracmis.algebra import DyadicCount
from fracmis.decimation.closed_forms import closed_alpha
from fracmis.decimation.closed_forms import closed_classes
from fracmis.decimation.closed_forms import closed_mis_count
from fracmis.decimation.closed_forms import closed_vertex_cover
from fracmis.decimation.closed_forms import gasket_count_exponent
from fracmis.decimation.counting import ALL_OUTER
from fracmis.decimation.counting import ONLY_A
from fracmis.decimation.counting import gasket_count_pair
from fracmis.decimation.counting import mis_count
from fracmis.decimation.counting import pattern_counts
from fracmis.decimation.merges import PATTERNS
from fracmis.decimation.merges import pattern_label
from fracmis.decimation.recurrences import STANDARD_RECURRENCES
from fracmis.decimation.recurrences import RecurrenceSet
from fracmis.decimation.tables import class_values
from fracmis.decimation.tables import gasket_class_table
from fracmis.decimation.tables import independence_number
from fracmis.decimation.tables import pattern_table
from fracmis.decimation.tables import psw_class_table
from fracmis.decimation.witnesses import mis_witness
from fracmis.decimation.witnesses import vertex_cover_witness
from fracmis.graphs.builders import build
from fracmis.graphs.export import ExportFormat
from fracmis.graphs.export import export_graph
from fracmis.graphs.model import Family
from fracmis.graphs.model import Graph
from fracmis.graphs.model import degree_multiset
from fracmis.graphs.model import edge_count
from fracmis.graphs.model import vertex_count
from fracmis.limits import DEFAULT_LIMITS
from fracmis.limits import Limits
from fracmis.oracle.predicates import covers_all_edges
from fracmis.oracle.predicates import is_independent
from fracmis.oracle.predicates import is_maximal_independent
from fracmis.oracle.search import count_maximum_independent_sets
from fracmis.oracle.search import count_restricted_maximum
from fracmis.oracle.search import enumerate_maximum_independent_sets
from fracmis.oracle.search import max_independent_set
from fracmis.oracle.search import min_vertex_cover
from fracmis.oracle.search import restricted_alpha
from fracmis.oracle.sets import RestrictedQuery
from fracmis.readers.edgelist import read_edge_list
from fracmis.transformers.edgelist import EdgeListTransformer
from fracmis.verify.registry import CheckRegistry
from fracmis.verify.registry import CheckResult

PSW = Family.SCALE_FREE_WEB
GASKET = Family.SIERPINSKI_GASKET
FAMILIES = (PSW, GASKET)

CLOSED_FORM_HORIZON = 64
ORACLE_HORIZON = 4


def expected_degrees(family: Family, n: int) -> dict[int, int]:
  if family is PSW:
    degrees = {2**n: 3}
    for iteration in range(2, n + 1):
      degrees[2 ** (n - iteration + 1)] = 3 ** (iteration - 1)
    return degrees
  if n == 1:
    return {2: 3}
  return {2: 3, 4: vertex_count(n) - 3}


def _adjacent(graph: Graph, u: int, v: int) -> bool:
  low, high = min(u, v), max(u, v)
  return bool(np.any((graph.edges[:, 0] == low) & (graph.edges[:, 1] == high)))


def check_structure(family: Family, n: int, limits: Limits) -> str:
  graph = build(family, n, limits.build_cap)
  edges = graph.edges

  assert graph.num_vertices == vertex_count(n), f"N={graph.num_vertices}, expected {vertex_count(n)}"
  assert graph.num_edges == edge_count(n), f"E={graph.num_edges}, expected {edge_count(n)}"
  assert np.all(edges[:, 0] < edges[:, 1]), "edge rows must be (u, v) with u < v, no self-loops"
  assert edges.max() < graph.num_vertices, "edge endpoint out of range"
  assert np.unique(edges, axis=0).shape[0] == graph.num_edges, "duplicate edge"

  a, b, c = graph.boundary
  pairs = [(a, b), (a, c), (b, c)]
  if family is PSW or n == 1:
    assert all(_adjacent(graph, u, v) for u, v in pairs), "boundary vertices must be pairwise adjacent"
  else:
    assert not any(_adjacent(graph, u, v) for u, v in pairs), "outmost vertices must be pairwise non-adjacent"

  assert graph.birth.min() >= 1 and graph.birth.max() == n, "birth values must lie in 1..n"
  assert np.flatnonzero(graph.birth == 1).tolist() == [0, 1, 2], "exactly the triangle has birth 1"
  if family is PSW:
    same_birth = graph.birth[edges[:, 0]] == graph.birth[edges[:, 1]]
    assert not np.any(same_birth & (graph.birth[edges[:, 0]] >= 2)), "same-birth vertices must be non-adjacent"

  degrees = degree_multiset(graph)
  assert degrees.entries == expected_degrees(family, n), f"degree multiset {degrees.entries}"
  assert degrees.degree_sum() == 2 * graph.num_edges

  assert graph.same_edges(build(family, n, limits.build_cap)), "rebuild produced a different edge list"
  exported = export_graph(graph, ExportFormat.EDGE_LIST)
  assert EdgeListTransformer().transform(read_edge_list(exported)) == exported, "edge list round trip differs"

  return f"N={graph.num_vertices} E={graph.num_edges} degrees={degrees.entries}"


def check_psw_closed_forms(horizon: int) -> str:
  for n in range(1, horizon + 1):
    alpha0, alpha1 = class_values(PSW, pattern_table(PSW, n))
    alpha = independence_number(PSW, n)
    assert alpha == closed_alpha(PSW, n), f"n={n}: alpha {alpha} != {closed_alpha(PSW, n)}"
    assert vertex_count(n) - alpha == closed_vertex_cover(PSW, n), f"n={n}: cover size"
    if n >= 2:
      assert (alpha0, alpha1) == closed_classes(PSW, n), f"n={n}: classes {(alpha0, alpha1)}"
      assert alpha1 < alpha0, f"n={n}: alpha1={alpha1} is not below alpha0={alpha0}"
  return f"n=1..{horizon}"


def check_psw_recursions(horizon: int) -> str:
  for n in range(2, horizon):
    alpha0, alpha1 = class_values(PSW, pattern_table(PSW, n))
    next0, next1 = class_values(PSW, pattern_table(PSW, n + 1))
    assert next0 == 3 * alpha0, f"n={n}: alpha_(n+1) != 3 alpha_n"
    assert next1 == 2 * alpha1 + 3 ** (n - 1) - 1, f"n={n}: alpha1_(n+1) != 2 alpha1_n + 3^(n-1) - 1"
  return f"n=2..{horizon}"


def check_gasket_closed_forms(horizon: int) -> str:
  for n in range(2, horizon + 1):
    classes = class_values(GASKET, pattern_table(GASKET, n))
    alpha = independence_number(GASKET, n)
    assert classes == closed_classes(GASKET, n), f"n={n}: classes {classes}"
    assert alpha == classes[3] == closed_alpha(GASKET, n), f"n={n}: alpha {alpha}"
    assert classes[0] + 1 == classes[1] == classes[2] == classes[3] - 1, f"n={n}: class chain {classes}"
    assert vertex_count(n) - alpha == closed_vertex_cover(GASKET, n), f"n={n}: cover size"
    if n < horizon:
      assert independence_number(GASKET, n + 1) == 3 * alpha - 3, f"n={n}: alpha_(n+1) != 3 alpha_n - 3"
  return f"n=2..{horizon}"


def check_gasket_counts(horizon: int) -> str:
  previous = None
  for n in range(2, horizon + 1):
    counts = pattern_counts(GASKET, n, (ALL_OUTER, ONLY_A))
    x, y = counts[ALL_OUTER], counts[ONLY_A]
    assert x == y, f"n={n}: x != y"
    assert x.is_power_of_two and x.exponent == gasket_count_exponent(n), f"n={n}: x = {x!r}"
    assert mis_count(GASKET, n) == closed_mis_count(GASKET, n), f"n={n}: MIS count"
    if previous is not None:
      assert x == DyadicCount.of(2) * previous**3, f"n={n}: x_n != 2 x_(n-1)^3"
    previous = x
  return f"n=2..{horizon}, x_{horizon} = 2^{gasket_count_exponent(horizon)}"


def check_psw_counts(horizon: int) -> str:
  assert mis_count(PSW, 1) == 3, "G_1 has three maximum independent sets"
  for n in range(2, horizon + 1):
    assert mis_count(PSW, n) == closed_mis_count(PSW, n), f"n={n}: MIS not unique"
  return f"n=1..{horizon}"


def check_vertex_recursion(horizon: int) -> str:
  for n in range(1, horizon):
    assert vertex_count(n + 1) == 3 * vertex_count(n) - 3, f"n={n}"
  return f"n=1..{horizon}"


def check_gasket_count_base() -> str:
  pair = gasket_count_pair(2)
  assert pair.x == 1 and pair.y == 1, f"x_2={pair.x!r} y_2={pair.y!r}"
  return "x_2 = y_2 = 1"


def check_oracle_classes(family: Family, n: int, limits: Limits) -> str:
  graph = build(family, n, limits.build_cap)
  report = max_independent_set(graph, limits.oracle_cap)
  assert report.alpha == independence_number(family, n), f"oracle alpha {report.alpha}"

  table = pattern_table(family, n)
  for pattern in PATTERNS:
    query = RestrictedQuery.for_pattern(graph.boundary, pattern)
    oracle = restricted_alpha(graph, query, limits.oracle_cap)
    expected = table[pattern]
    assert oracle == expected or (oracle is INFEASIBLE and expected is INFEASIBLE), (
      f"pattern {pattern_label(pattern)}: oracle {oracle}, DP {expected}"
    )
  return f"alpha={report.alpha}, 8 boundary patterns agree"


def check_oracle_counts(family: Family, n: int, limits: Limits) -> str:
  graph = build(family, n, limits.build_cap)
  total = count_maximum_independent_sets(graph, limits.oracle_cap)
  assert mis_count(family, n) == total, f"DP count {mis_count(family, n)!r}, oracle {total}"

  table = pattern_table(family, n)
  feasible = [p for p in PATTERNS if table[p] is not INFEASIBLE]
  counts = pattern_counts(family, n, feasible)
  for pattern in feasible:
    oracle = count_restricted_maximum(graph, RestrictedQuery.for_pattern(graph.boundary, pattern), limits.oracle_cap)
    assert counts[pattern] == oracle, f"pattern {pattern_label(pattern)}: DP {counts[pattern]!r}, oracle {oracle}"
  return f"count={total}"


def check_oracle_witnesses(family: Family, n: int, limits: Limits) -> str:
  graph = build(family, n, limits.build_cap)
  alpha = independence_number(family, n)
  witness = mis_witness(family, n, limits.build_cap)
  assert len(witness) == alpha, f"witness size {len(witness)}"
  assert is_independent(graph, witness), "witness is not independent"
  assert is_maximal_independent(graph, witness), "witness is not maximal"

  enumeration = enumerate_maximum_independent_sets(graph, 64, limits.oracle_cap)
  assert witness in enumeration.enumeration, "witness missing from the oracle enumeration"
  if family is PSW:
    assert enumeration.enumeration == [witness], "psw MIS is not unique"
  return f"witness={witness.to_list()}"


def check_gallai(family: Family, n: int, limits: Limits) -> str:
  graph = build(family, n, limits.build_cap)
  cover = min_vertex_cover(graph, limits.oracle_cap)
  alpha = max_independent_set(graph, limits.oracle_cap).alpha
  assert cover.size + alpha == graph.num_vertices, "alpha + cover != N"
  assert covers_all_edges(graph, cover.witness), "oracle cover misses an edge"
  if n >= 2:
    dp_cover = vertex_cover_witness(family, n, limits.build_cap)
    assert dp_cover.size == cover.size and dp_cover.verified, "DP cover differs from oracle cover size"
  return f"cover={cover.size}"


def build_registry(
  max_n: int,
  recurrences: RecurrenceSet = STANDARD_RECURRENCES,
  limits: Limits = DEFAULT_LIMITS,
) -> CheckRegistry:
  registry = CheckRegistry()
  horizon = max(CLOSED_FORM_HORIZON, max_n)

  for family in FAMILIES:
    for n in range(1, min(max_n, limits.build_cap) + 1):
      registry.add(f"{family.label} n={n} structure", lambda f=family, k=n: check_structure(f, k, limits))

  registry.add(
    f"psw generic DP equals transcribed recurrence n<={horizon}",
    lambda: _table_detail(psw_class_table(horizon, recurrences)),
  )
  registry.add(
    f"gasket generic DP equals transcribed recurrence n<={horizon}",
    lambda: _table_detail(gasket_class_table(horizon, recurrences)),
  )
  registry.add(
    f"gasket count DP equals transcribed recurrence n<={horizon}",
    lambda: f"x_{horizon} = 2^{gasket_count_pair(horizon, recurrences).x.exponent}",
  )
  registry.add(f"psw closed forms and alpha1 < alpha0 n<={horizon}", lambda: check_psw_closed_forms(horizon))
  registry.add(f"psw alpha recursions n<={horizon}", lambda: check_psw_recursions(horizon))
  registry.add(f"gasket closed forms and class chain n<={horizon}", lambda: check_gasket_closed_forms(horizon))
  registry.add(f"gasket counts are 2^((3^(n-2)-1)/2) n<={horizon}", lambda: check_gasket_counts(horizon))
  registry.add(f"psw MIS unique n<={horizon}", lambda: check_psw_counts(horizon))
  registry.add(f"vertex counts N_(n+1) = 3 N_n - 3 n<={horizon}", lambda: check_vertex_recursion(horizon))
  registry.add("gasket count n=2 equals 1", check_gasket_count_base)

  for family in FAMILIES:
    for n in range(1, min(max_n, ORACLE_HORIZON) + 1):
      if vertex_count(n) > limits.oracle_cap or n > limits.build_cap:
        continue
      registry.add(
        f"{family.label} n={n} oracle alpha per class", lambda f=family, k=n: check_oracle_classes(f, k, limits)
      )
      registry.add(f"{family.label} n={n} oracle counts", lambda f=family, k=n: check_oracle_counts(f, k, limits))
      if family is GASKET or n >= 2:
        registry.add(f"{family.label} n={n} oracle witness", lambda f=family, k=n: check_oracle_witnesses(f, k, limits))
      registry.add(f"{family.label} n={n} oracle vertex cover", lambda f=family, k=n: check_gallai(f, k, limits))

  return registry


def _table_detail(table) -> str:
  return f"n={table.generation} classes={tuple(str(value) for value in table.classes)}"


def verify_suite(
  max_n: int = ORACLE_HORIZON,
  recurrences: RecurrenceSet = STANDARD_RECURRENCES,
  limits: Limits = DEFAULT_LIMITS,
  workers: int = 1,
) -> list[CheckResult]:
  """
  Run every cross-check up to `max_n` and return (name, passed, detail) results
  in a fixed order. Failures are reported, not raised.
  """
  if max_n < 2:
    raise ValueError(f"max_n must be at least 2, got {max_n}")
  return build_registry(max_n, recurrences, limits).run(workers)
