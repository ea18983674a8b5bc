"""
Explicit maximum independent sets and minimum vertex covers for any generation
within the build cap.
"""

import logging

import numpy as np

from fracmis.algebra import best_of
from fracmis.decimation.counting import maximizing_configs
from fracmis.decimation.merges import PATTERNS
from fracmis.decimation.merges import Pattern
from fracmis.decimation.tables import independence_number
from fracmis.decimation.tables import pattern_table
from fracmis.errors import CapacityError
from fracmis.errors import GenerationRangeError
from fracmis.graphs.builders import build
from fracmis.graphs.builders import gasket_level_maps
from fracmis.graphs.model import Family
from fracmis.graphs.model import vertex_count
from fracmis.limits import DEFAULT_BUILD_CAP
from fracmis.oracle.predicates import covers_all_edges
from fracmis.oracle.sets import VertexCover
from fracmis.oracle.sets import VertexSet

logger = logging.getLogger(__name__)


def _check_cap(n: int, cap: int) -> None:
  if n > cap:
    raise CapacityError("generation", n, cap, "witnesses list every vertex id; raise the cap with --cap-n")


def psw_mis_witness(n: int, cap: int = DEFAULT_BUILD_CAP) -> VertexSet:
  """The unique MIS of G_n: every vertex created in the last iteration."""
  if n < 2:
    raise GenerationRangeError("psw_mis_witness (G_1 has three maximum independent sets)", n, 2)
  _check_cap(n, cap)
  return VertexSet(np.arange(vertex_count(n - 1), vertex_count(n), dtype=np.int64))


def gasket_mis_witness(n: int, cap: int = DEFAULT_BUILD_CAP) -> VertexSet:
  """
  One MIS of S_n, built top-down: at each merge the first maximizing configuration
  is taken and each copy recurses into its induced pattern.
  """
  family = Family.SIERPINSKI_GASKET
  if n < 1:
    raise GenerationRangeError("gasket_mis_witness", n, 1)
  _check_cap(n, cap)

  level_maps = gasket_level_maps(n)
  memo: dict[tuple[int, Pattern], np.ndarray] = {}

  def local_witness(generation: int, pattern: Pattern) -> np.ndarray:
    key = (generation, pattern)
    if key in memo:
      return memo[key]
    if generation == 1:
      # S_1's outmost triple is (0, 1, 2), so positions are ids.
      ids = np.array(sorted(pattern), dtype=np.int64)
    else:
      config = maximizing_configs(family, generation, pattern)[0]
      maps = level_maps[generation - 2]
      ids = np.unique(
        np.concatenate(
          [
            id_map[local_witness(generation - 1, part)]
            for id_map, part in zip(maps, config.per_copy_class, strict=True)
          ]
        )
      )
    memo[key] = ids
    return ids

  table = pattern_table(family, n)
  alpha = best_of(table.values())
  top = next(p for p in PATTERNS if table[p] == alpha)
  witness = VertexSet(local_witness(n, top))
  if len(witness) != alpha:
    raise AssertionError(f"gasket witness has {len(witness)} vertices, expected {alpha}")
  logger.debug("gasket witness n=%d uses boundary pattern %s", n, sorted(top))
  return witness


def mis_witness(family: Family, n: int, cap: int = DEFAULT_BUILD_CAP) -> VertexSet:
  if family is Family.SCALE_FREE_WEB:
    return psw_mis_witness(n, cap)
  return gasket_mis_witness(n, cap)


def vertex_cover_witness(family: Family, n: int, cap: int = DEFAULT_BUILD_CAP) -> VertexCover:
  """
  Minimum vertex cover as the complement of the MIS witness. The size is exact
  for any n; the witness is built and checked against every edge only up to the
  build cap.
  """
  if n < 2:
    raise GenerationRangeError("vertex_cover_witness", n, 2)
  size = vertex_count(n) - independence_number(family, n)
  if n > cap:
    return VertexCover(size=size, witness=None, verified=False)

  graph = build(family, n, cap)
  witness = mis_witness(family, n, cap).complement(graph.num_vertices)
  if len(witness) != size or not covers_all_edges(graph, witness):
    raise AssertionError(f"{family.label} n={n}: complement of the MIS witness is not a minimum cover")
  return VertexCover(size=size, witness=witness, verified=True)
