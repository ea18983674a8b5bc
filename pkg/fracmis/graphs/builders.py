"""
Deterministic generators for the two families.

Labeling is canonical so witnesses and exports are reproducible:

- psw: vertices 0, 1, 2 are the initial triangle with edges (0,1), (0,2), (1,2).
  At each later iteration the whole edge list is scanned in stored order and every
  edge (u, v) spawns the next free id w with edges (u, w), (v, w) appended.
- gasket: three copies of S_k are merged with B1=A2, C1=A3, C2=B3. Ids are handed
  out scanning copies 1, 2, 3 and their local ids in order; an identified vertex
  keeps the id of its earlier member. The new outmost triple is (A1, B2, C3).
"""

from functools import lru_cache
import logging

import numpy as np

from fracmis.errors import CapacityError
from fracmis.errors import GenerationRangeError
from fracmis.graphs.model import Family
from fracmis.graphs.model import Graph
from fracmis.limits import DEFAULT_BUILD_CAP

logger = logging.getLogger(__name__)

TRIANGLE = np.array([[0, 1], [0, 2], [1, 2]], dtype=np.int64)


def _check_generation(name: str, n: int, cap: int) -> None:
  if n < 1:
    raise GenerationRangeError(name, n, 1)
  if n > cap:
    raise CapacityError("generation", n, cap, "raise the cap with --cap-n")


def build_psw(n: int, cap: int = DEFAULT_BUILD_CAP) -> Graph:
  """Build the pseudofractal scale-free web G_n by edge expansion."""
  _check_generation("build_psw", n, cap)

  edges = TRIANGLE.copy()
  births = [np.ones(3, dtype=np.int64)]
  num_vertices = 3

  for iteration in range(2, n + 1):
    spawned = num_vertices + np.arange(edges.shape[0], dtype=np.int64)
    added = np.empty((2 * edges.shape[0], 2), dtype=np.int64)
    added[0::2, 0] = edges[:, 0]
    added[0::2, 1] = spawned
    added[1::2, 0] = edges[:, 1]
    added[1::2, 1] = spawned
    edges = np.concatenate([edges, added])
    births.append(np.full(spawned.shape[0], iteration, dtype=np.int64))
    num_vertices += spawned.shape[0]

  logger.debug("built psw n=%d with %d vertices and %d edges", n, num_vertices, edges.shape[0])
  return Graph(
    family=Family.SCALE_FREE_WEB,
    generation=n,
    num_vertices=num_vertices,
    edges=edges,
    birth=np.concatenate(births),
    boundary=(0, 1, 2),
  )


def gasket_copy_maps(num_vertices: int, boundary: tuple[int, int, int]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
  """
  Local-to-global id maps of the three copies of S_k inside S_{k+1}.

  Args:
    num_vertices: N_k, the vertex count of one copy
    boundary: the outmost triple (A, B, C) of S_k

  Returns:
    Three arrays of length N_k; entry i is the S_{k+1} id of local vertex i of that copy.
  """
  a, b, c = boundary
  local = np.arange(num_vertices, dtype=np.int64)

  first = local.copy()

  second = num_vertices + local - (local > a)
  second[a] = first[b]

  third = 2 * num_vertices - 1 + local - (local > a) - (local > b)
  third[a] = first[c]
  third[b] = second[c]

  return first, second, third


@lru_cache(maxsize=None)
def _gasket_levels(n: int) -> tuple[tuple[int, tuple[int, int, int]], ...]:
  levels = [(3, (0, 1, 2))]
  for _ in range(1, n):
    num_vertices, boundary = levels[-1]
    first, second, third = gasket_copy_maps(num_vertices, boundary)
    a, b, c = boundary
    levels.append((3 * num_vertices - 3, (int(first[a]), int(second[b]), int(third[c]))))
  return tuple(levels)


def gasket_boundary(n: int) -> tuple[int, int, int]:
  """Outmost triple of S_n under the canonical labeling, without building S_n."""
  if n < 1:
    raise GenerationRangeError("gasket_boundary", n, 1)
  return _gasket_levels(n)[-1][1]


def gasket_level_maps(n: int) -> list[tuple[np.ndarray, np.ndarray, np.ndarray]]:
  """Copy maps for every merge level 1 -> 2, ..., (n-1) -> n."""
  return [gasket_copy_maps(num_vertices, boundary) for num_vertices, boundary in _gasket_levels(n)[:-1]]


def build_gasket(n: int, cap: int = DEFAULT_BUILD_CAP) -> Graph:
  """Build the Sierpinski gasket S_n by repeatedly merging three copies."""
  _check_generation("build_gasket", n, cap)

  edges = TRIANGLE.copy()
  birth = np.ones(3, dtype=np.int64)
  num_vertices = 3
  boundary = (0, 1, 2)

  for generation in range(2, n + 1):
    maps = gasket_copy_maps(num_vertices, boundary)
    edges = np.sort(np.concatenate([id_map[edges] for id_map in maps]), axis=1)
    fresh = 2 * num_vertices - 3
    birth = np.concatenate([birth, np.full(fresh, generation, dtype=np.int64)])
    a, b, c = boundary
    boundary = (int(maps[0][a]), int(maps[1][b]), int(maps[2][c]))
    num_vertices = 3 * num_vertices - 3

  logger.debug("built gasket n=%d with %d vertices and %d edges", n, num_vertices, edges.shape[0])
  return Graph(
    family=Family.SIERPINSKI_GASKET,
    generation=n,
    num_vertices=num_vertices,
    edges=edges,
    birth=birth,
    boundary=boundary,
  )


BUILDERS = {
  Family.SCALE_FREE_WEB: build_psw,
  Family.SIERPINSKI_GASKET: build_gasket,
}


def build(family: Family, n: int, cap: int = DEFAULT_BUILD_CAP) -> Graph:
  return BUILDERS[family](n, cap)
