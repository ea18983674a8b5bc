"""
Bitset branch and bound over vertex subsets.

Subgraphs are Python ints used as bitmasks over vertex ids. The search branches on
the highest-degree remaining vertex (lowest id on ties): include it and delete its
closed neighborhood, or exclude it. A greedy independent set seeds the lower bound
and the number of remaining vertices is the upper bound.
"""

from collections.abc import Iterator
import logging
from math import comb

import numpy as np

from fracmis.errors import ArgumentError

logger = logging.getLogger(__name__)


def iter_bits(mask: int) -> Iterator[int]:
  """Set bit positions of `mask` in increasing order."""
  while mask:
    low = mask & -mask
    yield low.bit_length() - 1
    mask ^= low


class IndependenceSolver:
  """Exact independence queries on one fixed graph, with per-subgraph memoization."""

  def __init__(self, num_vertices: int, edges):
    self.num_vertices = num_vertices
    self.full = (1 << num_vertices) - 1

    neighbors = [0] * num_vertices
    for u, v in np.asarray(edges, dtype=np.int64).reshape(-1, 2).tolist():
      if u == v:
        raise ArgumentError(f"Self-loop at vertex {u}")
      if not (0 <= u < num_vertices and 0 <= v < num_vertices):
        raise ArgumentError(f"Edge ({u}, {v}) has an endpoint outside 0..{num_vertices - 1}")
      neighbors[u] |= 1 << v
      neighbors[v] |= 1 << u

    self.neighbors = neighbors
    self.closed = [mask | (1 << vertex) for vertex, mask in enumerate(neighbors)]
    self.nodes = 0
    self._alpha: dict[int, int] = {}
    self._count: dict[tuple[int, int], int] = {}

  def is_independent_mask(self, mask: int) -> bool:
    return all(not self.neighbors[v] & mask for v in iter_bits(mask))

  def _pivot(self, mask: int) -> tuple[int, int]:
    best, best_degree = -1, -1
    for vertex in iter_bits(mask):
      degree = (self.neighbors[vertex] & mask).bit_count()
      if degree > best_degree:
        best, best_degree = vertex, degree
    return best, best_degree

  def _greedy(self, mask: int) -> int:
    size = 0
    while mask:
      vertex = min(iter_bits(mask), key=lambda v: (self.neighbors[v] & mask).bit_count())
      mask &= ~self.closed[vertex]
      size += 1
    return size

  def _branch(self, mask: int, size: int, best: int) -> int:
    self.nodes += 1
    if size + mask.bit_count() <= best:
      return best
    known = self._alpha.get(mask)
    if known is not None:
      return max(best, size + known)
    if not mask:
      return size

    vertex, degree = self._pivot(mask)
    if degree == 0:
      return size + mask.bit_count()

    best = self._branch(mask & ~self.closed[vertex], size + 1, best)
    return self._branch(mask & ~(1 << vertex), size, best)

  def alpha(self, mask: int | None = None) -> int:
    """Independence number of the subgraph induced by `mask` (whole graph by default)."""
    if mask is None:
      mask = self.full
    known = self._alpha.get(mask)
    if known is not None:
      return known
    value = self._branch(mask, 0, self._greedy(mask))
    self._alpha[mask] = value
    return value

  def count(self, mask: int, size: int) -> int:
    """
    Number of independent sets of exactly `size` vertices inside `mask`.

    Branches are cut only when the subgraph cannot reach `size` at all, so
    co-optimal branches are never discarded.
    """
    if size == 0:
      return 1
    if mask.bit_count() < size:
      return 0
    key = (mask, size)
    known = self._count.get(key)
    if known is not None:
      return known
    if self.alpha(mask) < size:
      result = 0
    else:
      vertex, degree = self._pivot(mask)
      if degree == 0:
        result = comb(mask.bit_count(), size)
      else:
        result = self.count(mask & ~self.closed[vertex], size - 1) + self.count(mask & ~(1 << vertex), size)
    self._count[key] = result
    return result

  def lex_sets(self, mask: int, size: int, prefix: tuple[int, ...] = ()) -> Iterator[tuple[int, ...]]:
    """
    Independent sets of exactly `size` vertices inside `mask`, extending `prefix`,
    in lexicographic order of their sorted id tuples.
    """
    if size == 0:
      yield prefix
      return
    if mask.bit_count() < size or self.alpha(mask) < size:
      return
    low = mask & -mask
    vertex = low.bit_length() - 1
    yield from self.lex_sets(mask & ~self.closed[vertex], size - 1, prefix + (vertex,))
    yield from self.lex_sets(mask & ~low, size, prefix)

  def restricted_mask(self, required: int, forbidden: int) -> int | None:
    """Free vertices left once `required` is taken and `forbidden` removed; None if `required` is not independent."""
    if not self.is_independent_mask(required):
      return None
    mask = self.full & ~forbidden
    for vertex in iter_bits(required):
      mask &= ~self.closed[vertex]
    return mask

  def log_stats(self, label: str) -> None:
    logger.debug("%s: %d search nodes, %d cached subgraphs", label, self.nodes, len(self._alpha))
