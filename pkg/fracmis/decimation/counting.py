"""
Exact counting of optimum independent sets per boundary pattern.

For a target pattern at generation n, the optimum sets are in bijection with the
choices of one optimum set per copy over every maximizing merge configuration
(distinct configurations differ on an identified boundary vertex, so nothing is
counted twice). Counts are only computed for the patterns that maximizing
configurations actually reach, which keeps every intermediate a power of two for
the gasket.
"""

from dataclasses import dataclass
from functools import lru_cache
import logging

from fracmis.algebra import INFEASIBLE
from fracmis.algebra import ONE
from fracmis.algebra import ZERO
from fracmis.algebra import DyadicCount
from fracmis.algebra import best_of
from fracmis.decimation.merges import PATTERNS
from fracmis.decimation.merges import MergeConfig
from fracmis.decimation.merges import Pattern
from fracmis.decimation.merges import merge_configs
from fracmis.decimation.recurrences import GASKET_COUNT_BASE
from fracmis.decimation.recurrences import STANDARD_RECURRENCES
from fracmis.decimation.recurrences import RecurrenceSet
from fracmis.decimation.tables import pattern_table
from fracmis.errors import GenerationRangeError
from fracmis.errors import RecurrenceMismatchError
from fracmis.graphs.model import Family

logger = logging.getLogger(__name__)

ALL_OUTER: Pattern = frozenset({0, 1, 2})
ONLY_A: Pattern = frozenset({0})


def triangle_counts() -> dict[Pattern, DyadicCount]:
  """The empty set and each single vertex are the only optimum sets per pattern of a triangle."""
  return {p: (ONE if len(p) <= 1 else ZERO) for p in PATTERNS}


@lru_cache(maxsize=None)
def maximizing_configs(family: Family, n: int, pattern: Pattern) -> tuple[MergeConfig, ...]:
  """Merge configurations building generation n (n >= 2) that reach the optimum for `pattern`."""
  target = pattern_table(family, n)[pattern]
  if target is INFEASIBLE:
    return ()
  previous = pattern_table(family, n - 1)
  return tuple(config for config in merge_configs(family, pattern) if config.value(previous) == target)


def pattern_counts(family: Family, n: int, patterns) -> dict[Pattern, DyadicCount]:
  """
  Number of optimum independent sets of generation n for each requested pattern.

  Args:
    family: graph family
    n: generation, n >= 1
    patterns: iterable of boundary patterns

  Returns:
    Mapping pattern -> exact count.
  """
  if n < 1:
    raise GenerationRangeError("pattern_counts", n, 1)

  demands: list[set[Pattern]] = [set() for _ in range(n + 1)]
  demands[n] = {frozenset(p) for p in patterns}
  for generation in range(n, 1, -1):
    for pattern in demands[generation]:
      for config in maximizing_configs(family, generation, pattern):
        demands[generation - 1].update(config.per_copy_class)

  base = triangle_counts()
  counts = {pattern: base[pattern] for pattern in demands[1]}
  for generation in range(2, n + 1):
    level = {}
    for pattern in demands[generation]:
      configs = maximizing_configs(family, generation, pattern)
      products = (counts[a] * counts[b] * counts[c] for a, b, c in (config.per_copy_class for config in configs))
      level[pattern] = sum(products, ZERO)
    counts = level
    logger.debug("%s counts n=%d over %d patterns", family.label, generation, len(level))
  return counts


def mis_count(family: Family, n: int) -> DyadicCount:
  """Number of maximum independent sets of generation n, from the DP."""
  table = pattern_table(family, n)
  alpha = best_of(table.values())
  optimum = [p for p in PATTERNS if table[p] == alpha]
  counts = pattern_counts(family, n, optimum)
  return sum((counts[p] for p in optimum), ZERO)


@dataclass(frozen=True)
class CountPair:
  generation: int
  x: DyadicCount
  y: DyadicCount


def gasket_count_pair(n: int, recurrences: RecurrenceSet = STANDARD_RECURRENCES) -> CountPair:
  """
  (x_n, y_n) for S_n: x counts optimum sets holding all three outmost vertices,
  y those holding exactly A_n. The generic DP value is checked against the
  transcribed pair recurrence at every generation from n=2.
  """
  family = Family.SIERPINSKI_GASKET
  if n < 2:
    raise GenerationRangeError("gasket_count_pair", n, 2)

  transcribed = GASKET_COUNT_BASE
  for generation in range(2, n + 1):
    if generation > 2:
      transcribed = tuple(recurrences.counts(*transcribed))
    counts = pattern_counts(family, generation, (ALL_OUTER, ONLY_A))
    generic = (counts[ALL_OUTER], counts[ONLY_A])
    if generic != transcribed:
      raise RecurrenceMismatchError(family, generation, generic, transcribed)

  return CountPair(n, *generic)
