"""
Boundary-class dynamic program.

The generic DP keeps, per generation, the best independent-set size for every
boundary pattern and derives generation n+1 by maximizing over merge
configurations. It is the primary computation; the transcribed recurrences are
checked against it level by level.
"""

from collections.abc import Mapping
from dataclasses import dataclass
import logging
from threading import Lock
from types import MappingProxyType

from fracmis.algebra import INFEASIBLE
from fracmis.algebra import ClassValue
from fracmis.algebra import best_of
from fracmis.decimation.merges import MAX_PATTERN_SIZE
from fracmis.decimation.merges import PATTERNS
from fracmis.decimation.merges import Pattern
from fracmis.decimation.merges import family_patterns
from fracmis.decimation.merges import merge_configs
from fracmis.decimation.recurrences import GASKET_BASE
from fracmis.decimation.recurrences import PSW_BASE
from fracmis.decimation.recurrences import STANDARD_RECURRENCES
from fracmis.decimation.recurrences import RecurrenceSet
from fracmis.errors import GenerationRangeError
from fracmis.errors import RecurrenceMismatchError
from fracmis.graphs.model import Family

logger = logging.getLogger(__name__)

PatternTable = Mapping[Pattern, ClassValue]


def triangle_table() -> PatternTable:
  """Generation 1 of both families is a triangle: at most one boundary vertex fits."""
  return MappingProxyType({p: (len(p) if len(p) <= 1 else INFEASIBLE) for p in PATTERNS})


def decimate(family: Family, table: PatternTable) -> PatternTable:
  """One merge step of the generic DP."""
  allowed = family_patterns(family)
  values = {}
  for pattern in PATTERNS:
    if pattern in allowed:
      values[pattern] = best_of(config.value(table) for config in merge_configs(family, pattern))
    else:
      values[pattern] = INFEASIBLE
  return MappingProxyType(values)


_TABLES: dict[Family, list[PatternTable]] = {}
_TABLES_LOCK = Lock()


def pattern_table(family: Family, n: int) -> PatternTable:
  """Best independent-set size for each boundary pattern of generation n."""
  if n < 1:
    raise GenerationRangeError("pattern_table", n, 1)
  with _TABLES_LOCK:
    tables = _TABLES.setdefault(family, [triangle_table()])
    while len(tables) < n:
      tables.append(decimate(family, tables[-1]))
      logger.debug("%s pattern table n=%d: %s", family.label, len(tables), dict(tables[-1]))
    return tables[n - 1]


def class_values(family: Family, table: PatternTable) -> tuple[ClassValue, ...]:
  """
  Collapse a pattern table to class values indexed by the number of boundary
  vertices, checking that patterns of equal size agree.
  """
  values = []
  for size in range(MAX_PATTERN_SIZE[family] + 1):
    distinct = {table[p] for p in PATTERNS if len(p) == size}
    if len(distinct) != 1:
      raise AssertionError(f"{family.label} boundary symmetry broken for class {size}: {distinct}")
    values.append(distinct.pop())
  return tuple(values)


def independence_number(family: Family, n: int) -> int:
  return best_of(pattern_table(family, n).values())


@dataclass(frozen=True)
class ClassTablePsw:
  generation: int
  alpha0: int
  alpha1: int

  @property
  def alpha(self) -> int:
    return max(self.alpha0, self.alpha1)

  @property
  def classes(self) -> tuple[int, int]:
    return (self.alpha0, self.alpha1)


@dataclass(frozen=True)
class ClassTableGasket:
  generation: int
  alpha: tuple[ClassValue, ClassValue, ClassValue, ClassValue]

  @property
  def independence_number(self) -> int:
    return best_of(self.alpha)

  @property
  def classes(self) -> tuple[ClassValue, ...]:
    return self.alpha


def psw_class_table(n: int, recurrences: RecurrenceSet = STANDARD_RECURRENCES) -> ClassTablePsw:
  """
  (alpha^0, alpha^1) of G_n from the generic DP, checked at every generation
  against the transcribed recurrence started from (0, 1) at n=1.
  """
  family = Family.SCALE_FREE_WEB
  if n < 1:
    raise GenerationRangeError("psw_class_table", n, 1)

  transcribed = PSW_BASE
  generic = class_values(family, pattern_table(family, 1))
  if generic != transcribed:
    raise RecurrenceMismatchError(family, 1, generic, transcribed)

  for generation in range(2, n + 1):
    transcribed = tuple(recurrences.psw(*transcribed))
    generic = class_values(family, pattern_table(family, generation))
    if generic != transcribed:
      raise RecurrenceMismatchError(family, generation, generic, transcribed)

  return ClassTablePsw(n, *generic)


def gasket_class_table(n: int, recurrences: RecurrenceSet = STANDARD_RECURRENCES) -> ClassTableGasket:
  """
  (alpha^0..alpha^3) of S_n. n=1 is the triangle (0, 1, infeasible, infeasible);
  from n=2 the generic DP is checked against the S_2 base (1, 2, 2, 3) and then against
  the transcribed recurrence at every generation.
  """
  family = Family.SIERPINSKI_GASKET
  if n < 1:
    raise GenerationRangeError("gasket_class_table", n, 1)

  generic = class_values(family, pattern_table(family, 1))
  transcribed = None
  for generation in range(2, n + 1):
    transcribed = GASKET_BASE if generation == 2 else tuple(recurrences.gasket(*transcribed))
    generic = class_values(family, pattern_table(family, generation))
    if generic != transcribed:
      raise RecurrenceMismatchError(family, generation, generic, transcribed)

  return ClassTableGasket(n, generic)


def class_table(family: Family, n: int, recurrences: RecurrenceSet = STANDARD_RECURRENCES):
  if family is Family.SCALE_FREE_WEB:
    return psw_class_table(n, recurrences)
  return gasket_class_table(n, recurrences)
