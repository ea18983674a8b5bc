"""
Three-copy merge layouts and their boundary configurations.

Generation n+1 of both families is three copies of generation n glued at boundary
vertices. A merge configuration fixes which identified boundary vertices are in the
independent set; that induces a boundary pattern on each copy. Patterns are frozensets
of boundary positions 0, 1, 2 (A, B, C).
"""

from collections.abc import Iterable
from collections.abc import Mapping
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from itertools import product

from fracmis.algebra import ClassValue
from fracmis.algebra import total
from fracmis.errors import ArgumentError
from fracmis.graphs.model import Family

Pattern = frozenset[int]

# Fixed order: by size, then lexicographically.
PATTERNS: tuple[Pattern, ...] = tuple(frozenset(combo) for size in range(4) for combo in combinations(range(3), size))

POSITION_NAMES = "ABC"


def pattern_label(pattern: Pattern) -> str:
  return "".join(POSITION_NAMES[p] for p in sorted(pattern)) or "-"


@dataclass(frozen=True)
class MergedVertex:
  """One vertex of generation n+1 that is a boundary vertex of at least one copy."""

  name: str
  members: tuple[tuple[int, int], ...]  # (copy index, boundary position)
  outer: int | None  # boundary position in generation n+1, None for internal vertices


# psw: A1=B3 -> A, C1=B2 -> B, A2=C3 -> C; B1, C2, A3 become internal vertices.
# gasket: B1=A2, C1=A3, C2=B3 are the internal glue vertices; A1, B2, C3 are outmost.
MERGE_LAYOUTS: dict[Family, tuple[MergedVertex, ...]] = {
  Family.SCALE_FREE_WEB: (
    MergedVertex("A1=B3", ((0, 0), (2, 1)), 0),
    MergedVertex("C1=B2", ((0, 2), (1, 1)), 1),
    MergedVertex("A2=C3", ((1, 0), (2, 2)), 2),
    MergedVertex("B1", ((0, 1),), None),
    MergedVertex("C2", ((1, 2),), None),
    MergedVertex("A3", ((2, 0),), None),
  ),
  Family.SIERPINSKI_GASKET: (
    MergedVertex("A1", ((0, 0),), 0),
    MergedVertex("B2", ((1, 1),), 1),
    MergedVertex("C3", ((2, 2),), 2),
    MergedVertex("B1=A2", ((0, 1), (1, 0)), None),
    MergedVertex("C1=A3", ((0, 2), (2, 0)), None),
    MergedVertex("C2=B3", ((1, 2), (2, 1)), None),
  ),
}

# Hubs of the psw web are a triangle in every generation, so at most one per copy.
# Gasket outmost vertices are adjacent only at n=1; the class table decides that.
MAX_PATTERN_SIZE = {
  Family.SCALE_FREE_WEB: 1,
  Family.SIERPINSKI_GASKET: 3,
}


def family_patterns(family: Family) -> tuple[Pattern, ...]:
  """Boundary patterns that can be feasible for some generation of `family`."""
  return tuple(p for p in PATTERNS if len(p) <= MAX_PATTERN_SIZE[family])


@dataclass(frozen=True)
class MergeConfig:
  family: Family
  membership: tuple[bool, ...]  # aligned with MERGE_LAYOUTS[family]
  per_copy_class: tuple[Pattern, Pattern, Pattern]
  overlap_correction: int

  def value(self, table: Mapping[Pattern, ClassValue]) -> ClassValue:
    """Size of the best independent set with this configuration, given per-pattern values of the copies."""
    return total(table[pattern] for pattern in self.per_copy_class) - self.overlap_correction

  @property
  def in_set(self) -> tuple[str, ...]:
    layout = MERGE_LAYOUTS[self.family]
    return tuple(vertex.name for vertex, member in zip(layout, self.membership, strict=True) if member)

  def describe(self) -> str:
    copies = ", ".join(pattern_label(p) for p in self.per_copy_class)
    return f"in={{{', '.join(self.in_set)}}} copies=({copies}) -{self.overlap_correction}"


def as_pattern(family: Family, target: Iterable[int]) -> Pattern:
  pattern = frozenset(int(p) for p in target)
  if not pattern <= {0, 1, 2}:
    raise ArgumentError(f"Boundary positions must be 0, 1 or 2, got {sorted(pattern)}")
  if len(pattern) > MAX_PATTERN_SIZE[family]:
    raise ArgumentError(
      f"{family.label} boundary vertices are pairwise adjacent; a class holds at most "
      f"{MAX_PATTERN_SIZE[family]} of them, got {pattern_label(pattern)}"
    )
  return pattern


@lru_cache(maxsize=None)
def merge_configs(family: Family, pattern: Pattern) -> tuple[MergeConfig, ...]:
  layout = MERGE_LAYOUTS[family]
  internal = [index for index, vertex in enumerate(layout) if vertex.outer is None]
  configs = []

  for choice in product((False, True), repeat=len(internal)):
    membership = [vertex.outer in pattern for vertex in layout]
    for index, member in zip(internal, choice, strict=True):
      membership[index] = member

    per_copy: list[set[int]] = [set(), set(), set()]
    correction = 0
    for vertex, member in zip(layout, membership, strict=True):
      if not member:
        continue
      correction += len(vertex.members) - 1
      for copy, position in vertex.members:
        per_copy[copy].add(position)

    if any(len(positions) > MAX_PATTERN_SIZE[family] for positions in per_copy):
      continue

    configs.append(
      MergeConfig(
        family=family,
        membership=tuple(membership),
        per_copy_class=tuple(frozenset(positions) for positions in per_copy),
        overlap_correction=correction,
      )
    )

  return tuple(configs)


def enumerate_merge_configs(family: Family, target_class: Iterable[int]) -> list[MergeConfig]:
  """
  All valid in/out assignments of the identified boundary vertices of a merge
  whose outer boundary pattern is `target_class`, in a fixed order (internal
  vertices enumerated out-before-in, layout order).
  """
  return list(merge_configs(family, as_pattern(family, target_class)))
