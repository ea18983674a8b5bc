from dataclasses import dataclass
from enum import Enum

import numpy as np


class Family(Enum):
  SCALE_FREE_WEB = "psw"
  SIERPINSKI_GASKET = "gasket"

  @property
  def label(self) -> str:
    return self.value

  @classmethod
  def parse(cls, label: str) -> "Family":
    for family in cls:
      if family.value == label:
        return family
    raise ValueError(f"Unknown family '{label}', expected one of: {', '.join(f.value for f in cls)}")


def vertex_count(n: int) -> int:
  """N_n = (3^n + 3) / 2, the same for both families."""
  return (3**n + 3) // 2


def edge_count(n: int) -> int:
  return 3**n


def _frozen(array: np.ndarray) -> np.ndarray:
  array = np.ascontiguousarray(array, dtype=np.int64)
  array.flags.writeable = False
  return array


@dataclass(frozen=True, eq=False)
class Graph:
  """
  Immutable simple undirected graph of one of the two families.

  `edges` is an (E, 2) int64 array of (u, v) rows with u < v in creation order,
  `birth` holds the iteration at which each vertex id was created and `boundary`
  the hub triple (psw) or the outmost triple (gasket).
  """

  family: Family
  generation: int
  num_vertices: int
  edges: np.ndarray
  birth: np.ndarray
  boundary: tuple[int, int, int]

  def __post_init__(self):
    object.__setattr__(self, "edges", _frozen(self.edges).reshape(-1, 2))
    object.__setattr__(self, "birth", _frozen(self.birth))
    object.__setattr__(self, "boundary", tuple(int(v) for v in self.boundary))

  @property
  def num_edges(self) -> int:
    return int(self.edges.shape[0])

  def degrees(self) -> np.ndarray:
    return np.bincount(self.edges.ravel(), minlength=self.num_vertices)

  def same_edges(self, other: "Graph") -> bool:
    return self.num_vertices == other.num_vertices and np.array_equal(self.edges, other.edges)


@dataclass(frozen=True)
class DegreeMultiset:
  """Exact degree histogram: degree -> number of vertices with that degree."""

  entries: dict[int, int]

  @classmethod
  def of(cls, graph: Graph) -> "DegreeMultiset":
    values, counts = np.unique(graph.degrees(), return_counts=True)
    return cls({int(degree): int(count) for degree, count in zip(values, counts, strict=True)})

  def degree_sum(self) -> int:
    return sum(degree * count for degree, count in self.entries.items())

  def __getitem__(self, degree: int) -> int:
    return self.entries.get(degree, 0)


def degree_multiset(graph: Graph) -> DegreeMultiset:
  return DegreeMultiset.of(graph)
