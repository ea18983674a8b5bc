from collections.abc import Iterable
from collections.abc import Iterator
from dataclasses import dataclass
from dataclasses import field
from typing import Protocol

import numpy as np

from fracmis.errors import ArgumentError


class GraphLike(Protocol):
  num_vertices: int
  edges: np.ndarray


def _as_id_array(members) -> np.ndarray:
  if isinstance(members, np.ndarray):
    array = members.astype(np.int64, copy=False).ravel()
  else:
    array = np.fromiter((int(member) for member in members), dtype=np.int64)
  array = np.unique(array)
  array.flags.writeable = False
  return array


@dataclass(frozen=True, eq=False)
class VertexSet:
  """Sorted set of vertex ids (independent set, MIS witness or vertex cover)."""

  members: np.ndarray

  def __post_init__(self):
    object.__setattr__(self, "members", _as_id_array(self.members))

  @classmethod
  def of(cls, members: Iterable[int] | np.ndarray = ()) -> "VertexSet":
    return cls(members)

  @classmethod
  def from_bitmask(cls, mask: int) -> "VertexSet":
    ids = []
    while mask:
      low = mask & -mask
      ids.append(low.bit_length() - 1)
      mask ^= low
    return cls(ids)

  def __len__(self) -> int:
    return int(self.members.shape[0])

  def __iter__(self) -> Iterator[int]:
    return iter(self.members.tolist())

  def __contains__(self, vertex: int) -> bool:
    index = np.searchsorted(self.members, vertex)
    return bool(index < len(self) and self.members[index] == vertex)

  def __eq__(self, other) -> bool:
    if isinstance(other, set | frozenset | list | tuple | range):
      other = VertexSet(other)
    if not isinstance(other, VertexSet):
      return NotImplemented
    return np.array_equal(self.members, other.members)

  def __hash__(self) -> int:
    return hash(self.members.tobytes())

  def __repr__(self) -> str:
    if len(self) > 12:
      head = ", ".join(str(v) for v in self.members[:12].tolist())
      return f"VertexSet({{{head}, ...}} size={len(self)})"
    return f"VertexSet({set(self.members.tolist())})"

  def to_list(self) -> list[int]:
    return self.members.tolist()

  def bitmask(self) -> int:
    mask = 0
    for vertex in self.members.tolist():
      mask |= 1 << vertex
    return mask

  def check_range(self, num_vertices: int) -> None:
    if len(self) and (self.members[0] < 0 or self.members[-1] >= num_vertices):
      raise ArgumentError(f"Vertex ids must lie in 0..{num_vertices - 1}, got {self.to_list()}")

  def indicator(self, num_vertices: int) -> np.ndarray:
    self.check_range(num_vertices)
    inside = np.zeros(num_vertices, dtype=bool)
    inside[self.members] = True
    return inside

  def complement(self, num_vertices: int) -> "VertexSet":
    return VertexSet(np.flatnonzero(~self.indicator(num_vertices)))


@dataclass(frozen=True)
class RestrictedQuery:
  """Independent sets that contain all of `required` and none of `forbidden`."""

  required: VertexSet = field(default_factory=VertexSet.of)
  forbidden: VertexSet = field(default_factory=VertexSet.of)

  def __post_init__(self):
    if not isinstance(self.required, VertexSet):
      object.__setattr__(self, "required", VertexSet(self.required))
    if not isinstance(self.forbidden, VertexSet):
      object.__setattr__(self, "forbidden", VertexSet(self.forbidden))
    overlap = set(self.required) & set(self.forbidden)
    if overlap:
      raise ArgumentError(f"Vertices {sorted(overlap)} are both required and forbidden")

  @classmethod
  def for_pattern(cls, boundary: tuple[int, int, int], pattern: Iterable[int]) -> "RestrictedQuery":
    """Boundary class query: positions in `pattern` required, the other boundary vertices forbidden."""
    positions = set(pattern)
    return cls(
      required=VertexSet(boundary[p] for p in sorted(positions)),
      forbidden=VertexSet(boundary[p] for p in range(3) if p not in positions),
    )


@dataclass(frozen=True)
class MisReport:
  alpha: int
  witness: VertexSet
  count: int | None = None
  enumeration: list[VertexSet] | None = None
  truncated: bool = False


@dataclass(frozen=True)
class VertexCover:
  size: int
  witness: VertexSet | None
  verified: bool = False
