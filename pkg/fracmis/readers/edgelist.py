from dataclasses import dataclass
from pathlib import Path
import re

import numpy as np

from fracmis.errors import ArgumentError
from fracmis.graphs.model import Family

HEADER = re.compile(r"^# family=(?P<family>\S+) n=(?P<n>\d+) vertices=(?P<vertices>\d+) edges=(?P<edges>\d+)$")
EDGE = re.compile(r"^(?P<u>[0-9]+) (?P<v>[0-9]+)$")


@dataclass(frozen=True, eq=False)
class EdgeListDocument:
  """A parsed EdgeList export: enough to re-export byte-identically."""

  family: Family
  generation: int
  num_vertices: int
  edges: np.ndarray


class EdgeListReader:
  def read(self, path: str | Path) -> EdgeListDocument:
    return self.parse(Path(path).read_bytes())

  def parse(self, data: bytes | str) -> EdgeListDocument:
    try:
      text = data.decode("ascii") if isinstance(data, bytes) else data
    except UnicodeDecodeError as e:
      raise ArgumentError(f"Edge list is not ASCII text (byte {e.start})") from e

    lines = text.splitlines()
    if not lines:
      raise ArgumentError("Empty edge list")

    header = HEADER.match(lines[0])
    if header is None:
      raise ArgumentError(f"Malformed edge list header: {lines[0]!r}")

    body = lines[1:]
    expected_edges = int(header["edges"])
    if len(body) != expected_edges:
      raise ArgumentError(f"Edge list declares {expected_edges} edges but holds {len(body)}")

    try:
      family = Family.parse(header["family"])
    except ValueError as e:
      raise ArgumentError(str(e)) from e

    num_vertices = int(header["vertices"])
    edges = np.empty((len(body), 2), dtype=np.int64)
    for index, line in enumerate(body):
      edges[index] = self._parse_edge(line, index + 2, num_vertices)

    return EdgeListDocument(
      family=family,
      generation=int(header["n"]),
      num_vertices=num_vertices,
      edges=edges,
    )

  @staticmethod
  def _parse_edge(line: str, line_number: int, num_vertices: int) -> tuple[int, int]:
    match = EDGE.match(line)
    if match is None:
      raise ArgumentError(f"Line {line_number}: expected two vertex ids, got {line!r}")
    u, v = int(match["u"]), int(match["v"])
    if not u < v < num_vertices:
      raise ArgumentError(f"Line {line_number}: edge ({u}, {v}) needs 0 <= u < v < {num_vertices}")
    return u, v


def read_edge_list(source: bytes | str | Path) -> EdgeListDocument:
  """Parse EdgeList bytes/text, or read them from a Path."""
  reader = EdgeListReader()
  if isinstance(source, Path):
    return reader.read(source)
  return reader.parse(source)
