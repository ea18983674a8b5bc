from typing import TYPE_CHECKING
from typing import Protocol

import numpy as np

if TYPE_CHECKING:
  from fracmis.graphs.model import Family


class EdgeSource(Protocol):
  family: "Family"
  generation: int
  num_vertices: int
  edges: np.ndarray


def edge_list_header(family: "Family", generation: int, num_vertices: int, num_edges: int) -> str:
  return f"# family={family.label} n={generation} vertices={num_vertices} edges={num_edges}"


class EdgeListTransformer:
  """
  Plain edge list: one header line, then one `u v` pair per line with u < v
  in creation order.
  """

  suffix = ".edges"

  def transform(self, source: EdgeSource) -> bytes:
    edges = np.asarray(source.edges)
    lines = [edge_list_header(source.family, source.generation, source.num_vertices, int(edges.shape[0]))]
    lines.extend(f"{u} {v}" for u, v in edges.tolist())
    return ("\n".join(lines) + "\n").encode("ascii")
