from enum import Enum
from pathlib import Path

from fracmis.graphs.model import Graph
from fracmis.transformers import DotTransformer
from fracmis.transformers import EdgeListTransformer
from fracmis.transformers import JSONTransformer
from fracmis.writers import LocalWriter


class ExportFormat(Enum):
  EDGE_LIST = "edges"
  DOT = "dot"
  JSON = "json"


def export_graph(graph: Graph, fmt: ExportFormat, path: str | Path | None = None) -> bytes:
  """
  Serialize a graph and optionally write it to `path`.

  Returns the exported bytes in every case.
  """
  match fmt:
    case ExportFormat.EDGE_LIST:
      data = EdgeListTransformer().transform(graph)
    case ExportFormat.DOT:
      data = DotTransformer().transform(graph)
    case ExportFormat.JSON:
      data = JSONTransformer().transform_graph(graph)
    case _:
      raise ValueError(f"Unsupported export format: {fmt}")

  if path is not None:
    LocalWriter(path).write(data)
  return data
