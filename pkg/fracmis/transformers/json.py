import json
from typing import TYPE_CHECKING

if TYPE_CHECKING:
  from fracmis.graphs.model import Graph


class JSONTransformer:
  """
  Transformer for JSON documents: whole graphs and result reports.
  """

  suffix = ".json"

  def transform(self, data: dict | None) -> str:
    """
    Convert a report dictionary to an indented JSON string.

    :param data: Dictionary to convert; key order is preserved.
    :return: JSON string representation of the dictionary.
    """
    return json.dumps(data if data else {}, indent=2) + "\n"

  def transform_graph(self, graph: "Graph") -> bytes:
    """Compact JSON object with family, n, num_vertices, boundary, birth and edges."""
    document = {
      "family": graph.family.label,
      "n": graph.generation,
      "num_vertices": graph.num_vertices,
      "boundary": list(graph.boundary),
      "birth": graph.birth.tolist(),
      "edges": graph.edges.tolist(),
    }
    return (json.dumps(document, separators=(",", ":")) + "\n").encode("ascii")
