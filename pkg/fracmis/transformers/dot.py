from typing import TYPE_CHECKING

if TYPE_CHECKING:
  from fracmis.graphs.model import Graph


class DotTransformer:
  """Graphviz undirected graph; boundary vertices carry role="boundary"."""

  suffix = ".dot"

  def transform(self, graph: "Graph") -> bytes:
    lines = [f"graph {graph.family.label}_{graph.generation} {{"]
    lines.extend(f'  {vertex} [role="boundary"];' for vertex in graph.boundary)
    lines.extend(f"  {u} -- {v};" for u, v in graph.edges.tolist())
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("ascii")
