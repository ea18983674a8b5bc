import numpy as np

from fracmis.oracle.sets import GraphLike
from fracmis.oracle.sets import VertexSet


def _endpoints(graph: GraphLike) -> tuple[np.ndarray, np.ndarray]:
  edges = np.asarray(graph.edges).reshape(-1, 2)
  return edges[:, 0], edges[:, 1]


def is_independent(graph: GraphLike, vertices: VertexSet) -> bool:
  """True iff no edge has both endpoints in `vertices`."""
  inside = vertices.indicator(graph.num_vertices)
  u, v = _endpoints(graph)
  return not bool(np.any(inside[u] & inside[v]))


def is_maximal_independent(graph: GraphLike, vertices: VertexSet) -> bool:
  """True iff `vertices` is independent and dominates every other vertex."""
  if not is_independent(graph, vertices):
    return False
  inside = vertices.indicator(graph.num_vertices)
  u, v = _endpoints(graph)
  dominated = inside.copy()
  dominated[v[inside[u]]] = True
  dominated[u[inside[v]]] = True
  return bool(dominated.all())


def covers_all_edges(graph: GraphLike, vertices: VertexSet) -> bool:
  """True iff every edge has at least one endpoint in `vertices`."""
  inside = vertices.indicator(graph.num_vertices)
  u, v = _endpoints(graph)
  return bool(np.all(inside[u] | inside[v]))
