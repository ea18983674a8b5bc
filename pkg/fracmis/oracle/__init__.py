from .predicates import covers_all_edges
from .predicates import is_independent
from .predicates import is_maximal_independent
from .search import count_maximum_independent_sets
from .search import count_restricted_maximum
from .search import enumerate_maximum_independent_sets
from .search import max_independent_set
from .search import min_vertex_cover
from .search import restricted_alpha
from .search import solver_for
from .sets import MisReport
from .sets import RestrictedQuery
from .sets import VertexCover
from .sets import VertexSet

__all__ = [
  "MisReport",
  "RestrictedQuery",
  "VertexCover",
  "VertexSet",
  "count_maximum_independent_sets",
  "count_restricted_maximum",
  "covers_all_edges",
  "enumerate_maximum_independent_sets",
  "is_independent",
  "is_maximal_independent",
  "max_independent_set",
  "min_vertex_cover",
  "restricted_alpha",
  "solver_for",
]
