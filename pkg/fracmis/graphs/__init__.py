from .builders import build
from .builders import build_gasket
from .builders import build_psw
from .export import ExportFormat
from .export import export_graph
from .model import DegreeMultiset
from .model import Family
from .model import Graph
from .model import degree_multiset
from .model import edge_count
from .model import vertex_count

__all__ = [
  "DegreeMultiset",
  "ExportFormat",
  "Family",
  "Graph",
  "build",
  "build_gasket",
  "build_psw",
  "degree_multiset",
  "edge_count",
  "export_graph",
  "vertex_count",
]
