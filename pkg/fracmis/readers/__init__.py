from .edgelist import EdgeListDocument
from .edgelist import EdgeListReader
from .edgelist import read_edge_list

__all__ = ["EdgeListDocument", "EdgeListReader", "read_edge_list"]
