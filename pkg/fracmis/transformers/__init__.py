from .dot import DotTransformer
from .edgelist import EdgeListTransformer
from .json import JSONTransformer

__all__ = ["DotTransformer", "EdgeListTransformer", "JSONTransformer"]
