from pathlib import Path

from .local import LocalWriter
from .stream import StreamWriter

__all__ = ["LocalWriter", "StreamWriter", "writer_for"]


def writer_for(out: str | Path | None):
  """LocalWriter when a path is given, otherwise StreamWriter."""
  return LocalWriter(out) if out else StreamWriter()
