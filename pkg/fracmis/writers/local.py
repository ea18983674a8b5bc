from pathlib import Path

from fracmis.errors import ExportError


class LocalWriter:
  def __init__(self, output_path: str | Path):
    """
    Initialize the LocalWriter.
    This class is responsible for writing exports and reports to a local file.
    """
    self.output_path = Path(output_path)

  def write(self, data: str | bytes) -> Path:
    """
    Write the given data to the output file, creating parent directories.

    :param data: Text or bytes to write.
    :return: The path that was written.
    """
    payload = data.encode("utf-8") if isinstance(data, str) else data
    try:
      self.output_path.parent.mkdir(parents=True, exist_ok=True)
      with open(self.output_path, "wb") as f:
        f.write(payload)
    except OSError as e:
      raise ExportError(self.output_path, e.strerror or str(e)) from e

    return self.output_path
