import click


class StreamWriter:
  """Writes exports and reports to standard output instead of a file."""

  output_path = None

  def write(self, data: str | bytes) -> str:
    """
    Echo the data without adding a trailing newline.

    :param data: Text or bytes to write.
    :return: A label for the destination.
    """
    click.echo(data, nl=False)
    return "<stdout>"
