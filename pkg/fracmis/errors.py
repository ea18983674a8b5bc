class FracmisError(Exception):
  """Base class for every error raised by fracmis."""


class CapacityError(FracmisError):
  """A requested size is above a configured cap."""

  def __init__(self, what: str, requested: int, cap: int, hint: str | None = None):
    self.what = what
    self.requested = requested
    self.cap = cap
    message = f"{what} {requested} exceeds the cap of {cap}"
    if hint:
      message = f"{message}; {hint}"
    super().__init__(message)


class GenerationRangeError(FracmisError, ValueError):
  """A generation is outside the range an operation or formula is valid for."""

  def __init__(self, name: str, n: int, minimum: int):
    self.name = name
    self.n = n
    self.minimum = minimum
    super().__init__(f"{name} requires n >= {minimum}, got n={n}")


class ArgumentError(FracmisError, ValueError):
  """A malformed argument: bad vertex id, overlapping query, unknown pattern."""


class RecurrenceMismatchError(FracmisError):
  """The generic configuration DP and a transcribed recurrence disagree."""

  def __init__(self, family, generation: int, generic, transcribed):
    self.family = family
    self.generation = generation
    self.generic = generic
    self.transcribed = transcribed
    super().__init__(
      f"{family.label} recurrence mismatch at n={generation}: generic DP gives {generic}, "
      f"transcribed recurrence gives {transcribed}"
    )


class ExportError(FracmisError, OSError):
  """Writing an export or a report failed."""

  def __init__(self, path, reason: str):
    self.path = path
    super().__init__(f"Could not write '{path}': {reason}")
