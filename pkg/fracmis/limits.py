from dataclasses import dataclass
from dataclasses import replace

DEFAULT_BUILD_CAP = 16
DEFAULT_ORACLE_CAP = 60
# Same as the interpreter's default int -> str digit limit.
DEFAULT_MAX_DIGITS = 4300


@dataclass(frozen=True)
class Limits:
  """Size caps shared by the builders, the oracle and the report renderer."""

  build_cap: int = DEFAULT_BUILD_CAP
  oracle_cap: int = DEFAULT_ORACLE_CAP
  max_digits: int = DEFAULT_MAX_DIGITS

  def with_overrides(self, build_cap: int | None = None, oracle_cap: int | None = None) -> "Limits":
    """Return a copy with the given caps replaced; None keeps the current value."""
    changes = {}
    if build_cap is not None:
      changes["build_cap"] = build_cap
    if oracle_cap is not None:
      changes["oracle_cap"] = oracle_cap
    return replace(self, **changes)


DEFAULT_LIMITS = Limits()
