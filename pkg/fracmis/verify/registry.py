from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import logging

from laygo import Pipeline

logger = logging.getLogger(__name__)

Check = Callable[[], str | None]


@dataclass(frozen=True)
class CheckResult:
  name: str
  passed: bool
  detail: str


class CheckRegistry:
  """Manages check registration and execution."""

  def __init__(self):
    # Keys are check names in registration order, values the check functions.
    # A check returns an optional detail string and raises to signal failure.
    self.checks: dict[str, Check] = {}

  def add(self, name: str, check: Check) -> None:
    """
    Register a check under a unique name.

    Args:
      name: Name reported for the check
      check: Zero-argument function; raising AssertionError (or anything else) fails it
    """
    if not callable(check):
      raise ValueError(f"Check must be callable, got {type(check)}")
    if name in self.checks:
      raise ValueError(f"Check '{name}' is already registered")
    self.checks[name] = check

  def remove(self, name: str) -> None:
    self.checks.pop(name, None)

  def clear(self) -> None:
    """Clear all registered checks."""
    self.checks.clear()

  def run_one(self, name: str, check: Check) -> CheckResult:
    """Run a single check; failures are reported, never raised."""
    try:
      detail = check()
    except AssertionError as e:
      logger.debug("check '%s' failed: %s", name, e)
      return CheckResult(name, False, str(e) or "assertion failed")
    except Exception as e:
      logger.debug("check '%s' raised %s", name, type(e).__name__)
      return CheckResult(name, False, f"{type(e).__name__}: {e}")
    return CheckResult(name, True, detail or "ok")

  def run(self, workers: int = 1) -> list[CheckResult]:
    """
    Run every check and return results in registration order.

    Args:
      workers: Number of threads; with one worker the checks run sequentially.
    """
    items = list(self.checks.items())
    if workers <= 1:
      return Pipeline(items).transform(lambda t: t.map(lambda item: self.run_one(*item))).to_list()

    with ThreadPoolExecutor(max_workers=workers) as executor:
      futures = [executor.submit(self.run_one, name, check) for name, check in items]
      return [future.result() for future in futures]

  def get_count(self) -> int:
    return len(self.checks)

  def list(self) -> list[str]:
    return [*self.checks]
