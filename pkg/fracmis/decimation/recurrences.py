"""
Hand-transcribed max-recurrences for the class values and the gasket counts.

These run alongside the generic configuration DP and must agree with it at every
generation. A `RecurrenceSet` bundles one step function per recurrence so that a
deliberately altered copy can be fed to the verification suite.
"""

from collections.abc import Callable
from dataclasses import dataclass

from fracmis.algebra import DyadicCount


def psw_step(a0: int, a1: int) -> tuple[int, int]:
  """(alpha^0, alpha^1) of G_{n+1} from those of G_n."""
  return (
    max(3 * a0, 2 * a0 + a1, a0 + 2 * a1, 3 * a1),
    max(2 * a1 + a0 - 1, 3 * a1 - 1),
  )


def gasket_step(a0: int, a1: int, a2: int, a3: int) -> tuple[int, int, int, int]:
  """(alpha^0..alpha^3) of S_{n+1} from those of S_n, valid from n=2 on."""
  return (
    max(3 * a0, a0 + 2 * a1 - 1, 2 * a1 + a2 - 2, 3 * a2 - 3),
    max(2 * a0 + a1, a0 + a1 + a2 - 1, 3 * a1 - 1, 2 * a1 + a3 - 2, a1 + 2 * a2 - 2, 2 * a2 + a3 - 3),
    max(a0 + 2 * a1, a0 + 2 * a2 - 1, 2 * a1 + a2 - 1, 3 * a2 - 2, a1 + a2 + a3 - 2, a2 + 2 * a3 - 3),
    max(3 * a1, a1 + 2 * a2 - 1, 2 * a2 + a3 - 2, 3 * a3 - 3),
  )


def count_step(x: DyadicCount, y: DyadicCount) -> tuple[DyadicCount, DyadicCount]:
  """(x, y) of S_{n+1}: x counts optimum sets holding all three outmost vertices, y those holding only A."""
  return y**3 + x**3, y**3 + x * y**2


# S_2 class values (alpha^0..alpha^3) and counts (x, y): the start of the gasket recurrences.
GASKET_BASE = (1, 2, 2, 3)
GASKET_COUNT_BASE = (DyadicCount.of(1), DyadicCount.of(1))

# G_1 class values (alpha^0, alpha^1): a triangle with all hubs forbidden, or exactly one required.
PSW_BASE = (0, 1)


@dataclass(frozen=True)
class RecurrenceSet:
  psw: Callable[[int, int], tuple[int, int]] = psw_step
  gasket: Callable[[int, int, int, int], tuple[int, int, int, int]] = gasket_step
  counts: Callable[[DyadicCount, DyadicCount], tuple[DyadicCount, DyadicCount]] = count_step


STANDARD_RECURRENCES = RecurrenceSet()
