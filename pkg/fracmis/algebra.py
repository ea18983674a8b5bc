"""
Exact value types shared by the oracle and the decimation DP.

`INFEASIBLE` is the bottom element of the class-value algebra: it absorbs under
addition and subtraction and is ignored by `best_of`. `DyadicCount` stores a
nonnegative integer as odd * 2**exponent so that counts which are powers of two
stay cheap no matter how large the exponent grows.
"""

from collections.abc import Iterable
from dataclasses import dataclass


class Infeasible:
  """Value of a boundary class that contains no independent set."""

  _instance = None

  def __new__(cls):
    if cls._instance is None:
      cls._instance = super().__new__(cls)
    return cls._instance

  def __add__(self, other):
    return self

  __radd__ = __add__

  def __sub__(self, other):
    return self

  def __rsub__(self, other):
    return self

  def __bool__(self) -> bool:
    return False

  def __repr__(self) -> str:
    return "INFEASIBLE"

  def __str__(self) -> str:
    return "infeasible"

  def __reduce__(self):
    return (Infeasible, ())


INFEASIBLE = Infeasible()

ClassValue = int | Infeasible


def is_feasible(value: ClassValue) -> bool:
  return value is not INFEASIBLE


def total(values: Iterable[ClassValue]) -> ClassValue:
  """Sum with INFEASIBLE absorbing."""
  result: ClassValue = 0
  for value in values:
    if value is INFEASIBLE:
      return INFEASIBLE
    result += value
  return result


def best_of(values: Iterable[ClassValue]) -> ClassValue:
  """Maximum over the feasible values; INFEASIBLE when there are none."""
  feasible = [value for value in values if value is not INFEASIBLE]
  if not feasible:
    return INFEASIBLE
  return max(feasible)


@dataclass(frozen=True, slots=True, eq=False)
class DyadicCount:
  """Exact nonnegative integer odd * 2**exponent (zero is odd=0, exponent=0)."""

  odd: int
  exponent: int

  def __post_init__(self):
    if self.odd < 0 or self.exponent < 0:
      raise ValueError("DyadicCount holds nonnegative values only")
    if self.odd == 0 and self.exponent != 0:
      raise ValueError("zero must be stored with exponent 0")
    if self.odd and not self.odd & 1:
      raise ValueError("odd part must be odd; use DyadicCount.normalized")

  @classmethod
  def normalized(cls, mantissa: int, exponent: int = 0) -> "DyadicCount":
    if mantissa == 0:
      return cls(0, 0)
    shift = (mantissa & -mantissa).bit_length() - 1
    return cls(mantissa >> shift, exponent + shift)

  @classmethod
  def of(cls, value: int) -> "DyadicCount":
    return cls.normalized(int(value))

  @classmethod
  def power_of_two(cls, exponent: int) -> "DyadicCount":
    return cls(1, exponent)

  @property
  def is_zero(self) -> bool:
    return self.odd == 0

  @property
  def is_power_of_two(self) -> bool:
    return self.odd == 1

  def bit_length(self) -> int:
    if self.odd == 0:
      return 0
    return self.odd.bit_length() + self.exponent

  def __int__(self) -> int:
    return self.odd << self.exponent

  def __add__(self, other):
    if isinstance(other, int):
      other = DyadicCount.of(other)
    if not isinstance(other, DyadicCount):
      return NotImplemented
    if self.odd == 0:
      return other
    if other.odd == 0:
      return self
    low = min(self.exponent, other.exponent)
    mantissa = (self.odd << (self.exponent - low)) + (other.odd << (other.exponent - low))
    return DyadicCount.normalized(mantissa, low)

  __radd__ = __add__

  def __mul__(self, other):
    if isinstance(other, int):
      other = DyadicCount.of(other)
    if not isinstance(other, DyadicCount):
      return NotImplemented
    if self.odd == 0 or other.odd == 0:
      return DyadicCount(0, 0)
    return DyadicCount(self.odd * other.odd, self.exponent + other.exponent)

  __rmul__ = __mul__

  def __pow__(self, power: int):
    if power < 0:
      return NotImplemented
    if power == 0:
      return DyadicCount(1, 0)
    if self.odd == 0:
      return self
    return DyadicCount(self.odd**power, self.exponent * power)

  def __eq__(self, other) -> bool:
    if isinstance(other, int):
      if other < 0:
        return False
      other = DyadicCount.of(other)
    if not isinstance(other, DyadicCount):
      return NotImplemented
    return self.odd == other.odd and self.exponent == other.exponent

  def __hash__(self) -> int:
    return hash((self.odd, self.exponent))

  def __repr__(self) -> str:
    if self.odd == 1:
      return f"DyadicCount(2**{self.exponent})"
    return f"DyadicCount({self.odd} * 2**{self.exponent})"


ZERO = DyadicCount(0, 0)
ONE = DyadicCount(1, 0)
