import math

from fracmis.algebra import ClassValue
from fracmis.algebra import DyadicCount
from fracmis.algebra import is_feasible
from fracmis.limits import DEFAULT_MAX_DIGITS

LOG10_2 = math.log10(2)


def fits_in_digits(value: int | DyadicCount, max_digits: int = DEFAULT_MAX_DIGITS) -> bool:
  """
  True when a non-negative value has at most `max_digits` decimal digits.

  Values far past the limit are rejected from their bit length alone, so counts
  with astronomically large exponents are never expanded.
  """
  # b bits means at least floor((b - 1) * log10(2)) + 1 digits
  if value.bit_length() * LOG10_2 > max_digits + 1:
    return False
  return int(value) < 10**max_digits


def decimal_string(value: int, max_digits: int = DEFAULT_MAX_DIGITS) -> str | None:
  """Exact decimal expansion, or None when it would exceed `max_digits` digits."""
  if not fits_in_digits(value, max_digits):
    return None
  return str(value)


def class_value_string(value: ClassValue) -> str | None:
  """Decimal string of a class value; Infeasible classes render as None."""
  return str(value) if is_feasible(value) else None


def count_document(count: DyadicCount | int, max_digits: int = DEFAULT_MAX_DIGITS) -> dict:
  """
  Report form of an exact count: the decimal expansion (None when too long to
  render) plus the base-2 exponent when the count is an exact power of two.
  """
  if not isinstance(count, DyadicCount):
    count = DyadicCount.of(count)
  decimal = str(int(count)) if fits_in_digits(count, max_digits) else None
  document = {"decimal": decimal}
  if count.is_power_of_two:
    document["pow2_exponent"] = str(count.exponent)
  return document
