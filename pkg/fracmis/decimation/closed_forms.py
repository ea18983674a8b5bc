from dataclasses import dataclass

from fracmis.algebra import ONE
from fracmis.algebra import DyadicCount
from fracmis.errors import GenerationRangeError
from fracmis.graphs.model import Family

PSW = Family.SCALE_FREE_WEB
GASKET = Family.SIERPINSKI_GASKET

# (family, quantity) -> (formula, smallest n it is stated for)
FORMULAS = {
  (PSW, "alpha"): ("alpha_n = 3^(n-1)", 1),
  (PSW, "classes"): ("alpha_n^1 = 3^(n-1) - 2^(n-1) + 1", 2),
  (PSW, "mis_count"): ("unique maximum independent set", 2),
  (PSW, "vertex_cover"): ("N_n - alpha_n = (3^(n-1) + 3)/2", 1),
  (GASKET, "alpha"): ("alpha_n = (3^(n-1) + 3)/2", 2),
  (GASKET, "classes"): ("alpha_n^0 = (3^(n-1) - 1)/2, alpha_n^1 = alpha_n^2 = (3^(n-1) + 1)/2", 2),
  (GASKET, "mis_count"): ("2^((3^(n-2) - 1)/2)", 2),
  (GASKET, "vertex_cover"): ("N_n - alpha_n = 3^(n-1)", 2),
}


def _require(family: Family, quantity: str, n: int) -> None:
  formula, minimum = FORMULAS[(family, quantity)]
  if n < minimum:
    raise GenerationRangeError(f"closed form '{formula}'", n, minimum)


def closed_alpha(family: Family, n: int) -> int:
  _require(family, "alpha", n)
  if family is PSW:
    return 3 ** (n - 1)
  return (3 ** (n - 1) + 3) // 2


def closed_classes(family: Family, n: int) -> tuple[int, ...]:
  """psw: (alpha^0, alpha^1); gasket: (alpha^0, alpha^1, alpha^2, alpha^3)."""
  _require(family, "classes", n)
  power = 3 ** (n - 1)
  if family is PSW:
    return (power, power - 2 ** (n - 1) + 1)
  return ((power - 1) // 2, (power + 1) // 2, (power + 1) // 2, (power + 3) // 2)


def gasket_count_exponent(n: int) -> int:
  _require(GASKET, "mis_count", n)
  return (3 ** (n - 2) - 1) // 2


def closed_mis_count(family: Family, n: int) -> DyadicCount:
  _require(family, "mis_count", n)
  if family is PSW:
    return ONE
  return DyadicCount.power_of_two(gasket_count_exponent(n))


def closed_vertex_cover(family: Family, n: int) -> int:
  _require(family, "vertex_cover", n)
  if family is PSW:
    return (3 ** (n - 1) + 3) // 2
  return 3 ** (n - 1)


@dataclass(frozen=True)
class ClosedForms:
  family: Family
  generation: int
  alpha: int
  classes: tuple[int, ...]
  mis_count: DyadicCount
  vertex_cover: int


def closed_forms(family: Family, n: int) -> ClosedForms:
  """Every closed-form quantity of the family; raises if n is below any formula's range."""
  return ClosedForms(
    family=family,
    generation=n,
    alpha=closed_alpha(family, n),
    classes=closed_classes(family, n),
    mis_count=closed_mis_count(family, n),
    vertex_cover=closed_vertex_cover(family, n),
  )
