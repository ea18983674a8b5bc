import pytest

from fracmis.algebra import INFEASIBLE
from fracmis.algebra import best_of
from fracmis.algebra import total
from fracmis.decimation import RecurrenceSet
from fracmis.decimation import class_table
from fracmis.decimation import closed_alpha
from fracmis.decimation import closed_classes
from fracmis.decimation import closed_forms
from fracmis.decimation import closed_vertex_cover
from fracmis.decimation import enumerate_merge_configs
from fracmis.decimation import gasket_class_table
from fracmis.decimation import independence_number
from fracmis.decimation import psw_class_table
from fracmis.decimation.merges import PATTERNS
from fracmis.decimation.tables import pattern_table
from fracmis.errors import ArgumentError
from fracmis.errors import GenerationRangeError
from fracmis.errors import RecurrenceMismatchError
from fracmis.graphs import Family
from fracmis.graphs import vertex_count

PSW = Family.SCALE_FREE_WEB
GASKET = Family.SIERPINSKI_GASKET


class TestInfeasible:
  def test_absorbs_arithmetic(self):
    assert INFEASIBLE + 3 is INFEASIBLE
    assert 3 - INFEASIBLE is INFEASIBLE
    assert total([1, INFEASIBLE, 2]) is INFEASIBLE
    assert total([1, 2, 3]) == 6

  def test_ignored_by_best_of(self):
    assert best_of([INFEASIBLE, 4, 2]) == 4
    assert best_of([INFEASIBLE, INFEASIBLE]) is INFEASIBLE


class TestMergeConfigs:
  def test_psw_without_hubs(self):
    configs = enumerate_merge_configs(PSW, [])
    assert len(configs) == 8
    assert {config.overlap_correction for config in configs} == {0}

  def test_psw_with_one_hub(self):
    configs = enumerate_merge_configs(PSW, [0])
    assert len(configs) == 2
    assert all(config.overlap_correction == 1 for config in configs)
    assert [config.per_copy_class for config in configs] == [
      (frozenset({0}), frozenset(), frozenset({1})),
      (frozenset({0}), frozenset({2}), frozenset({1})),
    ]

  def test_psw_rejects_two_hubs(self):
    with pytest.raises(ArgumentError, match="at most 1"):
      enumerate_merge_configs(PSW, [0, 1])

  @pytest.mark.parametrize("pattern", PATTERNS, ids=lambda p: "".join("ABC"[i] for i in sorted(p)) or "none")
  def test_gasket_has_eight_configs_per_pattern(self, pattern):
    configs = enumerate_merge_configs(GASKET, pattern)
    assert len(configs) == 8
    for config in configs:
      assert config.overlap_correction == sum(config.membership[3:])

  def test_bad_position(self):
    with pytest.raises(ArgumentError, match="0, 1 or 2"):
      enumerate_merge_configs(GASKET, [3])

  def test_describe(self):
    config = enumerate_merge_configs(GASKET, [0, 1, 2])[0]
    assert config.describe() == "in={A1, B2, C3} copies=(A, B, C) -0"


class TestScaleFreeWebTables:
  def test_triangle(self):
    table = psw_class_table(1)
    assert (table.alpha0, table.alpha1) == (0, 1)
    assert table.alpha == 1

  def test_second_generation(self):
    table = psw_class_table(2)
    assert (table.alpha0, table.alpha1) == (3, 2)

  @pytest.mark.parametrize("n", [1, 2, 3, 6, 20, 64])
  def test_independence_number(self, n):
    assert independence_number(PSW, n) == 3 ** (n - 1)

  @pytest.mark.parametrize("n", range(2, 65))
  def test_classes(self, n):
    table = psw_class_table(n)
    assert table.alpha0 == 3 ** (n - 1)
    assert table.alpha1 == 3 ** (n - 1) - 2 ** (n - 1) + 1
    assert table.alpha1 < table.alpha0

  def test_recursion(self):
    for n in range(2, 64):
      current, following = psw_class_table(n), psw_class_table(n + 1)
      assert following.alpha0 == 3 * current.alpha0
      assert following.alpha1 == 2 * current.alpha1 + 3 ** (n - 1) - 1

  def test_patterns_with_two_hubs_are_infeasible(self):
    table = pattern_table(PSW, 5)
    assert all(table[p] is INFEASIBLE for p in PATTERNS if len(p) >= 2)


class TestGasketTables:
  def test_triangle(self):
    assert gasket_class_table(1).alpha == (0, 1, INFEASIBLE, INFEASIBLE)

  def test_base(self):
    assert gasket_class_table(2).alpha == (1, 2, 2, 3)

  @pytest.mark.parametrize("n", range(2, 65))
  def test_closed_forms(self, n):
    power = 3 ** (n - 1)
    table = gasket_class_table(n)
    assert table.alpha == ((power - 1) // 2, (power + 1) // 2, (power + 1) // 2, (power + 3) // 2)
    a0, a1, a2, a3 = table.alpha
    assert a0 + 1 == a1 == a2 == a3 - 1
    assert table.independence_number == a3

  def test_recursion(self):
    for n in range(2, 64):
      assert independence_number(GASKET, n + 1) == 3 * independence_number(GASKET, n) - 3

  def test_large_generation(self):
    assert independence_number(GASKET, 2000) == (3**1999 + 3) // 2


class TestMutatedRecurrences:
  def test_gasket_mutation_detected_at_three(self):
    def mutated(a0, a1, a2, a3):
      return (
        max(3 * a0, a0 + 2 * a1 - 1, 2 * a1 + a2 - 2, 3 * a2 - 3),
        max(2 * a0 + a1, a0 + a1 + a2 - 1, 3 * a1 - 1, 2 * a1 + a3 - 2, a1 + 2 * a2 - 2, 2 * a2 + a3 - 3),
        max(a0 + 2 * a1, a0 + 2 * a2 - 1, 2 * a1 + a2 - 1, 3 * a2 - 2, a1 + a2 + a3 - 2, a2 + 2 * a3 - 3),
        max(3 * a1, a1 + 2 * a2 - 1, 2 * a2 + a3 - 2, 3 * a3 - 2),
      )

    with pytest.raises(RecurrenceMismatchError, match="n=3") as info:
      gasket_class_table(5, RecurrenceSet(gasket=mutated))
    assert info.value.generation == 3
    assert info.value.generic == (4, 5, 5, 6)

  def test_psw_mutation(self):
    def mutated(a0, a1):
      return max(3 * a0, 2 * a0 + a1, a0 + 2 * a1, 3 * a1), max(2 * a1 + a0, 3 * a1 - 1)

    with pytest.raises(RecurrenceMismatchError, match="n=3"):
      psw_class_table(4, RecurrenceSet(psw=mutated))


class TestClosedForms:
  def test_psw_sixth_generation(self):
    assert closed_alpha(PSW, 6) == 243

  def test_psw_triangle_alpha(self):
    assert closed_alpha(PSW, 1) == 1

  def test_gasket_needs_two(self):
    with pytest.raises(GenerationRangeError, match="requires n >= 2"):
      closed_alpha(GASKET, 1)

  def test_psw_classes_need_two(self):
    with pytest.raises(GenerationRangeError):
      closed_classes(PSW, 1)

  @pytest.mark.parametrize("family", [PSW, GASKET], ids=lambda f: f.label)
  @pytest.mark.parametrize("n", range(2, 65, 7))
  def test_agree_with_dp(self, family, n):
    forms = closed_forms(family, n)
    assert forms.alpha == independence_number(family, n)
    assert forms.classes == tuple(class_table(family, n).classes)
    assert forms.vertex_cover == vertex_count(n) - forms.alpha == closed_vertex_cover(family, n)
