import pytest

from fracmis.decimation import RecurrenceSet
from fracmis.decimation.recurrences import gasket_step
from fracmis.limits import DEFAULT_LIMITS
from fracmis.verify import CheckRegistry
from fracmis.verify import CheckResult
from fracmis.verify import verify_suite


def mistyped_gasket_step(a0, a1, a2, a3):
  """The transcribed gasket step with the 3*a3 - 3 term of alpha^3 written as 3*a3 - 2."""
  b0, b1, b2, _ = gasket_step(a0, a1, a2, a3)
  b3 = max(3 * a1, a1 + 2 * a2 - 1, 2 * a2 + a3 - 2, 3 * a3 - 2)
  return b0, b1, b2, b3


class TestCheckRegistry:
  def test_runs_in_registration_order(self):
    registry = CheckRegistry()
    registry.add("second", lambda: "two")
    registry.add("first", lambda: None)
    assert registry.list() == ["second", "first"]
    assert registry.run() == [CheckResult("second", True, "two"), CheckResult("first", True, "ok")]

  def test_failures_are_reported(self):
    def failing():
      raise AssertionError("numbers differ")

    def broken():
      raise KeyError("x")

    registry = CheckRegistry()
    registry.add("failing", failing)
    registry.add("broken", broken)
    registry.add("fine", lambda: "ok")
    results = registry.run()
    assert [r.passed for r in results] == [False, False, True]
    assert results[0].detail == "numbers differ"
    assert results[1].detail.startswith("KeyError")

  def test_threads_keep_the_order(self):
    registry = CheckRegistry()
    for index in range(20):
      registry.add(f"check {index}", lambda i=index: str(i))
    results = registry.run(workers=4)
    assert [r.detail for r in results] == [str(i) for i in range(20)]

  def test_duplicate_names(self):
    registry = CheckRegistry()
    registry.add("a", lambda: None)
    with pytest.raises(ValueError, match="already registered"):
      registry.add("a", lambda: None)

  def test_non_callable(self):
    with pytest.raises(ValueError, match="callable"):
      CheckRegistry().add("a", "not a function")

  def test_remove_and_clear(self):
    registry = CheckRegistry()
    registry.add("a", lambda: None)
    registry.add("b", lambda: None)
    registry.remove("a")
    assert registry.list() == ["b"]
    registry.clear()
    assert registry.get_count() == 0


class TestVerifySuite:
  def test_default_run_passes(self):
    results = verify_suite(4)
    failed = [(r.name, r.detail) for r in results if not r.passed]
    assert not failed

  def test_covers_the_oracle_regime(self):
    names = [r.name for r in verify_suite(4)]
    assert "psw n=4 oracle counts" in names
    assert "gasket n=4 oracle alpha per class" in names
    assert "gasket n=4 structure" in names
    assert "psw n=1 oracle witness" not in names

  def test_minimum_includes_the_count_base(self):
    results = verify_suite(2)
    assert "gasket count n=2 equals 1" in [r.name for r in results]
    assert all(r.passed for r in results)
    assert not any("n=3 oracle" in r.name for r in results)

  def test_order_is_deterministic(self):
    sequential = [r.name for r in verify_suite(3, workers=1)]
    threaded = [r.name for r in verify_suite(3, workers=4)]
    assert sequential == threaded

  def test_mistyped_recurrence_fails_at_three(self):
    results = verify_suite(4, recurrences=RecurrenceSet(gasket=mistyped_gasket_step))
    failed = [r for r in results if not r.passed]
    assert [r.name for r in failed] == ["gasket generic DP equals transcribed recurrence n<=64"]
    assert "n=3" in failed[0].detail

  def test_larger_max_n_extends_structure_only(self):
    names = [r.name for r in verify_suite(6)]
    assert "psw n=6 structure" in names
    assert not any("n=5 oracle" in name for name in names)

  def test_oracle_cap_skips_oracle_checks(self):
    limits = DEFAULT_LIMITS.with_overrides(oracle_cap=10)
    names = [r.name for r in verify_suite(4, limits=limits)]
    assert "psw n=2 oracle counts" in names
    assert "psw n=3 oracle counts" not in names

  def test_max_n_below_two(self):
    with pytest.raises(ValueError):
      verify_suite(1)
