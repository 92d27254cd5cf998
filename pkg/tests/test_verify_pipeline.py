from fractions import Fraction

import pytest

from moserpoly.errors import InvalidArgumentError
from moserpoly.rng import SplitMix64
from moserpoly.verify_pipeline import report
from moserpoly.verify_pipeline import SUITES
from moserpoly.verify_pipeline import VerificationPipeline
from moserpoly.verify_pipeline.suites import BaseSuite
from moserpoly.verify_pipeline.suites import PropertyResult
from moserpoly.verify_pipeline.suites import RecoverySuite


class EvenSuite(BaseSuite):
    suite_name = "even"

    def properties(self):
        return [self.all_even, self.small, self.raises]

    def all_even(self):
        return self._check("all_even", ({"x": x} for x in (2, 4, 7, 8)),
                           lambda x: x % 2 == 0)

    def small(self):
        return self._check("small", ({"x": x} for x in range(5)),
                           lambda x: x < 10)

    def raises(self):

        def predicate(x):
            raise InvalidArgumentError(f"bad {x}")

        return self._check("raises", [{"x": 1}], predicate)


def test_splitmix64_reference_output():
    assert SplitMix64(0).next_u64() == 0xE220A8397B1DCDAF


def test_splitmix64_ranges():
    rng = SplitMix64(99)
    values = rng.integers(200, -3, 3)
    assert set(values) <= set(range(-3, 4))
    for _ in range(50):
        assert rng.nonzero_int(-1, 1) in (-1, 1)
        q = rng.rational(-2, 2, 5)
        assert -2 <= q <= 2
        assert isinstance(q, Fraction)
    with pytest.raises(InvalidArgumentError):
        SplitMix64(-1)
    with pytest.raises(InvalidArgumentError):
        rng.randint(3, 2)


def test_splitmix64_is_reproducible():
    assert SplitMix64(42).integers(10, 0, 100) == SplitMix64(42).integers(
        10, 0, 100)


def test_check_captures_first_counterexample():
    results = EvenSuite().run()
    assert [r.name for r in results] == ["all_even", "small", "raises"]

    failed = results[0]
    assert not failed.passed
    assert failed.cases == 3
    assert failed.counterexample == {"x": "7"}

    assert results[1] == PropertyResult("even", "small", True, 5)

    crashed = results[2]
    assert not crashed.passed
    assert crashed.counterexample["error"] == "InvalidArgumentError: bad 1"


def test_recovery_suite_passes():
    results = RecoverySuite(trials=1, seed=5).run()
    assert results
    assert all(r.passed for r in results), [
        r.to_dict() for r in results if not r.passed
    ]


def test_pipeline_report_structure():
    pipeline = VerificationPipeline(["recovery", "identities"],
                                    trials=1,
                                    seed=3,
                                    max_workers=2)
    document = report(pipeline.run())
    # Canonical order, whatever order was requested
    assert [s["suite"] for s in document["suites"]] == [
        "identities", "recovery"
    ]
    assert document["passed"] is True
    for suite in document["suites"]:
        for prop in suite["properties"]:
            assert set(prop) == {
                "suite", "name", "passed", "cases", "counterexample"
            }
            assert prop["counterexample"] is None


def test_suite_seed_does_not_depend_on_selection():
    alone = VerificationPipeline(["oracle"], seed=17)
    together = VerificationPipeline(["all"], seed=17)
    assert alone.enabled_suites["oracle"].seed == together.enabled_suites[
        "oracle"].seed
    assert list(together.enabled_suites) == list(SUITES)


def test_crashing_suite_is_reported(monkeypatch):

    def boom(self):
        raise RuntimeError("boom")

    monkeypatch.setattr(RecoverySuite, "run", boom)
    document = report(VerificationPipeline(["recovery"]).run())
    assert document["passed"] is False
    prop = document["suites"][0]["properties"][0]
    assert prop["name"] == "suite_completed"
    assert prop["counterexample"] == {"error": "RuntimeError: boom"}


def test_unknown_suite():
    with pytest.raises(InvalidArgumentError):
        VerificationPipeline(["nonsense"])
