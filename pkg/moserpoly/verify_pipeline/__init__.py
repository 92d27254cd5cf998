from concurrent.futures import as_completed
from concurrent.futures import ThreadPoolExecutor
import logging
from typing import Dict, List

from moserpoly.errors import InvalidArgumentError
from moserpoly.rng import SplitMix64

from .suites import IdentitiesSuite
from .suites import OracleSuite
from .suites import PropertyResult
from .suites import RecoverySuite

SUITES = {
    "identities": IdentitiesSuite,
    "oracle": OracleSuite,
    "recovery": RecoverySuite,
}


class VerificationPipeline:
    """
    Runs property suites side by side and assembles one report.

    Every suite draws its own seed from a SplitMix64 stream over all suite
    names in canonical order, so a suite's results do not depend on which
    other suites were selected. Results are re-ordered canonically before
    they are returned.
    """

    def __init__(self,
                 suites: List[str],
                 trials: int = 25,
                 seed: int = 0,
                 max_workers: int = 3):
        """
        Initialize the pipeline with the suites to run.

        Args:
            suites: Suite names, or ["all"]
            trials: Random samples per randomized property
            seed: Unsigned 64-bit seed for every randomized suite
            max_workers: Maximum number of suites running at once
        """
        if "all" in suites:
            suites = list(SUITES)
        unknown = [name for name in suites if name not in SUITES]
        if unknown:
            raise InvalidArgumentError(f"Unknown suites: {unknown}")

        self.max_workers = max(1, max_workers)
        stream = SplitMix64(seed)
        suite_seeds = {name: stream.next_u64() for name in SUITES}

        self.enabled_suites = {}
        for position, name in enumerate(
                n for n in SUITES if n in suites):
            self.enabled_suites[name] = SUITES[name](trials=trials,
                                                     seed=suite_seeds[name],
                                                     position=position)

    def _run_single_suite(self, name: str, suite) -> List[PropertyResult]:
        try:
            return suite.run()
        except Exception as e:
            logging.error(f"Suite {name} crashed: {e}")
            return [
                PropertyResult(name, "suite_completed", False, 0,
                               {"error": f"{type(e).__name__}: {e}"})
            ]

    def run(self) -> Dict[str, List[PropertyResult]]:
        """
        Run every enabled suite in parallel.

        Returns:
            Dictionary mapping suite names, in canonical order, to their results
        """
        results = {}

        with ThreadPoolExecutor(max_workers=min(
                self.max_workers, len(self.enabled_suites))) as executor:
            future_to_suite = {
                executor.submit(self._run_single_suite, name, suite): name
                for name, suite in self.enabled_suites.items()
            }

            for future in as_completed(future_to_suite):
                name = future_to_suite[future]
                results[name] = future.result()
                failed = sum(not r.passed for r in results[name])
                if failed:
                    logging.error(f"Suite {name}: {failed} properties failed")

        return {name: results[name] for name in self.enabled_suites}


def report(results: Dict[str, List[PropertyResult]]) -> dict:
    """Machine-readable pass/fail report."""
    return {
        "passed": all(r.passed for rs in results.values() for r in rs),
        "suites": [{
            "suite": name,
            "passed": all(r.passed for r in rs),
            "properties": [r.to_dict() for r in rs],
        } for name, rs in results.items()],
    }
