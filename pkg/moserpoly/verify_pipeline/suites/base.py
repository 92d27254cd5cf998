from abc import ABC
from abc import abstractmethod
from contextlib import contextmanager
from dataclasses import dataclass
import logging
import sys
from typing import Any, Callable, Dict, Iterable, List, Optional

from tqdm import tqdm

from moserpoly.errors import MoserPolyError


@dataclass
class PropertyResult:
    """Outcome of one property over all of its cases."""

    suite: str
    name: str
    passed: bool
    cases: int
    counterexample: Optional[Dict[str, str]] = None

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "name": self.name,
            "passed": self.passed,
            "cases": self.cases,
            "counterexample": self.counterexample,
        }


class BaseSuite(ABC):
    """
    Abstract base class for verification suites providing common
    functionality for case iteration, counterexample capture and progress
    bar management.
    """

    def __init__(self, trials: int = 25, seed: int = 0, position: int = 0):
        """
        Initialize base suite with common attributes.

        Args:
            trials: Number of random samples for randomized properties
            seed: Seed of the suite's SplitMix64 stream
            position: Row of this suite's progress bar on stderr
        """
        self.trials = trials
        self.seed = seed
        self.position = position
        self.progress_bar = None

        # Suite name (must be set by subclasses)
        if not hasattr(self, 'suite_name'):
            self.suite_name = "unknown"

    def _check(self, name: str, cases: Iterable[Dict[str, Any]],
               predicate: Callable[..., bool]) -> PropertyResult:
        """
        Run ``predicate(**case)`` over every case and stop at the first failure.

        A library error raised by the predicate counts as a failure and is
        recorded with the counterexample.

        Args:
            name: Property name used in the report
            cases: Keyword-argument dictionaries, one per case
            predicate: Returns True when the property holds for a case

        Returns:
            PropertyResult for the property
        """
        count = 0
        for case in cases:
            count += 1
            try:
                holds = predicate(**case)
            except (MoserPolyError, ArithmeticError) as e:
                holds = False
                case = dict(case, error=f"{type(e).__name__}: {e}")
            if not holds:
                logging.error(f"[{self.suite_name}] {name} failed on {case}")
                self._update_progress(name)
                return PropertyResult(self.suite_name, name, False, count,
                                      {k: str(v) for k, v in case.items()})

        self._update_progress(name)
        return PropertyResult(self.suite_name, name, True, count)

    def _update_progress(self, name: str):
        if self.progress_bar:
            self.progress_bar.update(1)
            self.progress_bar.set_description(f"[{self.suite_name}] {name}")

    @contextmanager
    def _progress_context(self, total: int, description: str = "Starting"):
        """
        Context manager for the progress bar to ensure proper cleanup.

        The bar writes to stderr and switches itself off when stderr is not a
        terminal, so stdout stays byte-stable.

        Args:
            total: Number of properties in the suite
            description: Initial description for the progress bar

        Yields:
            tqdm progress bar object
        """
        progress_bar = tqdm(total=total,
                            desc=f"[{self.suite_name}] {description}",
                            unit="prop",
                            ncols=100,
                            leave=False,
                            position=self.position,
                            file=sys.stderr,
                            disable=None)
        self.progress_bar = progress_bar
        try:
            yield progress_bar
        finally:
            progress_bar.close()
            self.progress_bar = None

    @abstractmethod
    def properties(self) -> List[Callable[[], PropertyResult]]:
        """
        The suite's property checks, in report order.
        Must be implemented by subclasses.
        """
        pass

    def run(self) -> List[PropertyResult]:
        """
        Run every property of the suite in order.

        Returns:
            One PropertyResult per property
        """
        checks = self.properties()
        results = []
        with self._progress_context(len(checks)):
            for check in checks:
                results.append(check())
        failed = [r.name for r in results if not r.passed]
        if failed:
            logging.warning(f"[{self.suite_name}] failed properties: {failed}")
        else:
            logging.info(
                f"[{self.suite_name}] all {len(results)} properties passed")
        return results
