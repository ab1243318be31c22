#!/usr/bin/env python3
"""
Task Dispatcher - Parallel execution of verification samples
"""

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Any, Dict, List, Sequence

from domain.enums import CheckStatus
from domain.interfaces import IVerificationCheck
from domain.report import CheckResult

logger = logging.getLogger(__name__)


class TaskDispatcher:
    """
    Dispatches (check, sample) tasks to a thread pool
    Results are re-sorted by check order and sample index, so the outcome
    does not depend on the number of workers
    """

    def __init__(self, max_workers: int = 1):
        self.max_workers = max(1, max_workers)

    def run_checks(self, checks: Sequence[IVerificationCheck], samples: int) -> Dict[str, Any]:
        """
        Run every check on every sample index
        Args:
            checks: Checks to run, in report order
            samples: Samples per check
        Returns:
            Dict with ordered results and status counts
        """
        tasks = [(position, check, sample)
                 for position, check in enumerate(checks) for sample in range(samples)]
        collected: List[tuple] = []

        if self.max_workers == 1:
            for position, check, sample in tasks:
                collected.append((position, sample, self._run_single(check, sample)))
        else:
            with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
                future_to_task = {
                    executor.submit(self._run_single, check, sample): (position, sample)
                    for position, check, sample in tasks
                }
                for future in as_completed(future_to_task):
                    position, sample = future_to_task[future]
                    collected.append((position, sample, future.result()))

        collected.sort(key=lambda item: (item[0], item[1]))
        results = [result for _, _, result in collected]

        summary = {status.value: 0 for status in CheckStatus}
        for result in results:
            summary[result.status.value] += 1

        for check in checks:
            outcomes = [r for r in results if r.check == check.name]
            passed = sum(1 for r in outcomes if r.status == CheckStatus.PASSED)
            logger.info(f"{check.name}: {passed}/{len(outcomes)} passed")

        return {
            "processed_count": len(results),
            "results": results,
            "summary": summary,
            "coverage": self.coverage(checks, results),
        }

    @staticmethod
    def coverage(checks: Sequence[IVerificationCheck], results: Sequence[CheckResult]) -> List[Dict[str, Any]]:
        """
        How many samples of each check landed in a chart
        Args:
            checks: Checks in report order
            results: Their results
        Returns:
            One entry per check: samples, first_try, redrawn, skipped and in_chart_rate
        """
        entries = []
        for check in checks:
            outcomes = [r for r in results if r.check == check.name]
            skipped = sum(1 for r in outcomes if r.status == CheckStatus.SKIPPED)
            first_try = sum(1 for r in outcomes if r.status != CheckStatus.SKIPPED and r.attempts == 1)
            entries.append({
                "name": check.name,
                "samples": len(outcomes),
                "first_try": first_try,
                "redrawn": len(outcomes) - skipped - first_try,
                "skipped": skipped,
                "in_chart_rate": round((len(outcomes) - skipped) / len(outcomes), 4) if outcomes else 1.0,
            })
        return entries

    @staticmethod
    def _run_single(check: IVerificationCheck, sample: int) -> CheckResult:
        """
        Run one sample, recording unexpected exceptions as errored results
        """
        try:
            return check.run(sample)
        except Exception as e:
            logger.error(f"{check.name}[{sample}] raised {type(e).__name__}: {e}")
            return CheckResult(check.name, sample, CheckStatus.ERRORED,
                               detail={"error": type(e).__name__, "message": str(e)})
