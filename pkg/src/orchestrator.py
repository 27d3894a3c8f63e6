"""Orchestrator for verification sweeps and OEIS cross-checks."""

import csv
import json
import time
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from src.components.arith_core import DivisorSieve, divisors, sigma
from src.components.bfile_processor import get_bfile_processor
from src.components.identity_suites import (
    SERIES_SUITE,
    SUITE_CHECKERS,
    SUITE_NAMES,
    identities_of,
)
from src.components.interval_polys import L_FAMILY, P_FAMILY, evaluate
from src.components.series_check import check_generating_product
from src.config import settings
from src.models import ReportTally, VerificationReport
from src.utils.exceptions import UsageError
from src.utils.logger import get_logger

logger = get_logger(__name__)

OEIS_SEQUENCES = ("A002324", "A096936")


def run_chunk(suite: str, lo: int, hi: int) -> List[VerificationReport]:
    """
    Check every identity of a range suite for ``lo <= n <= hi``.

    Module-level so worker processes can receive it.
    """
    checker = SUITE_CHECKERS[suite]
    sieve = DivisorSieve(hi, start=lo)
    tallies: Dict[str, ReportTally] = {
        name: ReportTally(suite, name, lo, hi) for name in identities_of(suite)
    }
    started = time.perf_counter()
    for n in range(lo, hi + 1):
        for check in checker(n, sieve.divisors(n)):
            if not tallies[check.identity].record(n, check.expected, check.actual):
                logger.warning(
                    f"{suite}/{check.identity} fails at n={n}: "
                    f"expected {check.expected}, got {check.actual}",
                    extra={"suite": suite, "identity": check.identity, "n": n},
                )
    elapsed = time.perf_counter() - started
    return [tally.report(elapsed) for tally in tallies.values()]


def sequence_value_via_l(sequence: str, n: int) -> int:
    """A002324(n) or A096936(n) computed through L_n, not through the closed forms."""
    divs = divisors(n)
    if sequence == "A002324":
        return 4 * sigma(n) - 3 * evaluate(n, L_FAMILY, 1, divs).a
    if sequence == "A096936":
        return evaluate(n, L_FAMILY, 2, divs).a
    raise UsageError(f"unknown sequence {sequence!r}; expected one of {', '.join(OEIS_SEQUENCES)}")


class VerificationOrchestrator:
    """Runs verification suites over index ranges and merges the per-chunk reports."""

    def __init__(self, workers: Optional[int] = None, chunk_size: Optional[int] = None):
        """
        Initialize the orchestrator.

        Args:
            workers: Worker processes (default from settings)
            chunk_size: Indices per work unit (default from settings)
        """
        self.workers = workers or settings.default_workers
        self.chunk_size = chunk_size or settings.chunk_size
        self.bfile_processor = get_bfile_processor()
        self.output_dir = Path(settings.output_dir)

    def _chunks(self, lo: int, hi: int) -> List[Tuple[int, int]]:
        return [
            (start, min(start + self.chunk_size - 1, hi))
            for start in range(lo, hi + 1, self.chunk_size)
        ]

    def run_suite(self, suite: str, lo: int, hi: int) -> List[VerificationReport]:
        """
        Run a range suite over ``lo..hi``.

        The result does not depend on the worker count: chunks are merged in
        index order and the minimal-n counterexample is kept.

        Args:
            suite: Suite name
            lo: First index (>= 1)
            hi: Last index (>= lo)

        Returns:
            One report per identity of the suite
        """
        if suite not in SUITE_CHECKERS:
            raise UsageError(f"unknown suite {suite!r}; expected one of {', '.join(SUITE_NAMES)}")
        if lo < 1 or hi < lo:
            raise UsageError(f"range needs 1 <= LO <= HI, got {lo}..{hi}")

        logger.info(f"Starting suite {suite} over {lo}..{hi} with {self.workers} worker(s)")
        started = time.perf_counter()
        chunks = self._chunks(lo, hi)

        if self.workers > 1 and len(chunks) > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                futures = [pool.submit(run_chunk, suite, a, b) for a, b in chunks]
                chunk_reports = [future.result() for future in futures]
        else:
            chunk_reports = [run_chunk(suite, a, b) for a, b in chunks]

        merged = chunk_reports[0]
        for reports in chunk_reports[1:]:
            merged = [left.merge(right) for left, right in zip(merged, reports)]

        elapsed = time.perf_counter() - started
        merged = [r.model_copy(update={"elapsed_seconds": elapsed}) for r in merged]
        self._log_summary(suite, merged)
        return merged

    def run_series(self, order: int) -> List[VerificationReport]:
        """
        Compare the generating product with the P_n series at t^1 .. t^order.

        Returns:
            Reports for ``generating-product`` and ``kernel-division``
        """
        if order < 1:
            raise UsageError(f"series order must be >= 1, got {order}")
        logger.info(f"Starting suite {SERIES_SUITE} at order {order}")
        started = time.perf_counter()
        result = check_generating_product(order)

        product = ReportTally(SERIES_SUITE, "generating-product", 1, order)
        division = ReportTally(SERIES_SUITE, "kernel-division", 1, order)
        for power in range(1, order + 1):
            mismatch = result.mismatches.get(power)
            if mismatch is None:
                product.record(power, 0, 0)
            else:
                product.record(
                    power,
                    f"q^{mismatch.q_exponent}:{mismatch.expected}",
                    f"q^{mismatch.q_exponent}:{mismatch.actual}",
                )
            failure = result.division_failures.get(power)
            division.record(power, "exact", failure or "exact")

        elapsed = time.perf_counter() - started
        reports = [product.report(elapsed), division.report(elapsed)]
        self._log_summary(SERIES_SUITE, reports)
        return reports

    def run_oeis_check(
        self, sequence: str, bfile_path: str, lo: Optional[int] = None, hi: Optional[int] = None
    ) -> VerificationReport:
        """
        Compare L_n-route values with an OEIS b-file.

        Args:
            sequence: ``A002324`` or ``A096936``
            bfile_path: Local b-file path
            lo: First index (default: first positive index in the file)
            hi: Last index (default: capped at ``settings.oeis_max_index``)

        Returns:
            Report for identity ``<sequence>-bfile``
        """
        if sequence not in OEIS_SEQUENCES:
            raise UsageError(
                f"unknown sequence {sequence!r}; expected one of {', '.join(OEIS_SEQUENCES)}"
            )
        entries = self.bfile_processor.load_bfile(bfile_path)
        if lo is None or hi is None:
            default_lo, default_hi = self.bfile_processor.default_range(
                entries, settings.oeis_max_index
            )
            lo = default_lo if lo is None else lo
            hi = default_hi if hi is None else hi
        if lo < 1 or hi < lo:
            raise UsageError(f"range needs 1 <= LO <= HI, got {lo}..{hi}")
        selected = self.bfile_processor.select_range(entries, lo, hi)

        logger.info(f"Checking {sequence} against {bfile_path} over {lo}..{hi}")
        started = time.perf_counter()
        tally = ReportTally("oeis-check", f"{sequence}-bfile", lo, hi)
        for entry in selected:
            if not tally.record(entry.index, entry.value, sequence_value_via_l(sequence, entry.index)):
                logger.warning(
                    f"{sequence}: b-file has a({entry.index}) = {entry.value}, L_n route disagrees",
                    extra={"identity": sequence, "n": entry.index},
                )
        report = tally.report(time.perf_counter() - started)
        self._log_summary("oeis-check", [report])
        return report

    def run(self, suite: str, lo: int, hi: int, order: int) -> List[VerificationReport]:
        """Run one suite, or every suite for ``all`` (default ranges for the others)."""
        if suite == SERIES_SUITE:
            return self.run_series(order)
        if suite == "all":
            reports: List[VerificationReport] = []
            for name in SUITE_CHECKERS:
                reports.extend(self.run_suite(name, *settings.default_range(name)))
            reports.extend(self.run_series(order))
            return reports
        return self.run_suite(suite, lo, hi)

    def _log_summary(self, suite: str, reports: List[VerificationReport]) -> None:
        failed = [r.identity for r in reports if not r.ok]
        if failed:
            logger.warning(f"Suite {suite}: counterexamples in {', '.join(failed)}")
        else:
            logger.info(f"Suite {suite}: all {len(reports)} identities hold")

    def save_results(self, reports: List[VerificationReport]) -> Tuple[Path, Path]:
        """
        Save reports as JSON and a CSV summary in the output directory.

        Returns:
            Paths of the JSON and CSV files
        """
        self.output_dir.mkdir(parents=True, exist_ok=True)
        timestamp = datetime.now(timezone.utc).strftime("%Y%m%d_%H%M%S")

        json_file = self.output_dir / f"verify_results_{timestamp}.json"
        with open(json_file, "w") as f:
            json.dump(render_json(reports), f, indent=2)
        logger.info(f"Results saved to {json_file}")

        csv_file = self.output_dir / f"verify_summary_{timestamp}.csv"
        with open(csv_file, "w", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(
                ["Suite", "Identity", "Lo", "Hi", "Passed", "Failed", "First_N", "Expected", "Actual"]
            )
            for r in reports:
                c = r.counterexample
                writer.writerow(
                    [
                        r.suite,
                        r.identity,
                        r.lo,
                        r.hi,
                        r.passed,
                        r.failed,
                        c.n if c else "",
                        c.expected if c else "",
                        c.actual if c else "",
                    ]
                )
        logger.info(f"Summary saved to {csv_file}")
        return json_file, csv_file


def render_json(reports: List[VerificationReport]) -> dict:
    """JSON document for a list of reports."""
    return {
        "reports": [r.model_dump() for r in reports],
        "all_passed": all(r.ok for r in reports),
    }


# Global orchestrator instance
_orchestrator = None


def get_orchestrator() -> VerificationOrchestrator:
    """Get the global orchestrator instance."""
    global _orchestrator
    if _orchestrator is None:
        _orchestrator = VerificationOrchestrator()
    return _orchestrator
