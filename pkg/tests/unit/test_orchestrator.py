"""Tests for the verification orchestrator."""

import json
from unittest.mock import patch

import pytest

from src.components.identity_suites import SUITE_CHECKERS, IdentityCheck
from src.orchestrator import (
    VerificationOrchestrator,
    get_orchestrator,
    render_json,
    sequence_value_via_l,
)
from src.utils.exceptions import BFileStructureError, UsageError


def _failing_theorem_main(bad):
    def checker(n, divs):
        return [
            IdentityCheck("a002324-from-L", 0, 1 if n in bad else 0),
            IdentityCheck("a096936-from-L", 0, 0),
        ]

    return checker


def _without_timing(reports):
    return [r.model_dump(exclude={"elapsed_seconds"}) for r in reports]


class TestVerificationOrchestrator:
    """Test suite for VerificationOrchestrator."""

    @pytest.fixture
    def orchestrator(self):
        """Create a single-worker orchestrator with small chunks."""
        return VerificationOrchestrator(workers=1, chunk_size=7)

    def test_chunks(self, orchestrator):
        """Test the index range is split into contiguous chunks."""
        assert orchestrator._chunks(1, 20) == [(1, 7), (8, 14), (15, 20)]
        assert orchestrator._chunks(5, 5) == [(5, 5)]

    def test_run_suite_passes(self, orchestrator):
        """Test a suite report covers the whole range."""
        reports = orchestrator.run_suite("theorem-main", 1, 60)
        assert [r.identity for r in reports] == ["a002324-from-L", "a096936-from-L"]
        for report in reports:
            assert report.ok
            assert (report.lo, report.hi, report.passed) == (1, 60, 60)

    def test_worker_count_does_not_change_result(self):
        """Test 1 and 2 workers give identical reports."""
        single = VerificationOrchestrator(workers=1, chunk_size=9).run_suite("lemmas", 1, 80)
        double = VerificationOrchestrator(workers=2, chunk_size=9).run_suite("lemmas", 1, 80)
        assert _without_timing(single) == _without_timing(double)

    def test_minimal_counterexample_across_chunks(self, orchestrator):
        """Test the smallest failing index wins after merging chunks."""
        with patch.dict(SUITE_CHECKERS, {"theorem-main": _failing_theorem_main({5, 9, 30})}):
            reports = orchestrator.run_suite("theorem-main", 1, 40)
        failing = reports[0]
        assert failing.failed == 3
        assert failing.counterexample.n == 5
        assert failing.failing_indices == [5, 9, 30]
        assert reports[1].ok

    def test_rejects_unknown_suite(self, orchestrator):
        """Test unknown suite names raise UsageError."""
        with pytest.raises(UsageError):
            orchestrator.run_suite("nonsense", 1, 5)

    def test_rejects_bad_range(self, orchestrator):
        """Test ranges must satisfy 1 <= lo <= hi."""
        with pytest.raises(UsageError):
            orchestrator.run_suite("theorem-main", 0, 5)
        with pytest.raises(UsageError):
            orchestrator.run_suite("theorem-main", 5, 4)

    def test_run_series(self, orchestrator):
        """Test the series suite reports both identities per t-power."""
        reports = orchestrator.run_series(8)
        assert [r.identity for r in reports] == ["generating-product", "kernel-division"]
        assert all(r.ok and r.passed == 8 for r in reports)

    def test_run_dispatches_series(self, orchestrator):
        """Test run() routes the series suite by name."""
        reports = orchestrator.run("series", 0, 0, 4)
        assert {r.suite for r in reports} == {"series"}

    def test_save_results(self, orchestrator):
        """Test reports are written as JSON and CSV."""
        reports = orchestrator.run_suite("theorem-main", 1, 10)
        json_file, csv_file = orchestrator.save_results(reports)
        document = json.loads(json_file.read_text())
        assert document["all_passed"] is True
        assert len(document["reports"]) == 2
        rows = csv_file.read_text().splitlines()
        assert rows[0].startswith("Suite,Identity")
        assert len(rows) == 3

    def test_render_json(self, orchestrator):
        """Test the JSON document shape."""
        with patch.dict(SUITE_CHECKERS, {"theorem-main": _failing_theorem_main({2})}):
            reports = orchestrator.run_suite("theorem-main", 1, 3)
        document = render_json(reports)
        assert document["all_passed"] is False
        assert document["reports"][0]["counterexample"]["n"] == 2

    def test_singleton(self):
        """Test the global orchestrator is shared."""
        assert get_orchestrator() is get_orchestrator()


class TestOeisCheck:
    """Test suite for the b-file cross-check."""

    @pytest.fixture
    def orchestrator(self):
        """Create an orchestrator instance."""
        return VerificationOrchestrator(workers=1)

    def test_sequence_values_via_l(self, a002324_prefix, a096936_values):
        """Test the L_n route reproduces known terms."""
        assert [sequence_value_via_l("A002324", n) for n in range(1, 21)] == a002324_prefix
        for n, expected in a096936_values.items():
            assert sequence_value_via_l("A096936", n) == expected

    def test_unknown_sequence(self):
        """Test only the two supported sequences are accepted."""
        with pytest.raises(UsageError):
            sequence_value_via_l("A000001", 3)

    def test_clean_bfile(self, orchestrator, bfile_factory, a002324_prefix):
        """Test a correct b-file passes over its whole span."""
        text = "# A002324\n" + "".join(
            f"{n} {v}\n" for n, v in enumerate(a002324_prefix, start=1)
        )
        report = orchestrator.run_oeis_check("A002324", bfile_factory(text))
        assert report.ok
        assert (report.lo, report.hi, report.passed) == (1, 20, 20)
        assert report.identity == "A002324-bfile"

    def test_corrupted_entry(self, orchestrator, bfile_factory, a002324_prefix):
        """Test a single corrupted entry is reported at its index."""
        values = list(a002324_prefix)
        values[6] += 1
        text = "".join(f"{n} {v}\n" for n, v in enumerate(values, start=1))
        report = orchestrator.run_oeis_check("A002324", bfile_factory(text))
        assert report.failed == 1
        assert report.failing_indices == [7]
        assert report.counterexample.n == 7
        assert report.counterexample.expected == 3
        assert report.counterexample.actual == 2

    def test_explicit_range(self, orchestrator, bfile_factory, a002324_prefix):
        """Test an explicit sub-range."""
        text = "".join(f"{n} {v}\n" for n, v in enumerate(a002324_prefix, start=1))
        report = orchestrator.run_oeis_check("A002324", bfile_factory(text), 5, 12)
        assert (report.lo, report.hi, report.passed) == (5, 12, 8)

    def test_range_beyond_file(self, orchestrator, bfile_factory):
        """Test a range past the end of the file is refused."""
        with pytest.raises(BFileStructureError):
            orchestrator.run_oeis_check("A096936", bfile_factory("1 1\n2 0\n"), 1, 5)
