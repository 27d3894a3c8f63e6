"""Pydantic models for verification reports and b-file entries."""

from typing import List, Optional, Union

from pydantic import BaseModel, ConfigDict, model_validator

# Failing indices kept per report
MAX_FAILING_INDICES = 20

Value = Union[int, str]


class BFileEntry(BaseModel):
    """One ``n a(n)`` line of an OEIS b-file."""

    model_config = ConfigDict(frozen=True)

    index: int
    value: int


class Counterexample(BaseModel):
    """An index where the two sides of an identity disagree."""

    n: int
    expected: Value
    actual: Value


class VerificationReport(BaseModel):
    """Pass/fail tally for one identity over an index range."""

    suite: str
    identity: str
    lo: int
    hi: int
    passed: int = 0
    failed: int = 0
    counterexample: Optional[Counterexample] = None
    failing_indices: List[int] = []
    elapsed_seconds: float = 0.0

    @model_validator(mode="after")
    def _consistent(self) -> "VerificationReport":
        if self.passed + self.failed != self.hi - self.lo + 1:
            raise ValueError(
                f"{self.identity}: passed + failed = {self.passed + self.failed}, "
                f"range {self.lo}..{self.hi} has {self.hi - self.lo + 1} indices"
            )
        if (self.failed == 0) != (self.counterexample is None):
            raise ValueError(f"{self.identity}: counterexample must be present iff failed > 0")
        return self

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        """
        Combine reports for adjacent ranges of the same identity.

        Counts add, the minimal-n counterexample wins, elapsed times add.
        """
        if (self.suite, self.identity) != (other.suite, other.identity):
            raise ValueError(
                f"cannot merge {self.suite}/{self.identity} with {other.suite}/{other.identity}"
            )
        first, second = sorted((self, other), key=lambda r: r.lo)
        if second.lo != first.hi + 1:
            raise ValueError(
                f"ranges {first.lo}..{first.hi} and {second.lo}..{second.hi} are not adjacent"
            )

        candidates = [r.counterexample for r in (first, second) if r.counterexample]
        counterexample = min(candidates, key=lambda c: c.n) if candidates else None
        failing = sorted(first.failing_indices + second.failing_indices)[:MAX_FAILING_INDICES]

        return VerificationReport(
            suite=self.suite,
            identity=self.identity,
            lo=first.lo,
            hi=second.hi,
            passed=first.passed + second.passed,
            failed=first.failed + second.failed,
            counterexample=counterexample,
            failing_indices=failing,
            elapsed_seconds=first.elapsed_seconds + second.elapsed_seconds,
        )

    def render_text(self) -> str:
        """One-line summary."""
        status = "PASS" if self.ok else "FAIL"
        line = (
            f"{status} {self.suite}/{self.identity} [{self.lo}..{self.hi}] "
            f"passed={self.passed} failed={self.failed}"
        )
        if self.counterexample:
            c = self.counterexample
            line += f" first_counterexample=(n={c.n}, expected={c.expected}, actual={c.actual})"
        return line


class ReportTally:
    """Accumulates per-index outcomes for one identity before building its report."""

    def __init__(self, suite: str, identity: str, lo: int, hi: int):
        self.suite = suite
        self.identity = identity
        self.lo = lo
        self.hi = hi
        self.passed = 0
        self.failed = 0
        self.counterexample: Optional[Counterexample] = None
        self.failing_indices: List[int] = []

    def record(self, n: int, expected: Value, actual: Value) -> bool:
        """Record one comparison; returns True when the two sides agree."""
        if expected == actual:
            self.passed += 1
            return True
        self.failed += 1
        if self.counterexample is None or n < self.counterexample.n:
            self.counterexample = Counterexample(n=n, expected=expected, actual=actual)
        if len(self.failing_indices) < MAX_FAILING_INDICES:
            self.failing_indices.append(n)
        return False

    def report(self, elapsed_seconds: float = 0.0) -> VerificationReport:
        return VerificationReport(
            suite=self.suite,
            identity=self.identity,
            lo=self.lo,
            hi=self.hi,
            passed=self.passed,
            failed=self.failed,
            counterexample=self.counterexample,
            failing_indices=sorted(self.failing_indices),
            elapsed_seconds=elapsed_seconds,
        )
