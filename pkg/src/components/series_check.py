"""Truncated t-series with Laurent-polynomial coefficients in q.

Checks the generating product

    prod_{m>=1} (1 - t^m)^2 / ((1 - q t^m)(1 - q^-1 t^m))
        = 1 + (q + q^-1 - 2) * sum_{n>=1} P_n(q) / q^(n-1) * t^n

up to a finite order N. Factors with m > N only touch powers beyond t^N, so
cutting the product at m = N is exact for every coefficient kept.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from src.components.arith_core import divisors
from src.components.interval_polys import FamilySpec, P_FAMILY, build_poly
from src.utils.exceptions import require
from src.utils.logger import get_logger

logger = get_logger(__name__)


class QLaurent:
    """Sparse Laurent polynomial in q with integer coefficients, zeros never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Dict[int, int]] = None):
        self._terms: Dict[int, int] = {e: c for e, c in (terms or {}).items() if c != 0}

    @classmethod
    def constant(cls, c: int) -> "QLaurent":
        return cls({0: c})

    @property
    def terms(self) -> Dict[int, int]:
        return dict(self._terms)

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def valuation(self) -> Optional[int]:
        return min(self._terms) if self._terms else None

    def degree(self) -> Optional[int]:
        return max(self._terms) if self._terms else None

    def exponents(self) -> List[int]:
        return sorted(self._terms)

    def shift(self, k: int) -> "QLaurent":
        """Multiply by ``q**k``."""
        return QLaurent({e + k: c for e, c in self._terms.items()})

    def scale(self, s: int) -> "QLaurent":
        return QLaurent({e: s * c for e, c in self._terms.items()})

    def __add__(self, other: "QLaurent") -> "QLaurent":
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return QLaurent(out)

    def __sub__(self, other: "QLaurent") -> "QLaurent":
        return self + other.scale(-1)

    def __mul__(self, other: "QLaurent") -> "QLaurent":
        out: Dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return QLaurent(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{self._terms[e]}*q^{e}" for e in self.exponents())

    def is_palindromic(self) -> bool:
        return all(self._terms.get(-e) == c for e, c in self._terms.items())

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())


# q + q^-1 - 2
KERNEL = QLaurent({1: 1, 0: -2, -1: 1})


def _synthetic_division_by_q_minus_one(coeffs: List[int]) -> List[int]:
    """Quotient of an ascending coefficient list by (q - 1), remainder dropped."""
    if len(coeffs) < 2:
        return [0]
    out = [0] * (len(coeffs) - 1)
    carry = 0
    for i in range(len(coeffs) - 1, 0, -1):
        carry += coeffs[i]
        out[i - 1] = carry
    return out


def divide_by_kernel(p: QLaurent) -> Tuple[QLaurent, QLaurent]:
    """
    Formal division by ``q + q^-1 - 2 = q^-1 (q - 1)^2``.

    Returns:
        ``(quotient, remainder)`` with ``p == quotient * KERNEL + remainder``;
        the remainder is zero exactly when the division is exact.
    """
    if p.is_zero():
        return QLaurent(), QLaurent()
    # q p = q^(v+1) A(q) with A an ordinary polynomial; divide A by (q - 1) twice
    v = p.valuation()
    quotient = [p.coefficient(e) for e in range(v, p.degree() + 1)]
    for _ in range(2):
        quotient = _synthetic_division_by_q_minus_one(quotient)

    quotient_poly = QLaurent({i + v + 1: c for i, c in enumerate(quotient)})
    remainder_poly = p - quotient_poly * KERNEL
    return quotient_poly, remainder_poly


@dataclass
class TruncatedSeries:
    """Coefficients of ``t**0 .. t**order`` as QLaurent values."""

    order: int
    coeffs: List[QLaurent] = field(default_factory=list)

    def __post_init__(self):
        require(self.order >= 0, f"series order must be >= 0, got {self.order}")
        if not self.coeffs:
            self.coeffs = [QLaurent() for _ in range(self.order + 1)]
        require(
            len(self.coeffs) == self.order + 1,
            f"expected {self.order + 1} coefficients, got {len(self.coeffs)}",
        )

    def __getitem__(self, power: int) -> QLaurent:
        return self.coeffs[power]


@dataclass(frozen=True)
class SeriesMismatch:
    """First place two series disagree."""

    t_power: int
    q_exponent: int
    expected: int
    actual: int


def _times_one_minus_t_power(series: List[QLaurent], m: int) -> List[QLaurent]:
    """Multiply by ``(1 - t^m)``."""
    return [
        c - series[i - m] if i >= m else c for i, c in enumerate(series)
    ]


def _over_one_minus_monomial(series: List[QLaurent], m: int, q_power: int) -> List[QLaurent]:
    """
    Multiply by ``sum_{j>=0} q^(j*q_power) t^(m*j)``, truncated.

    Evaluated as the recurrence ``out[i] = series[i] + q^q_power * out[i - m]``.
    """
    out = list(series)
    for i in range(m, len(out)):
        out[i] = out[i] + out[i - m].shift(q_power)
    return out


def product_series(order: int) -> TruncatedSeries:
    """
    The generating product truncated at ``t**order``.

    Args:
        order: Truncation order ``N >= 1``
    """
    require(order >= 1, f"series order must be >= 1, got {order}")
    coeffs = [QLaurent.constant(1)] + [QLaurent() for _ in range(order)]
    for m in range(1, order + 1):
        coeffs = _times_one_minus_t_power(coeffs, m)
        coeffs = _times_one_minus_t_power(coeffs, m)
        coeffs = _over_one_minus_monomial(coeffs, m, 1)
        coeffs = _over_one_minus_monomial(coeffs, m, -1)
    logger.debug(f"Expanded generating product to order {order}")
    return TruncatedSeries(order=order, coeffs=coeffs)


def quotient_series(family: FamilySpec, order: int) -> TruncatedSeries:
    """``sum_{n=1}^{order} F_n(q) / q^(n-1) t^n`` for the given family (t^0 term is 0)."""
    require(order >= 1, f"series order must be >= 1, got {order}")
    coeffs = [QLaurent()]
    for n in range(1, order + 1):
        coeffs.append(QLaurent(build_poly(n, family, divisors(n)).to_laurent_dict()))
    return TruncatedSeries(order=order, coeffs=coeffs)


def rhs_series(order: int, family: FamilySpec = P_FAMILY) -> TruncatedSeries:
    """``1 + (q + q^-1 - 2) sum_{n=1}^{order} F_n(q) / q^(n-1) t^n``."""
    quotients = quotient_series(family, order)
    coeffs = [QLaurent.constant(1)] + [KERNEL * c for c in quotients.coeffs[1:]]
    return TruncatedSeries(order=order, coeffs=coeffs)


def truncate(series: TruncatedSeries, order: int) -> TruncatedSeries:
    """Drop every power above ``t**order``."""
    require(0 <= order <= series.order, f"cannot truncate order {series.order} to {order}")
    return TruncatedSeries(order=order, coeffs=list(series.coeffs[: order + 1]))


def first_mismatch(expected: QLaurent, actual: QLaurent, t_power: int) -> Optional[SeriesMismatch]:
    """Lowest q-exponent where two coefficients differ, or None."""
    for e in sorted(set(expected.exponents()) | set(actual.exponents())):
        if expected.coefficient(e) != actual.coefficient(e):
            return SeriesMismatch(t_power, e, expected.coefficient(e), actual.coefficient(e))
    return None


def series_equal(
    lhs: TruncatedSeries, rhs: TruncatedSeries
) -> Tuple[bool, Optional[SeriesMismatch]]:
    """
    Compare two series coefficient by coefficient.

    Returns:
        ``(True, None)`` on agreement, otherwise ``(False, mismatch)`` at the lowest
        differing t-power (``expected`` taken from ``lhs``)
    """
    require(lhs.order == rhs.order, f"order mismatch: {lhs.order} vs {rhs.order}")
    for power, (left, right) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
        mismatch = first_mismatch(left, right, power)
        if mismatch is not None:
            return False, mismatch
    return True, None


@dataclass
class GeneratingProductCheck:
    """Per-t-power results of the generating-product comparison."""

    order: int
    mismatches: Dict[int, SeriesMismatch]
    division_failures: Dict[int, str]

    @property
    def passed(self) -> bool:
        return not self.mismatches and not self.division_failures


def check_generating_product(order: int, powers: Optional[Iterable[int]] = None) -> GeneratingProductCheck:
    """
    Compare both sides at each t-power and divide the product side by the kernel.

    A t-power fails the division check when the remainder is non-zero or the
    quotient is not a palindromic Laurent polynomial with positive coefficients.
    """
    lhs = product_series(order)
    rhs = rhs_series(order)
    mismatches: Dict[int, SeriesMismatch] = {}
    division_failures: Dict[int, str] = {}

    for power in powers if powers is not None else range(order + 1):
        mismatch = first_mismatch(lhs[power], rhs[power], power)
        if mismatch is not None:
            mismatches[power] = mismatch
        if power == 0:
            continue
        quotient, remainder = divide_by_kernel(lhs[power])
        if not remainder.is_zero():
            division_failures[power] = f"remainder {remainder!r}"
        elif not (quotient.is_palindromic() and quotient.is_nonnegative()):
            division_failures[power] = f"quotient {quotient!r} not palindromic/non-negative"

    return GeneratingProductCheck(
        order=order, mismatches=mismatches, division_failures=division_failures
    )
