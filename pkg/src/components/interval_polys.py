"""Divisor-interval polynomials L_n(q) and P_n(q).

A polynomial is stored centred: ``coeffs[k + n - 1]`` is the coefficient of
``q**k`` in ``F_n(q) / q**(n-1)`` for ``k`` in ``[-(n-1), n-1]``. Array position
``j`` is therefore also the exponent of ``q`` in ``F_n(q)`` itself.

Every count comes from the integer form of the interval membership test

    d/rho - n/d <= k < d - n/(rho d)

so no logarithm or square root is ever evaluated.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.components.arith_core import ceil_div, divisors
from src.config import settings
from src.utils.exceptions import ContractViolation, require
from src.utils.logger import get_logger

logger = get_logger(__name__)

SUPPORTED_ORDERS = (1, 2, 3, 4, 6)

# zeta_m ** r written in the basis {1, zeta_m}
POWER_BASIS: Dict[int, Tuple[Tuple[int, int], ...]] = {
    1: ((1, 0),),
    2: ((1, 0), (-1, 0)),
    3: ((1, 0), (0, 1), (-1, -1)),
    4: ((1, 0), (0, 1), (-1, 0), (0, -1)),
    6: ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)),
}

# CLI point names -> root-of-unity order
EVALUATION_POINTS = {"1": 1, "-1": 2, "i": 4, "zeta4": 4, "zeta3": 3, "zeta6": 6}


@dataclass(frozen=True)
class FamilySpec:
    """Interval family: rho = 3 gives L_n (length ln 3), rho = 2 gives P_n (length ln 2)."""

    rho: int

    def __post_init__(self):
        require(self.rho in (2, 3), f"family rho must be 2 or 3, got {self.rho}")

    @property
    def name(self) -> str:
        return "L" if self.rho == 3 else "P"

    @classmethod
    def from_name(cls, name: str) -> "FamilySpec":
        """Look up a family by its letter (``L`` or ``P``)."""
        key = name.strip().upper()
        if key == "L":
            return L_FAMILY
        if key == "P":
            return P_FAMILY
        raise ContractViolation(f"unknown family {name!r}, expected L or P")


L_FAMILY = FamilySpec(3)
P_FAMILY = FamilySpec(2)
FAMILIES = (L_FAMILY, P_FAMILY)


@dataclass(frozen=True)
class CyclotomicValue:
    """Exact element ``a + b * zeta_m`` for ``m`` in {1, 2, 3, 4, 6}."""

    order: int
    a: int
    b: int = 0

    def __post_init__(self):
        require(
            self.order in SUPPORTED_ORDERS,
            f"unsupported root-of-unity order {self.order}",
        )
        if self.order in (1, 2):
            require(self.b == 0, "rational points carry no zeta component")

    def norm_squared(self) -> int:
        return norm_squared(self)

    def real_part_doubled(self) -> int:
        return real_part_doubled(self)

    def as_dict(self) -> Dict[str, int]:
        return {"order": self.order, "a": self.a, "b": self.b}


@dataclass(frozen=True)
class DivisorContribution:
    """One divisor and the half-open range ``[k_lo, k_hi)`` of exponents it feeds."""

    d: int
    k_lo: int
    k_hi: int

    @property
    def count(self) -> int:
        return self.k_hi - self.k_lo


@dataclass(frozen=True, eq=False)
class SymmetricLaurentPoly:
    """Centred coefficient vector of ``F_n(q) / q**(n-1)``."""

    n: int
    family: FamilySpec
    coeffs: np.ndarray

    def __post_init__(self):
        require(
            len(self.coeffs) == 2 * self.n - 1,
            f"expected {2 * self.n - 1} coefficients for n={self.n}, got {len(self.coeffs)}",
        )
        self.coeffs.setflags(write=False)

    def __eq__(self, other):
        if not isinstance(other, SymmetricLaurentPoly):
            return NotImplemented
        return (
            self.n == other.n
            and self.family == other.family
            and np.array_equal(self.coeffs, other.coeffs)
        )

    @property
    def center(self) -> int:
        return self.n - 1

    def coefficient(self, k: int) -> int:
        """Coefficient of ``q**k`` in the centred polynomial (0 outside the support)."""
        if abs(k) > self.center:
            return 0
        return int(self.coeffs[k + self.center])

    def items(self) -> List[Tuple[int, int]]:
        """``(k, c)`` pairs in ascending ``k``."""
        return [(j - self.center, int(c)) for j, c in enumerate(self.coeffs)]

    def as_list(self) -> List[int]:
        return [int(c) for c in self.coeffs]

    def to_laurent_dict(self) -> Dict[int, int]:
        """Sparse ``{k: c}`` view without zero entries."""
        return {k: c for k, c in self.items() if c != 0}

    def is_monic_ends(self) -> bool:
        return int(self.coeffs[0]) == 1 and int(self.coeffs[-1]) == 1

    def is_palindromic(self) -> bool:
        return bool(np.array_equal(self.coeffs, self.coeffs[::-1]))

    def is_nonnegative(self) -> bool:
        return bool((self.coeffs >= 0).all())


def _check_divisor(n: int, d: int) -> None:
    require(n >= 1, f"expected n >= 1, got {n}")
    require(d >= 1 and n % d == 0, f"{d} does not divide {n}")


def hit_range(n: int, d: int, family: FamilySpec) -> Tuple[int, int]:
    """
    Exact half-open range ``[k_lo, k_hi)`` of exponents whose interval holds ``ln d``.

    Args:
        n: Polynomial index
        d: A divisor of ``n``
        family: Interval family

    Returns:
        ``(ceil((d^2 - rho n) / (rho d)), ceil((rho d^2 - n) / (rho d)))``
    """
    _check_divisor(n, d)
    rho = family.rho
    k_lo = ceil_div(d * d - rho * n, rho * d)
    k_hi = ceil_div(rho * d * d - n, rho * d)
    return k_lo, k_hi


def hit_count(n: int, d: int, family: FamilySpec) -> int:
    """Number of integers ``k`` whose interval contains ``ln d``."""
    k_lo, k_hi = hit_range(n, d, family)
    return k_hi - k_lo


def divisor_contributions(
    n: int, family: FamilySpec, divs: Optional[Sequence[int]] = None
) -> List[DivisorContribution]:
    """Per-divisor hit ranges, in ascending order of ``d``."""
    if divs is None:
        divs = divisors(n)
    return [DivisorContribution(d, *hit_range(n, d, family)) for d in divs]


def build_poly(
    n: int, family: FamilySpec, divs: Optional[Sequence[int]] = None
) -> SymmetricLaurentPoly:
    """
    Build ``F_n(q) / q**(n-1)`` by range increments on a difference array.

    Args:
        n: Polynomial index ``n >= 1``
        family: Interval family
        divs: Precomputed divisors of ``n`` (ascending), if available

    Returns:
        The centred polynomial
    """
    require(n >= 1, f"expected n >= 1, got {n}")
    offset = n - 1
    diff = np.zeros(2 * n, dtype=np.int64)
    for contribution in divisor_contributions(n, family, divs):
        lo = contribution.k_lo + offset
        hi = contribution.k_hi + offset
        # contributing k never leave [-(n-1), n-1]
        if lo < 0 or hi > 2 * n - 1:
            raise ContractViolation(
                f"divisor {contribution.d} of n={n} reaches k outside "
                f"[{-offset}, {offset}]: [{contribution.k_lo}, {contribution.k_hi})"
            )
        diff[lo] += 1
        diff[hi] -= 1
    coeffs = np.cumsum(diff[:-1])
    return SymmetricLaurentPoly(n=n, family=family, coeffs=coeffs)


def eval_at_one(p: SymmetricLaurentPoly) -> int:
    """``F_n(1)``: the sum of all coefficients."""
    return int(p.coeffs.sum())


def eval_at_minus_one(p: SymmetricLaurentPoly) -> int:
    """``F_n(-1)`` including the ``(-1)**(n-1)`` prefactor."""
    return int(p.coeffs[0::2].sum()) - int(p.coeffs[1::2].sum())


def reduce_residue_sums(order: int, sums: Sequence[int]) -> CyclotomicValue:
    """
    Collapse ``sum_r sums[r] * zeta**r`` into the basis {1, zeta}.

    Args:
        order: Root-of-unity order
        sums: Coefficient total for each exponent residue ``r`` modulo ``order``
    """
    require(order in POWER_BASIS, f"unsupported root-of-unity order {order}")
    a = b = 0
    for s, (x, y) in zip(sums, POWER_BASIS[order]):
        a += s * x
        b += s * y
    return CyclotomicValue(order=order, a=a, b=b)


def eval_cyclotomic(p: SymmetricLaurentPoly, order: int) -> CyclotomicValue:
    """
    Exact ``F_n(zeta_order)``, prefactor included.

    Coefficients are summed per exponent residue class before reduction.
    """
    require(order in POWER_BASIS, f"unsupported root-of-unity order {order}")
    sums = [int(p.coeffs[r::order].sum()) for r in range(order)]
    return reduce_residue_sums(order, sums)


def _count_in_residue(start: int, stop: int, r: int, m: int) -> int:
    """Number of ``j`` in ``[start, stop)`` with ``j ≡ r (mod m)``."""
    return ceil_div(stop - r, m) - ceil_div(start - r, m)


def stream_eval(
    n: int, family: FamilySpec, order: int, divs: Optional[Sequence[int]] = None
) -> CyclotomicValue:
    """
    ``F_n(zeta_order)`` straight from the hit ranges, without the coefficient array.

    Costs O(tau(n) * order) after the divisors are known.
    """
    require(order in POWER_BASIS, f"unsupported root-of-unity order {order}")
    offset = n - 1
    sums = [0] * order
    for contribution in divisor_contributions(n, family, divs):
        start, stop = contribution.k_lo + offset, contribution.k_hi + offset
        for r in range(order):
            sums[r] += _count_in_residue(start, stop, r, order)
    return reduce_residue_sums(order, sums)


def evaluate_orders(
    n: int, family: FamilySpec, orders: Sequence[int], divs: Optional[Sequence[int]] = None
) -> List[CyclotomicValue]:
    """Values at several ``zeta_order``, building the polynomial at most once."""
    if n > settings.dense_limit:
        return [stream_eval(n, family, order, divs) for order in orders]
    poly = build_poly(n, family, divs)
    return [eval_cyclotomic(poly, order) for order in orders]


def evaluate(
    n: int, family: FamilySpec, order: int, divs: Optional[Sequence[int]] = None
) -> CyclotomicValue:
    """Evaluate at ``zeta_order``, materialising the polynomial only up to ``dense_limit``."""
    return evaluate_orders(n, family, (order,), divs)[0]


def eval_at_integer(p: SymmetricLaurentPoly, q: int) -> int:
    """Exact ``F_n(q)`` for an integer ``q`` (Horner over the full-degree coefficients)."""
    value = 0
    for c in reversed(p.as_list()):
        value = value * q + c
    return value


def norm_squared(v: CyclotomicValue) -> int:
    """``|v|**2`` as an exact integer."""
    a, b = v.a, v.b
    if v.order == 4:
        return a * a + b * b
    if v.order == 3:
        return a * a - a * b + b * b
    if v.order == 6:
        return a * a + a * b + b * b
    return a * a


def real_part_doubled(v: CyclotomicValue) -> int:
    """``2 * Re(v)`` for orders 3 and 6."""
    if v.order == 3:
        return 2 * v.a - v.b
    if v.order == 6:
        return 2 * v.a + v.b
    raise ContractViolation(f"real_part_doubled needs order 3 or 6, got {v.order}")


def evaluation_point(name: str) -> int:
    """Map a point name (``1``, ``-1``, ``i``, ``zeta3``, ``zeta6``) to its order."""
    try:
        return EVALUATION_POINTS[name.strip().lower()]
    except KeyError:
        raise ContractViolation(
            f"unknown evaluation point {name!r}; expected one of "
            f"{', '.join(EVALUATION_POINTS)}"
        ) from None
