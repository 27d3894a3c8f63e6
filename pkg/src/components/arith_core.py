"""Exact integer utilities, divisor enumeration and multiplicative closed forms.

Everything here works on Python integers. The closed forms serve as the
independent oracles for the polynomial identities checked elsewhere.
"""

from math import gcd, isqrt
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from src.utils.exceptions import require
from src.utils.logger import get_logger

logger = get_logger(__name__)


def ceil_div(numerator: int, denominator: int) -> int:
    """
    Exact ceiling of ``numerator / denominator``.

    Args:
        numerator: Any integer
        denominator: Positive integer

    Returns:
        The smallest integer not below the rational quotient

    Raises:
        ContractViolation: If ``denominator <= 0``
    """
    require(denominator > 0, f"ceil_div needs a positive denominator, got {denominator}")
    return -((-numerator) // denominator)


def floor_div(numerator: int, denominator: int) -> int:
    """Exact floor of ``numerator / denominator`` for a positive denominator."""
    require(denominator > 0, f"floor_div needs a positive denominator, got {denominator}")
    return numerator // denominator


def _check_natural(n: int) -> None:
    require(isinstance(n, int) and n >= 1, f"expected an integer n >= 1, got {n!r}")


def divisors(n: int) -> List[int]:
    """
    All divisors of ``n`` in ascending order.

    Trial division up to the square root, emitting ``d`` and ``n // d``.

    Args:
        n: Integer ``n >= 1``

    Returns:
        Ascending list starting at 1 and ending at ``n``
    """
    _check_natural(n)
    small: List[int] = []
    large: List[int] = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    small.extend(reversed(large))
    return small


def divisor_count(n: int) -> int:
    """Number of divisors of ``n``."""
    return len(divisors(n))


def sigma(n: int) -> int:
    """Sum of the divisors of ``n``."""
    return sum(divisors(n))


def chi3(n: int) -> int:
    """Nonprincipal Dirichlet character modulo 3."""
    require(n >= 0, f"chi3 is defined here for n >= 0, got {n}")
    return (0, 1, -1)[n % 3]


def divisor_count_mod(n: int, a: int, m: int, divs: Optional[Sequence[int]] = None) -> int:
    """
    Count divisors ``d`` of ``n`` with ``d ≡ a (mod m)``.

    Args:
        n: Integer ``n >= 1``
        a: Residue (reduced modulo ``m``)
        m: Modulus ``m >= 1``
        divs: Precomputed divisor list of ``n``, if the caller has one

    Returns:
        Number of matching divisors
    """
    require(m >= 1, f"modulus must be >= 1, got {m}")
    if divs is None:
        divs = divisors(n)
    residue = a % m
    return sum(1 for d in divs if d % m == residue)


def a002324_closed(n: int, divs: Optional[Sequence[int]] = None) -> int:
    """Closed form ``d_{1,3}(n) - d_{2,3}(n)``, i.e. r_{1,1,1}(n) / 6."""
    if divs is None:
        divs = divisors(n)
    return sum(chi3(d) for d in divs)


def a096936_closed(n: int, divs: Optional[Sequence[int]] = None) -> int:
    """
    Closed form ``d_{1,3} - d_{2,3} + 2 (d_{4,12} - d_{8,12})``, i.e. r_{1,0,3}(n) / 2.
    """
    if divs is None:
        divs = divisors(n)
    total = 0
    for d in divs:
        total += chi3(d)
        r12 = d % 12
        if r12 == 4:
            total += 2
        elif r12 == 8:
            total -= 2
    return total


def _neg_one_pow(e: int) -> int:
    return -1 if e & 1 else 1


def convolution_lhs(n: int, divs: Optional[Sequence[int]] = None) -> int:
    """
    Dirichlet convolution ``sum_{d|n} (-1)^(n/d - 1) (-1)^(d - 1) chi3(d)``.

    Equals ``(-1)^(n-1) * a096936_closed(n)``.
    """
    if divs is None:
        divs = divisors(n)
    return sum(_neg_one_pow(n // d - 1) * _neg_one_pow(d - 1) * chi3(d) for d in divs)


def sign_halfdiff(n: int) -> int:
    """Half difference ``((-1)^floor(n/3) - (-1)^ceil(n/3)) / 2``, always in {-1, 0, 1}."""
    _check_natural(n)
    return (_neg_one_pow(floor_div(n, 3)) - _neg_one_pow(ceil_div(n, 3))) // 2


def ceiling_defect(n: int) -> int:
    """``3 * ceil(n/3) - n``: 0, 2, 1 for n ≡ 0, 1, 2 (mod 3)."""
    return 3 * ceil_div(n, 3) - n


def floor_defect(n: int) -> int:
    """``n - 3 * floor(n/3)``: 0, 1, 2 for n ≡ 0, 1, 2 (mod 3)."""
    return n - 3 * floor_div(n, 3)


def dyadic_residue_counts(k: int) -> Dict[str, int]:
    """
    Closed forms of d_{1,3}, d_{2,3}, d_{4,12}, d_{8,12} at ``2**k`` for ``k >= 1``.
    """
    require(k >= 1, f"dyadic closed forms need k >= 1, got {k}")
    half_floor, half_ceil = k // 2, ceil_div(k, 2)
    return {
        "d_1_3": half_floor + 1,
        "d_2_3": half_ceil,
        "d_4_12": half_floor,
        "d_8_12": half_ceil - 1,
    }


def is_multiplicative_pair(f: Callable[[int], int], m: int, n: int) -> bool:
    """True when ``gcd(m, n) != 1`` or ``f(mn) == f(m) f(n)``."""
    if gcd(m, n) != 1:
        return True
    return f(m * n) == f(m) * f(n)


class DivisorSieve:
    """Segmented sieve for batch divisor enumeration over ``[start, limit]``."""

    def __init__(self, limit: int, start: int = 1):
        """
        Factor every n in the segment.

        Only primes up to ``isqrt(limit)`` are sieved.

        Args:
            limit: Largest n the sieve must cover
            start: Smallest n the sieve must cover
        """
        _check_natural(limit)
        _check_natural(start)
        require(start <= limit, f"empty segment {start}..{limit}")
        self.start = start
        self.limit = limit
        self.spf = smallest_prime_factor_sieve(isqrt(limit))
        self._factors = _segment_factorizations(start, limit, self.spf)
        logger.debug(f"Factored segment {start}..{limit}")

    def factorize(self, n: int) -> Dict[int, int]:
        """Prime factorisation of ``n`` as ``{prime: exponent}``."""
        require(
            self.start <= n <= self.limit,
            f"n={n} is outside the sieve segment {self.start}..{self.limit}",
        )
        return dict(self._factors[n - self.start])

    def divisors(self, n: int) -> List[int]:
        """Divisors of ``n`` in ascending order, generated from the factorisation."""
        return divisors_from_factorization(self.factorize(n))


def _segment_factorizations(lo: int, hi: int, spf: np.ndarray) -> List[Dict[int, int]]:
    primes = np.flatnonzero(spf == np.arange(len(spf)))
    residual = list(range(lo, hi + 1))
    factors: List[Dict[int, int]] = [{} for _ in residual]
    for p in primes[primes >= 2].tolist():
        for m in range(ceil_div(lo, p) * p, hi + 1, p):
            i = m - lo
            r, e = residual[i], 0
            while r % p == 0:
                r //= p
                e += 1
            residual[i] = r
            factors[i][p] = e
    # what remains above 1 is a single prime larger than isqrt(hi)
    for i, r in enumerate(residual):
        if r > 1:
            factors[i][r] = 1
    return factors


def smallest_prime_factor_sieve(limit: int) -> np.ndarray:
    """
    Smallest prime factor of every integer in ``[0, limit]``.

    Entries 0 and 1 hold 0 and 1 respectively.
    """
    spf = np.zeros(limit + 1, dtype=np.int64)
    if limit >= 1:
        spf[1] = 1
    p = 2
    while p * p <= limit:
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
        p += 1
    unmarked = np.flatnonzero(spf == 0)
    spf[unmarked] = unmarked
    return spf


def factorize(n: int, spf: Optional[np.ndarray] = None) -> Dict[int, int]:
    """
    Prime factorisation of ``n``.

    Uses the sieve when one covering ``n`` is supplied, trial division otherwise.
    """
    _check_natural(n)
    factors: Dict[int, int] = {}
    if spf is not None and n < len(spf):
        while n > 1:
            p = int(spf[n])
            factors[p] = factors.get(p, 0) + 1
            n //= p
        return factors

    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def divisors_from_factorization(factors: Dict[int, int]) -> List[int]:
    """Expand ``{prime: exponent}`` into the ascending divisor list."""
    divs = [1]
    for p, e in factors.items():
        divs = [d * p**j for d in divs for j in range(e + 1)]
    divs.sort()
    return divs
