"""Per-index identity checks grouped into verification suites.

Each checker takes ``n`` and its ascending divisor list and returns one
``IdentityCheck`` per identity of the suite, always in the same order.
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence, Tuple, Union

from src.components import arith_core as ac
from src.components.interval_polys import (
    FAMILIES,
    L_FAMILY,
    P_FAMILY,
    SUPPORTED_ORDERS,
    FamilySpec,
    build_poly,
    eval_at_minus_one,
    eval_at_one,
    eval_cyclotomic,
    evaluate_orders,
    hit_count,
    hit_range,
    norm_squared,
    real_part_doubled,
    stream_eval,
)
from src.components.qform_oracle import (
    EISENSTEIN,
    FORM_1_0_2,
    FORM_1_0_3,
    SUM_OF_SQUARES,
    representation_count,
)
from src.utils.exceptions import ContractViolation

Value = Union[int, str]


@dataclass(frozen=True)
class IdentityCheck:
    """Both sides of one identity at one index."""

    identity: str
    expected: Value
    actual: Value

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


Checker = Callable[[int, Sequence[int]], List[IdentityCheck]]


def _sign(e: int) -> int:
    return -1 if e & 1 else 1


def _as_text(values: Sequence[object]) -> str:
    return ",".join(str(v) for v in values)


def check_theorem_main(n: int, divs: Sequence[int]) -> List[IdentityCheck]:
    """Both identities of the main theorem against the divisor closed forms."""
    at_one, at_minus_one = evaluate_orders(n, L_FAMILY, (1, 2), divs)
    return [
        IdentityCheck(
            "a002324-from-L",
            ac.a002324_closed(n, divs),
            4 * sum(divs) - 3 * at_one.a,
        ),
        IdentityCheck("a096936-from-L", ac.a096936_closed(n, divs), at_minus_one.a),
    ]


# 4 * s for the zeta_6 identity, indexed by n mod 3
_ZETA6_SCALE = (4, 1, 2)


def check_p_identities(n: int, divs: Sequence[int]) -> List[IdentityCheck]:
    """Evaluations of P_n at 1, -1, i, zeta_3 and zeta_6 against lattice counts."""
    at_one, at_minus_one, at_i, at_zeta3, at_zeta6 = evaluate_orders(
        n, P_FAMILY, (1, 2, 4, 3, 6), divs
    )
    r_101 = representation_count(SUM_OF_SQUARES, n)
    r_102 = representation_count(FORM_1_0_2, n)
    r_111 = representation_count(EISENSTEIN, n)
    return [
        IdentityCheck("p-at-one-sigma", sum(divs), at_one.a),
        IdentityCheck("p-at-minus-one", r_101, 4 * at_minus_one.a),
        IdentityCheck("p-at-i-norm", r_102 * r_102, 4 * norm_squared(at_i)),
        IdentityCheck("p-at-zeta3-real", r_111, 3 * real_part_doubled(at_zeta3)),
        IdentityCheck(
            "p-at-zeta6-norm",
            (_ZETA6_SCALE[n % 3] * r_101) ** 2,
            16 * norm_squared(at_zeta6),
        ),
    ]


def check_closure(n: int, divs: Sequence[int]) -> List[IdentityCheck]:
    """Main-theorem values against brute-force representation counts."""
    at_one, at_minus_one = evaluate_orders(n, L_FAMILY, (1, 2), divs)
    return [
        IdentityCheck(
            "a002324-brute-force",
            representation_count(EISENSTEIN, n),
            6 * (4 * sum(divs) - 3 * at_one.a),
        ),
        IdentityCheck(
            "a096936-brute-force",
            representation_count(FORM_1_0_3, n),
            2 * at_minus_one.a,
        ),
    ]


def geometric_sum_direct(n: int, d: int, family: FamilySpec) -> int:
    """Alternating sum of ``(-1)**k`` over the hit range, term by term."""
    k_lo, k_hi = hit_range(n, d, family)
    return sum(_sign(k) for k in range(k_lo, k_hi))


def geometric_sum_closed(n: int, d: int, family: FamilySpec) -> int:
    """``((-1)**k_lo - (-1)**k_hi) / 2``."""
    k_lo, k_hi = hit_range(n, d, family)
    return (_sign(k_lo) - _sign(k_hi)) // 2


def check_lemmas(n: int, divs: Sequence[int]) -> List[IdentityCheck]:
    """Auxiliary lemmas and the intermediate steps of both proof chains."""
    at_one, at_minus_one = evaluate_orders(n, L_FAMILY, (1, 2), divs)
    sign = _sign(n - 1)
    direct = [geometric_sum_direct(n, d, f) for f in FAMILIES for d in divs]
    closed = [geometric_sum_closed(n, d, f) for f in FAMILIES for d in divs]
    at_one_expansion = (
        sum(d + n // d for d in divs)
        - sum(ac.floor_div(n // d, 3) for d in divs)
        - sum(ac.ceil_div(d, 3) for d in divs)
    )
    return [
        IdentityCheck("ceiling-defect", (0, 2, 1)[n % 3], ac.ceiling_defect(n)),
        IdentityCheck("floor-defect", n % 3, ac.floor_defect(n)),
        IdentityCheck("sign-half-difference", sign * ac.chi3(n), ac.sign_halfdiff(n)),
        IdentityCheck(
            "convolution", sign * ac.a096936_closed(n, divs), ac.convolution_lhs(n, divs)
        ),
        IdentityCheck("geometric-sum", _as_text(closed), _as_text(direct)),
        IdentityCheck("at-one-expansion", at_one_expansion, at_one.a),
        IdentityCheck(
            "minus-one-chain",
            sum(_sign(n // d - 1) * ac.sign_halfdiff(d) for d in divs),
            sign * at_minus_one.a,
        ),
    ]


_STRUCTURE_OK = "monic,palindromic,nonnegative"


def _structure(n: int, family: FamilySpec, divs: Sequence[int]) -> str:
    try:
        poly = build_poly(n, family, divs)
    except ContractViolation:
        return "out-of-bounds"
    held = [
        name
        for name, ok in (
            ("monic", poly.is_monic_ends()),
            ("palindromic", poly.is_palindromic()),
            ("nonnegative", poly.is_nonnegative()),
        )
        if ok
    ]
    return ",".join(held)


def check_structural(n: int, divs: Sequence[int]) -> List[IdentityCheck]:
    """Monic ends, palindromic coefficients, non-negativity, in-bounds writes."""
    return [
        IdentityCheck(f"{f.name}-structure", _STRUCTURE_OK, _structure(n, f, divs))
        for f in FAMILIES
    ]


def hit_count_scan(n: int, d: int, family: FamilySpec) -> int:
    """
    Direct count of ``k`` in ``[-(n+2), n+2]`` with ``d/rho - n/d <= k < d - n/(rho d)``,
    using cross-multiplied integer comparisons.
    """
    rho = family.rho
    return sum(
        1
        for k in range(-(n + 2), n + 3)
        if d * d - rho * n <= rho * d * k < rho * d * d - n
    )


def check_oracle(n: int, divs: Sequence[int]) -> List[IdentityCheck]:
    """Ceiling-difference hit counts against the direct k-scan, per divisor."""
    return [
        IdentityCheck(
            f"{f.name}-hit-count-scan",
            _as_text(hit_count_scan(n, d, f) for d in divs),
            _as_text(hit_count(n, d, f) for d in divs),
        )
        for f in FAMILIES
    ]


def check_paths(n: int, divs: Sequence[int]) -> List[IdentityCheck]:
    """Streaming per-residue evaluation against the materialised polynomial."""
    checks = []
    for f in FAMILIES:
        poly = build_poly(n, f, divs)
        dense = [eval_cyclotomic(poly, m) for m in SUPPORTED_ORDERS]
        dense_text = _as_text(
            [eval_at_one(poly), eval_at_minus_one(poly)] + [(v.a, v.b) for v in dense]
        )
        streamed = [stream_eval(n, f, m, divs) for m in SUPPORTED_ORDERS]
        stream_text = _as_text(
            [streamed[0].a, streamed[1].a] + [(v.a, v.b) for v in streamed]
        )
        checks.append(IdentityCheck(f"{f.name}-stream-vs-dense", dense_text, stream_text))
    return checks


SUITE_CHECKERS: Dict[str, Checker] = {
    "theorem-main": check_theorem_main,
    "p-identities": check_p_identities,
    "closure": check_closure,
    "lemmas": check_lemmas,
    "structural": check_structural,
    "oracle": check_oracle,
    "paths": check_paths,
}

SERIES_SUITE = "series"
SUITE_NAMES: Tuple[str, ...] = tuple(SUITE_CHECKERS) + (SERIES_SUITE,)


def identities_of(suite: str) -> List[str]:
    """Identity names a range suite reports, in report order."""
    return [check.identity for check in SUITE_CHECKERS[suite](1, [1])]
