"""Lattice-point counts r_{a,b,c}(n) for positive-definite binary quadratic forms.

This module is the ground truth for the identity checks, so it shares no code
with the polynomial construction.
"""

from dataclasses import dataclass
from typing import Iterator

from src.utils.exceptions import ContractViolation, require


@dataclass(frozen=True)
class QuadForm:
    """Binary quadratic form ``a x^2 + b x y + c y^2``."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a <= 0 or self.discriminant >= 0:
            raise ContractViolation(
                f"form ({self.a}, {self.b}, {self.c}) is not positive definite"
            )

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def __call__(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


SUM_OF_SQUARES = QuadForm(1, 0, 1)
FORM_1_0_2 = QuadForm(1, 0, 2)
EISENSTEIN = QuadForm(1, 1, 1)
FORM_1_0_3 = QuadForm(1, 0, 3)
CHECKED_FORMS = (SUM_OF_SQUARES, FORM_1_0_2, EISENSTEIN, FORM_1_0_3)


def integer_sqrt(n: int) -> int:
    """
    ``floor(sqrt(n))`` by Newton iteration on integers.

    Args:
        n: Non-negative integer

    Returns:
        ``r`` with ``r*r <= n < (r+1)*(r+1)``
    """
    require(n >= 0, f"integer_sqrt needs n >= 0, got {n}")
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + 1) // 2)
    while True:
        y = (x + n // x) // 2
        if y >= x:
            break
        x = y
    # final correction
    while x * x > n:
        x -= 1
    while (x + 1) * (x + 1) <= n:
        x += 1
    return x


def _y_bound(form: QuadForm, n: int) -> int:
    # 4 a n = (2 a x + b y)^2 + |disc| y^2
    return integer_sqrt(4 * form.a * n // -form.discriminant)


def _solutions_for_y(form: QuadForm, n: int, y: int) -> Iterator[int]:
    """Integers ``x`` with ``form(x, y) == n``, via the completed square."""
    a, b = form.a, form.b
    rest = 4 * a * n + form.discriminant * y * y
    if rest < 0:
        return
    root = integer_sqrt(rest)
    if root * root != rest:
        return
    # 2 a x + b y = +-root
    candidates = {root - b * y, -root - b * y}
    for numerator in sorted(candidates):
        if numerator % (2 * a) == 0:
            yield numerator // (2 * a)


def representation_count(form: QuadForm, n: int, y_slack: int = 0) -> int:
    """
    Exact number of ``(x, y)`` in Z^2 with ``form(x, y) == n``.

    Args:
        form: Positive-definite form
        n: Target ``n >= 1``
        y_slack: Extra rows swept beyond the proven bound on ``|y|``

    Returns:
        The representation count
    """
    require(n >= 1, f"expected n >= 1, got {n}")
    bound = _y_bound(form, n) + y_slack
    return sum(
        1 for y in range(-bound, bound + 1) for _ in _solutions_for_y(form, n, y)
    )


def half_plane_count(form: QuadForm, n: int) -> int:
    """
    Same count using the symmetry ``(x, y) -> (-x, -y)``: rows ``y > 0`` doubled
    plus the ``y = 0`` row.
    """
    require(n >= 1, f"expected n >= 1, got {n}")
    upper = sum(
        1
        for y in range(1, _y_bound(form, n) + 1)
        for _ in _solutions_for_y(form, n, y)
    )
    return 2 * upper + sum(1 for _ in _solutions_for_y(form, n, 0))


def rectangle_count(form: QuadForm, n: int) -> int:
    """Slow full scan of a box that contains every solution; for small ``n`` only."""
    require(n >= 1, f"expected n >= 1, got {n}")
    # |x| is bounded the same way as |y| with the roles of a and c swapped
    x_bound = integer_sqrt(4 * form.c * n // -form.discriminant) + 1
    y_bound = _y_bound(form, n) + 1
    return sum(
        1
        for x in range(-x_bound, x_bound + 1)
        for y in range(-y_bound, y_bound + 1)
        if form(x, y) == n
    )

