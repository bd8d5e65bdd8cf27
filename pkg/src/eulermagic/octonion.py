"""Left and right octonion multiplication matrices.

Both 8x8 sign patterns are stored as explicit tables of (source index, sign)
pairs, one per entry, so they can be audited position by position.  The
builders are generic in the coefficient type: passing rationals gives a
numeric matrix, passing MultiPoly symbols gives a symbolic one.

For any coefficients, left_matrix(x) times its transpose equals
(sum of the eight squares) times the identity, and likewise for
right_matrix; hence M = L * R satisfies M * M^t = gamma * I with
gamma = gamma_product(left, right).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Tuple

from .matrices import Matrix
from .poly import MultiPoly

__all__ = [
    "LEFT_SIGN_TABLE",
    "RIGHT_SIGN_TABLE",
    "LEFT_VARS",
    "RIGHT_VARS",
    "left_matrix",
    "right_matrix",
    "gamma_product",
    "sum_of_squares",
    "symbolic_left_params",
    "symbolic_right_params",
]

LEFT_VARS: Tuple[str, ...] = ("a", "b", "c", "d", "e", "f", "g", "h")
RIGHT_VARS: Tuple[str, ...] = ("p", "q", "r", "s", "t", "u", "v", "w")

# entry [i][j] = (k, s) means: row i, column j holds s * coefficient_k
LEFT_SIGN_TABLE = (
    ((0, 1), (1, -1), (2, -1), (3, -1), (4, -1), (5, -1), (6, -1), (7, -1)),
    ((1, 1), (0, 1), (3, -1), (2, 1), (5, -1), (4, 1), (7, 1), (6, -1)),
    ((2, 1), (3, 1), (0, 1), (1, -1), (6, -1), (7, -1), (4, 1), (5, 1)),
    ((3, 1), (2, -1), (1, 1), (0, 1), (7, -1), (6, 1), (5, -1), (4, 1)),
    ((4, 1), (5, 1), (6, 1), (7, 1), (0, 1), (1, -1), (2, -1), (3, -1)),
    ((5, 1), (4, -1), (7, 1), (6, -1), (1, 1), (0, 1), (3, 1), (2, -1)),
    ((6, 1), (7, -1), (4, -1), (5, 1), (2, 1), (3, -1), (0, 1), (1, 1)),
    ((7, 1), (6, 1), (5, -1), (4, -1), (3, 1), (2, 1), (1, -1), (0, 1)),
)

RIGHT_SIGN_TABLE = (
    ((0, 1), (1, -1), (2, -1), (3, -1), (4, -1), (5, -1), (6, -1), (7, -1)),
    ((1, 1), (0, 1), (3, 1), (2, -1), (5, 1), (4, -1), (7, -1), (6, 1)),
    ((2, 1), (3, -1), (0, 1), (1, 1), (6, 1), (7, 1), (4, -1), (5, -1)),
    ((3, 1), (2, 1), (1, -1), (0, 1), (7, 1), (6, -1), (5, 1), (4, -1)),
    ((4, 1), (5, -1), (6, -1), (7, -1), (0, 1), (1, 1), (2, 1), (3, 1)),
    ((5, 1), (4, 1), (7, -1), (6, 1), (1, -1), (0, 1), (3, -1), (2, 1)),
    ((6, 1), (7, 1), (4, 1), (5, -1), (2, -1), (3, 1), (0, 1), (1, -1)),
    ((7, 1), (6, -1), (5, 1), (4, 1), (3, -1), (2, -1), (1, 1), (0, 1)),
)


def _check_params(x: Sequence[object]) -> Tuple[object, ...]:
    x = tuple(x)
    if len(x) != 8:
        raise ValueError(f"expected exactly 8 coefficients, got {len(x)}")
    return x


def _build(table, x: Sequence[object]) -> Matrix:
    x = _check_params(x)
    rows = []
    for trow in table:
        rows.append(tuple(x[k] * s for (k, s) in trow))
    return Matrix(8, 8, tuple(rows))


def left_matrix(x: Sequence[object]) -> Matrix:
    """The 8x8 left multiplication matrix of the coefficient tuple (a..h)."""
    return _build(LEFT_SIGN_TABLE, x)


def right_matrix(x: Sequence[object]) -> Matrix:
    """The 8x8 right multiplication matrix of the coefficient tuple (p..w)."""
    return _build(RIGHT_SIGN_TABLE, x)


def sum_of_squares(x: Sequence[object]):
    x = _check_params(x)
    acc = x[0] * x[0]
    for xi in x[1:]:
        acc = acc + xi * xi
    return acc


def gamma_product(left: Sequence[object], right: Sequence[object]):
    """gamma of M = L(left) * R(right): the product of the two square sums."""
    return sum_of_squares(left) * sum_of_squares(right)


def symbolic_left_params(context: Sequence[str] = LEFT_VARS) -> Tuple[MultiPoly, ...]:
    """Generators named a..h inside the given polynomial context."""
    context = tuple(context)
    return tuple(MultiPoly.variable(context, n) for n in LEFT_VARS)


def symbolic_right_params(context: Sequence[str] = RIGHT_VARS) -> Tuple[MultiPoly, ...]:
    """Generators named p..w inside the given polynomial context."""
    context = tuple(context)
    return tuple(MultiPoly.variable(context, n) for n in RIGHT_VARS)
