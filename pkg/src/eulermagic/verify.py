"""Checking a matrix for the Euler-magic conditions and properness.

A square matrix M is Euler magic when M * M^t = gamma * I for a nonzero
gamma and both the diagonal and the anti-diagonal squared-entry sums equal
gamma.  It is proper when all n^2 entry squares are pairwise distinct; the
entrywise squares of a proper Euler magic matrix form a magic square of
squares.

gamma is never supplied by the caller: it is read off as the (1,1) entry of
M * M^t, which removes a redundant input.  Reports list duplicate entry
positions 1-based, with all colliding unordered pairs in row-major order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from .matrices import Matrix, identity, mat_mul, mat_scale, transpose

__all__ = [
    "VerifyReport",
    "MagicSquareReport",
    "verify",
    "magic_square_of_squares",
    "report_to_json_dict",
    "report_to_text",
]

Position = Tuple[int, int]  # 1-based (row, col)


@dataclass(frozen=True)
class VerifyReport:
    n: int
    gamma: object
    cond_orthogonal: bool
    cond_diagonal: bool
    cond_antidiagonal: bool
    is_euler_magic: bool
    is_proper: bool
    distinct_square_count: int
    duplicate_pairs: Tuple[Tuple[Position, Position], ...]
    squares_matrix: Matrix


@dataclass(frozen=True)
class MagicSquareReport:
    gamma: object
    squares: Matrix
    row_sums: Tuple[object, ...]
    col_sums: Tuple[object, ...]
    diagonal_sum: object
    antidiagonal_sum: object

    def all_sums_equal_gamma(self) -> bool:
        return (
            all(s == self.gamma for s in self.row_sums)
            and all(s == self.gamma for s in self.col_sums)
            and self.diagonal_sum == self.gamma
            and self.antidiagonal_sum == self.gamma
        )


def verify(m: Matrix) -> VerifyReport:
    """Full Euler-magic and properness report for a square rational matrix."""
    if not m.is_square():
        raise ValueError(f"matrix must be square, got {m.rows}x{m.cols}")
    n = m.rows
    product = mat_mul(m, transpose(m))
    gamma = product.entry(0, 0)
    cond_orthogonal = product == mat_scale(gamma, identity(n))
    diag_sum = sum((m.entry(i, i) ** 2 for i in range(n)), Fraction(0))
    anti_sum = sum((m.entry(i, n - 1 - i) ** 2 for i in range(n)), Fraction(0))
    cond_diagonal = diag_sum == gamma
    cond_antidiagonal = anti_sum == gamma
    is_euler_magic = cond_orthogonal and cond_diagonal and cond_antidiagonal and gamma != 0

    squares = Matrix(n, n, tuple(tuple(x * x for x in row) for row in m.entries))
    by_value: Dict[object, List[Position]] = {}
    for i in range(n):
        for j in range(n):
            by_value.setdefault(Fraction(squares.entry(i, j)), []).append((i + 1, j + 1))
    pairs: List[Tuple[Position, Position]] = []
    for positions in by_value.values():
        if len(positions) > 1:
            for x in range(len(positions)):
                for y in range(x + 1, len(positions)):
                    pairs.append((positions[x], positions[y]))
    pairs.sort()
    distinct = len(by_value)
    return VerifyReport(
        n=n,
        gamma=gamma,
        cond_orthogonal=cond_orthogonal,
        cond_diagonal=cond_diagonal,
        cond_antidiagonal=cond_antidiagonal,
        is_euler_magic=is_euler_magic,
        is_proper=distinct == n * n,
        distinct_square_count=distinct,
        duplicate_pairs=tuple(pairs),
        squares_matrix=squares,
    )


def magic_square_of_squares(m: Matrix) -> MagicSquareReport:
    """Entrywise squares with all row/column/diagonal sums, which must equal gamma.

    Requires an Euler magic input; the precondition is checked and reported,
    never silently ignored.
    """
    report = verify(m)
    if not report.is_euler_magic:
        raise ValueError("matrix is not Euler magic; refusing to build the square of squares")
    n = m.rows
    sq = report.squares_matrix
    row_sums = tuple(sum(sq.row(i), Fraction(0)) for i in range(n))
    col_sums = tuple(sum((sq.entry(i, j) for i in range(n)), Fraction(0)) for j in range(n))
    diag = sum((sq.entry(i, i) for i in range(n)), Fraction(0))
    anti = sum((sq.entry(i, n - 1 - i) for i in range(n)), Fraction(0))
    return MagicSquareReport(
        gamma=report.gamma,
        squares=sq,
        row_sums=row_sums,
        col_sums=col_sums,
        diagonal_sum=diag,
        antidiagonal_sum=anti,
    )


def report_to_json_dict(report: VerifyReport) -> dict:
    return {
        "n": report.n,
        "gamma": str(Fraction(report.gamma)),
        "orthogonal": report.cond_orthogonal,
        "diagonal": report.cond_diagonal,
        "antidiagonal": report.cond_antidiagonal,
        "euler_magic": report.is_euler_magic,
        "proper": report.is_proper,
        "distinct_squares": report.distinct_square_count,
        "duplicates": [[list(p), list(q)] for (p, q) in report.duplicate_pairs],
    }


def report_to_text(report: VerifyReport) -> str:
    d = report_to_json_dict(report)
    lines = []
    for key in (
        "n",
        "gamma",
        "orthogonal",
        "diagonal",
        "antidiagonal",
        "euler_magic",
        "proper",
        "distinct_squares",
    ):
        value = d[key]
        if isinstance(value, bool):
            value = "true" if value else "false"
        lines.append(f"{key}: {value}")
    lines.append(f"duplicates: {json.dumps(d['duplicates'])}")
    return "\n".join(lines)
