"""Unit tests for Euler-magic verification and the induced square of squares."""

from fractions import Fraction

import pytest

from eulermagic.matrices import Matrix, identity, mat_scale
from eulermagic.permutations import improper_construction
from eulermagic.verify import (
    magic_square_of_squares,
    report_to_json_dict,
    report_to_text,
    verify,
)

from conftest import load_fixture


def test_identity_is_orthogonal_but_not_magic():
    # gamma = 1 but the diagonal squares sum to n, so only n = 1 would pass
    rep = verify(identity(3))
    assert rep.cond_orthogonal
    assert rep.gamma == 1
    assert not rep.cond_diagonal
    assert not rep.is_euler_magic


def test_permutation_matrix_is_improper_euler_magic():
    rep = verify(improper_construction(4))
    assert rep.is_euler_magic
    assert rep.gamma == 1
    assert not rep.is_proper
    assert rep.distinct_square_count == 2  # squares 1 and 0
    assert rep.duplicate_pairs  # many coincidences listed


def test_scaled_magic_matrix_scales_gamma():
    rep = verify(mat_scale(3, improper_construction(4)))
    assert rep.is_euler_magic and rep.gamma == 9


def test_zero_gamma_rejected_as_not_magic():
    rep = verify(Matrix.from_rows([[0, 0], [0, 0]]))
    assert not rep.is_euler_magic
    assert rep.gamma == 0


def test_orthogonality_failure_detected():
    rep = verify(Matrix.from_rows([[1, 1], [0, 1]]))
    assert not rep.cond_orthogonal
    assert not rep.is_euler_magic


def test_diagonal_condition_failure_detected():
    # rows orthogonal with common norm, but the diagonal square-sum is not gamma
    m = Matrix.from_rows([[3, 4], [4, -3]])
    rep = verify(m)
    assert rep.cond_orthogonal
    assert rep.gamma == 25
    assert not rep.cond_diagonal  # 9 + 9 != 25
    assert not rep.is_euler_magic


def test_non_square_rejected():
    with pytest.raises(ValueError):
        verify(Matrix.from_rows([[1, 2, 3], [4, 5, 6]]))


def test_euler4_fixture(euler4):
    rep = verify(euler4)
    assert rep.is_euler_magic and rep.is_proper
    assert rep.gamma == 8515
    assert rep.distinct_square_count == 16
    assert rep.duplicate_pairs == ()


def test_duplicate_pair_positions_are_one_based():
    m = load_fixture("five5_1.txt")
    rep = verify(m)
    assert rep.duplicate_pairs == (((3, 2), (5, 3)),)
    (p, q), = rep.duplicate_pairs
    assert m.entry(p[0] - 1, p[1] - 1) ** 2 == m.entry(q[0] - 1, q[1] - 1) ** 2


def test_magic_square_of_squares(euler4):
    square = magic_square_of_squares(euler4)
    assert square.gamma == 8515
    assert square.all_sums_equal_gamma()
    assert square.squares.entry(0, 0) == 68 * 68
    assert set(square.row_sums) == {8515}
    assert set(square.col_sums) == {8515}
    assert square.diagonal_sum == square.antidiagonal_sum == 8515


def test_magic_square_requires_euler_magic():
    with pytest.raises(ValueError):
        magic_square_of_squares(Matrix.from_rows([[1, 1], [0, 1]]))


def test_report_serialization(euler4):
    rep = verify(euler4)
    d = report_to_json_dict(rep)
    assert d["gamma"] == "8515"
    assert d["proper"] is True
    assert d["distinct_squares"] == 16
    text = report_to_text(rep)
    assert "gamma: 8515" in text
    assert "proper: true" in text
    assert "distinct_squares: 16" in text


def test_rational_entries_verify_exactly():
    half = mat_scale(Fraction(1, 2), improper_construction(5))
    rep = verify(half)
    assert rep.is_euler_magic
    assert rep.gamma == Fraction(1, 4)
