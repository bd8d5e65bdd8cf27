"""Unit tests for the diagonal forms, restriction, solve chain, and family."""

import json
from fractions import Fraction
from math import gcd

import pytest

from eulermagic.family8 import (
    FAMILY_LEFT,
    diag_forms,
    eliminate_w,
    enumerate_w1,
    family_result_to_json_dict,
    family_x_poly,
    four_parameter_family,
    improper_witnesses,
    solve_chain,
    symbolic_diag_forms,
    w1_check,
    w1_coefficient_checker,
)
from eulermagic.poly import parse_poly

from conftest import load_fixture

RIGHT_VARS = ("p", "q", "r", "s", "t", "u", "v", "w")
FAMILY_RIGHT = tuple(map(Fraction, (-7, -55, -11, 1, -27, -13, -19, 4)))


def test_diag_forms_cross_check():
    forms = diag_forms(FAMILY_LEFT, cross_check=True)
    assert forms.A.degree_in("w") == 1
    assert forms.B.degree_in("w") == 1
    assert forms.A.is_homogeneous(2)
    assert forms.B.is_homogeneous(2)


def test_diag_forms_vanish_exactly_on_magic_points():
    forms = diag_forms(FAMILY_LEFT)
    point = dict(zip(RIGHT_VARS, FAMILY_RIGHT))
    assert forms.A.eval(point) == 0
    assert forms.B.eval(point) == 0
    off = dict(point)
    off["p"] += 1
    assert forms.A.eval(off) != 0 or forms.B.eval(off) != 0


def test_w_coefficient_identities():
    # for any integer left tuple: [w^2] A = 8(h-a)(h+a) and [w p] A = 16 a h
    for left in ((1, 2, 3, 4, 5, 6, 7, 8), (0, 1, 1, 1, 1, 1, -1, 5), FAMILY_LEFT):
        a, h = left[0], left[7]
        forms = diag_forms(left)
        w2 = forms.A.coefficient_of("w", 2)
        assert w2.total_degree() <= 0
        assert w2.constant_value() == 8 * (h - a) * (h + a)
        wp = forms.A.coefficient_of("w", 1).coefficient_of("p", 1)
        assert wp.total_degree() <= 0
        assert wp.constant_value() == 16 * a * h


def test_symbolic_diag_forms_specialize():
    sym = symbolic_diag_forms()
    num = diag_forms(FAMILY_LEFT)
    subs = dict(zip(("a", "b", "c", "d", "e", "f", "g", "h"), FAMILY_LEFT))
    spec_a = sym.A
    spec_b = sym.B
    for name, value in subs.items():
        spec_a = spec_a.substitute(name, value)
        spec_b = spec_b.substitute(name, value)
    point = dict(zip(RIGHT_VARS, range(2, 10)))
    full = {**{v: 0 for v in spec_a.variables}, **point}
    assert spec_a.eval(full) == num.A.eval(point)
    assert spec_b.eval(full) == num.B.eval(point)


def test_all_ones_A_factors():
    forms = diag_forms((1,) * 8)
    expect = parse_poly(
        "16*p*r + 16*p*s + 16*p*v + 16*p*w + 16*q*r + 16*q*s + 16*q*v + 16*q*w"
        " + 16*r*t + 16*r*u + 16*s*t + 16*s*u + 16*t*v + 16*t*w + 16*u*v + 16*u*w",
        forms.A.variables,
    )
    assert forms.A == expect


def test_all_ones_witnesses():
    rep = improper_witnesses((1,) * 8)
    assert rep.polynomial_matrix_proper is True
    assert rep.properness_obstructed is True
    assert {w.kind for w in rep.witnesses} == {"factor-of-A"}
    pairs = {(w.first, w.second) for w in rep.witnesses}
    assert ((2, 2), (2, 7)) in pairs
    assert ((3, 3), (3, 6)) in pairs


def test_zero_entries_force_identical_squares():
    rep = improper_witnesses((1, 0, 0, 1, 1, 1, 1, 1))
    assert rep.polynomial_matrix_proper is False
    assert rep.properness_obstructed is True
    assert rep.witnesses[0].kind == "identical-squares"
    assert rep.witnesses[0].form.is_zero()


def test_family_left_unobstructed():
    rep = improper_witnesses(FAMILY_LEFT)
    assert rep.polynomial_matrix_proper is True
    assert rep.properness_obstructed is False


def test_generic_witness_collapses_when_a_h_vanish():
    rep = improper_witnesses(None)
    w0 = rep.witnesses[0]
    assert (w0.first, w0.second) == ((1, 8), (8, 1))
    assert str(w0.form) == "-2*a*w - 2*h*p"
    assert w0.form.substitute("a", 0).substitute("h", 0).is_zero()


def test_w1_check():
    assert w1_check(FAMILY_LEFT)
    assert w1_check((1, 1, 1, 1, 1, 1, 1, -1))
    assert not w1_check((1, 2, 3, 4, 5, 6, 7, 8))
    assert not w1_check((0, 0, 0, 0, 0, 0, 0, 0))  # needs a = +-h != 0


def test_enumerate_w1_counts_and_canonical_order():
    tuples = enumerate_w1(1)
    assert len(tuples) == 1088
    assert tuples == sorted(tuples)
    assert all(t[0] > 0 for t in tuples)
    assert all(gcd(*(abs(x) for x in t)) == 1 for t in tuples)
    assert all(w1_check(t) for t in tuples)


def test_eliminate_w_requires_restriction():
    with pytest.raises(ValueError):
        eliminate_w(diag_forms((1, 2, 3, 4, 5, 6, 7, 8)))


def test_eliminate_w_degree_drop():
    forms = diag_forms(FAMILY_LEFT)
    f, x, y = eliminate_w(forms)
    assert f.degree_in("w") <= 0
    assert f.degree_in("p") == 2
    assert x == forms.A.coefficient_of("w", 1)
    assert y == forms.B.coefficient_of("w", 1)


def test_solve_chain_reproduces_worked_solution():
    res = solve_chain(FAMILY_LEFT, {"q": -55, "r": -11, "t": -27, "u": -13})
    assert res.ok, res.failure_reason
    assert res.solved_for == "v"
    assert res.right == FAMILY_RIGHT
    assert res.report.is_euler_magic and res.report.is_proper
    assert res.report.gamma == 143072


def test_solve_chain_defaults_s_to_one():
    res = solve_chain(FAMILY_LEFT, {"q": -55, "r": -11, "t": -27, "u": -13})
    assert res.ok
    assert res.right[3] == 1


def test_solve_chain_rejects_fixing_solved_variable():
    with pytest.raises(ValueError):
        solve_chain(FAMILY_LEFT, {"v": 1, "r": 0, "t": 0, "u": 0})


def test_solve_chain_reports_degenerate_pivots():
    res = solve_chain(FAMILY_LEFT, {"q": 0, "r": 0, "t": 0, "u": 0})
    if not res.ok:
        assert "coefficient" in res.failure_reason
    else:
        assert res.report.is_euler_magic


def test_four_parameter_family_showcase_point(family8):
    fam = four_parameter_family(-55, -11, -27, -148)
    assert fam.x_value == 23088
    assert fam.right == FAMILY_RIGHT
    assert fam.report.is_proper
    assert fam.report.gamma == 143072
    neg = tuple(tuple(-x for x in row) for row in family8.entries)
    assert fam.primitive.entries in (family8.entries, neg)


def test_four_parameter_family_generic_point():
    fam = four_parameter_family(0, 0, 0, 1)
    assert fam.x_value == 31
    assert fam.report.is_euler_magic
    assert not fam.report.is_proper


def test_four_parameter_family_rational_point():
    fam = four_parameter_family(Fraction(1, 2), 3, -2, 7)
    assert fam.report.is_euler_magic


def test_family_degenerate_parameters():
    with pytest.raises(ValueError):
        four_parameter_family(0, 0, 0, 0)  # u = 0
    # X factors as 0 at u solving 4u^2 + ... = 0 for some integer points; find one
    xp = family_x_poly()
    found = None
    for q in range(-6, 7):
        for r in range(-6, 7):
            for t in range(-6, 7):
                base = {"q": q, "r": r, "t": t}
                c0 = xp.eval({**base, "u": 0})
                c1 = xp.coefficient_of("u", 1).eval({**base, "u": 0})
                disc = c1 * c1 - 16 * c0
                if disc < 0:
                    continue
                root = int(disc) ** 0.5
                si = round(root)
                if si * si != disc:
                    continue
                for sign in (1, -1):
                    u = Fraction(-c1 + sign * si, 8)
                    if u != 0:
                        found = (q, r, t, u)
                        break
                if found:
                    break
            if found:
                break
        if found:
            break
    if found is not None:
        with pytest.raises(ValueError):
            four_parameter_family(*found)


def test_family_json_schema():
    fam = four_parameter_family(-55, -11, -27, -148)
    payload = family_result_to_json_dict(fam)
    assert payload["X"] == "23088"
    assert payload["params"] == {"q": "-55", "r": "-11", "t": "-27", "u": "-148"}
    assert payload["right"] == ["-7", "-55", "-11", "1", "-27", "-13", "-19", "4"]
    assert payload["report"]["proper"] is True
    json.dumps(payload)


def test_w1_coefficient_checker_matches_slow_path():
    check = w1_coefficient_checker()
    assert check(FAMILY_LEFT)
    assert not check((1, 2, 3, 4, 5, 6, 7, 8))
    for left in enumerate_w1(1)[:100]:
        assert check(left)
