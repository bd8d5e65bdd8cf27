"""The 8x8 construction M = L(a..h) * R(p..w): diagonal forms, witnesses,
the w-elimination, the solve chain, and the four-parameter proper family.

With the left coefficients fixed to integers and the right coefficients kept
symbolic, every entry of M is a linear form in p..w, so the two diagonal
conditions become quadratic forms:

    A = sum of squared diagonal entries - sum of squared anti-diagonal entries,
    B = sum of both squared-entry sums - 2 * gamma.

M is Euler magic exactly when A = B = 0.  The w-degrees of A and B drop to 1
precisely when h = +-a and b^2+c^2+d^2+e^2+f^2+g^2 = 6a^2 (the "w1"
restriction), which makes the elimination F = yA - xB a cubic without w and
enables the chain: solve the p^2 coefficient for q (or v), then F for p, then
A for w.  Specializing the remaining free values yields exact Euler magic
matrices; properness is reported, never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .matrices import Matrix, mat_mul, rescale_primitive
from .octonion import (
    LEFT_VARS,
    RIGHT_VARS,
    left_matrix,
    right_matrix,
    sum_of_squares,
    symbolic_left_params,
    symbolic_right_params,
)
from .poly import MultiPoly, quadratic_form_coeffs
from .verify import VerifyReport, report_to_json_dict, verify

__all__ = [
    "BOTH_VARS",
    "DiagForms",
    "Witness",
    "WitnessReport",
    "diag_forms",
    "symbolic_diag_forms",
    "improper_witnesses",
    "w1_check",
    "enumerate_w1",
    "eliminate_w",
    "SolveChainResult",
    "solve_chain",
    "FAMILY_LEFT",
    "family_x_poly",
    "FamilyResult",
    "four_parameter_family",
    "family_result_to_json_dict",
    "w1_coefficient_checker",
]

BOTH_VARS: Tuple[str, ...] = LEFT_VARS + RIGHT_VARS

FAMILY_LEFT: Tuple[int, ...] = (2, 1, 1, 4, 2, 1, 1, -2)

# coefficient pattern of the p^2 coefficient of F, up to the factor -128 h^2:
# variable name -> ((i, j, sign), (k, l, sign)) meaning sign*x_i*x_j + ...
_P2_PATTERN: Tuple[Tuple[str, Tuple[int, int, int], Tuple[int, int, int]], ...] = (
    ("q", (0, 6, 1), (1, 7, 1)),   # a*g + b*h
    ("r", (0, 5, -1), (2, 7, 1)),  # -a*f + c*h
    ("s", (0, 4, -1), (3, 7, 1)),  # -a*e + d*h
    ("t", (0, 3, 1), (4, 7, 1)),   # a*d + e*h
    ("u", (0, 2, 1), (5, 7, 1)),   # a*c + f*h
    ("v", (0, 1, -1), (6, 7, 1)),  # -a*b + g*h
)


def _require_numeric_left(left: Sequence[object]) -> Tuple[Fraction, ...]:
    left = tuple(left)
    if len(left) != 8:
        raise ValueError(f"expected 8 left coefficients, got {len(left)}")
    out = []
    for x in left:
        if not isinstance(x, (int, Fraction)):
            raise TypeError("left coefficients must be exact rationals")
        out.append(Fraction(x))
    return tuple(out)


def product_matrix(left: Sequence[object]) -> Matrix:
    """M = L(left) * R(p..w) with symbolic right coefficients.

    Numeric left gives entries over the context (p..w); pass left=None for
    the fully symbolic matrix over (a..h, p..w).
    """
    if left is None:
        lparams = symbolic_left_params(BOTH_VARS)
        rparams = symbolic_right_params(BOTH_VARS)
        return mat_mul(left_matrix(lparams), right_matrix(rparams))
    left = _require_numeric_left(left)
    rparams = symbolic_right_params(RIGHT_VARS)
    return mat_mul(left_matrix(left), right_matrix(rparams))


@dataclass(frozen=True)
class DiagForms:
    A: MultiPoly
    B: MultiPoly
    fixed_left: Optional[Tuple[Fraction, ...]]


def _forms_from_matrix(m: Matrix, gamma: MultiPoly) -> Tuple[MultiPoly, MultiPoly]:
    zero = MultiPoly.zero(gamma.variables)
    diag = sum((m.entry(i, i) * m.entry(i, i) for i in range(8)), zero)
    anti = sum((m.entry(i, 7 - i) * m.entry(i, 7 - i) for i in range(8)), zero)
    return diag - anti, diag + anti - 2 * gamma


def diag_forms(left: Sequence[object], cross_check: bool = False) -> DiagForms:
    """The quadratic forms A and B in (p..w) for a fixed numeric left tuple.

    With cross_check=True the symbolic coefficients are validated against a
    blackbox recovery from purely numeric evaluations of the defining sums,
    an independent code path through the numeric matrix product.
    """
    left = _require_numeric_left(left)
    m = product_matrix(left)
    rvars = symbolic_right_params(RIGHT_VARS)
    gamma = sum_of_squares(left) * sum((v * v for v in rvars), MultiPoly.zero(RIGHT_VARS))
    a_form, b_form = _forms_from_matrix(m, gamma)
    for f in (a_form, b_form):
        if not f.is_homogeneous(2):
            raise ValueError("internal error: diagonal form is not homogeneous quadratic")
    if cross_check:
        _oracle_check(left, a_form, b_form)
    return DiagForms(A=a_form, B=b_form, fixed_left=left)


def _oracle_check(left: Tuple[Fraction, ...], a_form: MultiPoly, b_form: MultiPoly) -> None:
    lmat = left_matrix(left)
    gamma_left = sum_of_squares(left)

    def numeric_forms(vec: Sequence[Fraction]) -> Tuple[Fraction, Fraction]:
        m = mat_mul(lmat, right_matrix(list(vec)))
        diag = sum(m.entry(i, i) ** 2 for i in range(8))
        anti = sum(m.entry(i, 7 - i) ** 2 for i in range(8))
        gamma = gamma_left * sum(x * x for x in vec)
        return diag - anti, diag + anti - 2 * gamma

    table_a = quadratic_form_coeffs(lambda v: numeric_forms(v)[0], 8)
    table_b = quadratic_form_coeffs(lambda v: numeric_forms(v)[1], 8)
    if table_a != a_form.quadratic_coeff_table() or table_b != b_form.quadratic_coeff_table():
        raise ValueError("oracle mismatch: symbolic forms disagree with blackbox recovery")


def symbolic_diag_forms() -> DiagForms:
    """A and B over the full 16-variable context (a..h, p..w)."""
    m = product_matrix(None)
    lparams = symbolic_left_params(BOTH_VARS)
    rparams = symbolic_right_params(BOTH_VARS)
    zero = MultiPoly.zero(BOTH_VARS)
    gamma = sum((v * v for v in lparams), zero) * sum((v * v for v in rparams), zero)
    a_form, b_form = _forms_from_matrix(m, gamma)
    return DiagForms(A=a_form, B=b_form, fixed_left=None)


# ----------------------------------------------------------------------
# properness witnesses
# ----------------------------------------------------------------------

Position = Tuple[int, int]  # 1-based


@dataclass(frozen=True)
class Witness:
    kind: str  # "identical-squares", "factor-of-A", or "generic-difference"
    first: Position
    second: Position
    relation: str  # "difference" or "sum"
    form: MultiPoly


@dataclass(frozen=True)
class WitnessReport:
    left: Optional[Tuple[Fraction, ...]]
    witnesses: Tuple[Witness, ...]
    polynomial_matrix_proper: bool
    properness_obstructed: bool


def _entry_pair_forms(m: Matrix):
    flat = [((i + 1, j + 1), m.entry(i, j)) for i in range(8) for j in range(8)]
    for relation in ("difference", "sum"):
        for x in range(len(flat)):
            for y in range(x + 1, len(flat)):
                (pos1, f), (pos2, g) = flat[x], flat[y]
                yield pos1, pos2, relation, (f - g if relation == "difference" else f + g)


def _leading_coeff(p: MultiPoly):
    exps = min(p.terms, key=lambda e: (-sum(e), tuple(-x for x in e)))
    return p.terms[exps]


def _linear_divides(quadratic: MultiPoly, linear: MultiPoly) -> bool:
    """Whether the linear form divides the quadratic (exact substitution test)."""
    pivot = None
    for exps, c in linear.terms.items():
        if sum(exps) == 1:
            pivot = (exps.index(1), c)
            break
    if pivot is None:
        return False
    i, c = pivot
    name = linear.variables[i]
    # the zero set of the linear form is {var = rest}; divisibility of the
    # quadratic is exactly vanishing under that substitution
    rest = (MultiPoly.variable(linear.variables, name) * c - linear) * Fraction(1, c)
    return quadratic.substitute(name, rest).is_zero()


def improper_witnesses(left: Optional[Sequence[object]]) -> WitnessReport:
    """Entry-difference witnesses showing a left tuple cannot give a proper M.

    Two layers:
      * identical-squares: entry pairs whose difference or sum is the zero
        polynomial, so the symbolic matrix itself is improper (this is what
        happens whenever two of the eight left coefficients vanish);
      * factor-of-A: when A splits as a constant times a product of two
        entry-pair forms, any Euler magic specialization kills one factor and
        hence collides two entry squares (the all +-1 left tuples).

    With left=None the report carries the single generic witness
    m(1,8) - m(8,1) = -2(a*w + h*p) over the full symbolic context: whenever
    a = h = 0 those two entries coincide identically.
    """
    if left is None:
        m = product_matrix(None)
        form = m.entry(0, 7) - m.entry(7, 0)
        generic = Witness("generic-difference", (1, 8), (8, 1), "difference", form)
        return WitnessReport(None, (generic,), True, False)

    left = _require_numeric_left(left)
    m = product_matrix(left)
    collisions: List[Witness] = []
    nonzero_forms: Dict[tuple, Tuple[Position, Position, str, MultiPoly]] = {}
    for pos1, pos2, relation, form in _entry_pair_forms(m):
        if form.is_zero():
            collisions.append(Witness("identical-squares", pos1, pos2, relation, form))
        else:
            lead = _leading_coeff(form)
            key = tuple(sorted((e, Fraction(c, lead)) for e, c in form.terms.items()))
            nonzero_forms.setdefault(key, (pos1, pos2, relation, form))
    if collisions:
        return WitnessReport(left, tuple(collisions), False, True)

    a_form = diag_forms(left).A
    factor_witnesses: List[Witness] = []
    if not a_form.is_zero():
        divisors = [
            rec for rec in nonzero_forms.values() if _linear_divides(a_form, rec[3])
        ]
        for i in range(len(divisors)):
            for j in range(len(divisors)):
                f1, f2 = divisors[i][3], divisors[j][3]
                lead = Fraction(_leading_coeff(a_form),
                                _leading_coeff(f1) * _leading_coeff(f2))
                if f1 * f2 * lead == a_form:
                    factor_witnesses = [
                        Witness("factor-of-A", divisors[i][0], divisors[i][1],
                                divisors[i][2], f1),
                        Witness("factor-of-A", divisors[j][0], divisors[j][1],
                                divisors[j][2], f2),
                    ]
                    break
            if factor_witnesses:
                break
    return WitnessReport(
        left=left,
        witnesses=tuple(factor_witnesses),
        polynomial_matrix_proper=True,
        properness_obstructed=bool(factor_witnesses),
    )


# ----------------------------------------------------------------------
# the w1 restriction
# ----------------------------------------------------------------------

def w1_check(left: Sequence[object]) -> bool:
    """h = +-a != 0 and b^2+c^2+d^2+e^2+f^2+g^2 = 6 a^2."""
    left = _require_numeric_left(left)
    a, b, c, d, e, f, g, h = left
    if a == 0 or (h != a and h != -a):
        return False
    return b * b + c * c + d * d + e * e + f * f + g * g == 6 * a * a


def enumerate_w1(a_max: int) -> List[Tuple[int, ...]]:
    """All primitive integer tuples with 1 <= a <= a_max satisfying the
    degree-one restriction, in lexicographic order.

    Canonical form: a > 0 and gcd of all eight entries equal to 1; both signs
    of h and all sign/position variants of b..g appear as separate tuples.
    """
    from math import gcd, isqrt

    if a_max < 1:
        raise ValueError("a_max must be at least 1")
    out: List[Tuple[int, ...]] = []
    for a in range(1, a_max + 1):
        target = 6 * a * a
        bound = isqrt(target)
        solutions: List[List[int]] = []

        def extend(i: int, remaining: int, current: List[int]) -> None:
            if i == 6:
                if remaining == 0:
                    solutions.append(current[:])
                return
            for v in range(-bound, bound + 1):
                if v * v <= remaining:
                    current.append(v)
                    extend(i + 1, remaining - v * v, current)
                    current.pop()

        extend(0, target, [])
        for middle in solutions:
            for h in (a, -a):
                tup = (a, *middle, h)
                g = 0
                for x in tup:
                    g = gcd(g, abs(x))
                if g == 1:
                    out.append(tup)
    out.sort()
    return out


# ----------------------------------------------------------------------
# elimination and the solve chain
# ----------------------------------------------------------------------

def eliminate_w(forms: DiagForms) -> Tuple[MultiPoly, MultiPoly, MultiPoly]:
    """F = yA - xB where x, y are the w-coefficients of A and B.

    Requires w-degree <= 1 in both forms; F is then a cubic in p..v.  When
    the fixed left tuple satisfies the degree-one restriction, the p^3
    coefficient of F vanishes, so F has p-degree <= 2 (asserted).
    """
    a_form, b_form = forms.A, forms.B
    if a_form.degree_in("w") > 1 or b_form.degree_in("w") > 1:
        raise ValueError("w-degree exceeds 1; elimination needs the degree-one restriction")
    x = a_form.coefficient_of("w", 1)
    y = b_form.coefficient_of("w", 1)
    f = y * a_form - x * b_form
    if f.degree_in("w") > 0:
        raise ValueError("internal error: elimination left a w term")
    if forms.fixed_left is not None and w1_check(forms.fixed_left) and f.degree_in("p") > 2:
        raise ValueError("internal error: p^3 coefficient did not vanish under the restriction")
    return f, x, y


_SOLVABLE = ("q", "r", "s", "t", "u", "v")


@dataclass(frozen=True)
class SolveChainResult:
    ok: bool
    failure_reason: Optional[str]
    left: Tuple[Fraction, ...]
    solved_for: Optional[str]
    right: Optional[Tuple[Fraction, ...]]
    matrix: Optional[Matrix]
    primitive: Optional[Matrix]
    report: Optional[VerifyReport]


def solve_chain(left: Sequence[object], free: Mapping[str, object]) -> SolveChainResult:
    """Extend four fixed values of {q,r,s,t,u,v} to an exact solution of A = B = 0.

    The chain solves the p^2 coefficient of F for q when a*g + b*h != 0
    (otherwise for v), then F for p, then A for w, and back-checks both forms
    exactly.  s defaults to 1 when not supplied.  Degenerate specializations
    are reported as failures with the step name; an improper result is a
    normal outcome, visible in the report.
    """
    left = _require_numeric_left(left)
    if not w1_check(left):
        raise ValueError("left tuple does not satisfy the degree-one restriction")
    a, b, c, d, e, f_, g, h = left
    if a * g + b * h != 0:
        solve_var = "q"
    elif -a * b + g * h != 0:
        solve_var = "v"
    else:
        return SolveChainResult(
            ok=False,
            failure_reason="step 1: both q and v coefficients vanish (b = g = 0)",
            left=left, solved_for=None, right=None, matrix=None, primitive=None, report=None,
        )

    fixed: Dict[str, Fraction] = {}
    for name, value in free.items():
        if name not in _SOLVABLE:
            raise ValueError(f"cannot fix variable {name!r}; choose among {_SOLVABLE}")
        if name == solve_var:
            raise ValueError(f"variable {name!r} is the one the chain solves for")
        fixed[name] = Fraction(value)
    fixed.setdefault("s", Fraction(1))
    needed = [v for v in _SOLVABLE if v != solve_var]
    missing = [v for v in needed if v not in fixed]
    if missing:
        raise ValueError(f"missing fixed values for {missing}")

    forms = diag_forms(left)
    f_poly, x, y = eliminate_w(forms)

    # step 1: the p^2 coefficient is linear in the solvable variables
    p2 = f_poly.coefficient_of("p", 2)
    for name, value in fixed.items():
        p2 = p2.substitute(name, value)
    lead = p2.coefficient_of(solve_var, 1)
    if lead.is_zero():
        return SolveChainResult(
            ok=False, failure_reason=f"step 1: {solve_var}-coefficient zero",
            left=left, solved_for=solve_var, right=None, matrix=None, primitive=None, report=None,
        )
    solved_value = -Fraction(p2.coefficient_of(solve_var, 0).constant_value(),
                             lead.constant_value())
    values = dict(fixed)
    values[solve_var] = solved_value

    # step 2: F is now a polynomial in p of degree <= 1
    f_spec = f_poly
    for name, value in values.items():
        f_spec = f_spec.substitute(name, value)
    if f_spec.degree_in("p") > 1:
        raise ValueError("internal error: p^2 term survived the first step")
    p_lead = f_spec.coefficient_of("p", 1)
    if p_lead.is_zero():
        return SolveChainResult(
            ok=False, failure_reason="step 2: p-coefficient zero",
            left=left, solved_for=solve_var, right=None, matrix=None, primitive=None, report=None,
        )
    p_value = -Fraction(f_spec.coefficient_of("p", 0).constant_value(),
                        p_lead.constant_value())
    values["p"] = p_value

    # step 3: A is linear in w; solve it
    a_spec = forms.A
    for name, value in values.items():
        a_spec = a_spec.substitute(name, value)
    w_lead = a_spec.coefficient_of("w", 1)
    if w_lead.is_zero():
        return SolveChainResult(
            ok=False, failure_reason="step 3: w-coefficient zero",
            left=left, solved_for=solve_var, right=None, matrix=None, primitive=None, report=None,
        )
    w_value = -Fraction(a_spec.coefficient_of("w", 0).constant_value(),
                        w_lead.constant_value())
    values["w"] = w_value

    point = {name: values[name] for name in RIGHT_VARS}
    if forms.A.eval(point) != 0 or forms.B.eval(point) != 0:
        raise ValueError("internal error: back-check of A = B = 0 failed")

    right = tuple(values[name] for name in RIGHT_VARS)
    matrix = mat_mul(left_matrix(left), right_matrix(right))
    try:
        primitive = rescale_primitive(matrix)
    except ValueError:
        return SolveChainResult(
            ok=False, failure_reason="degenerate: zero matrix",
            left=left, solved_for=solve_var, right=right, matrix=matrix,
            primitive=None, report=None,
        )
    report = verify(primitive)
    return SolveChainResult(
        ok=True, failure_reason=None, left=left, solved_for=solve_var,
        right=right, matrix=matrix, primitive=primitive, report=report,
    )


# ----------------------------------------------------------------------
# the four-parameter family
# ----------------------------------------------------------------------

_FAMILY_VARS = ("q", "r", "t", "u")


def family_x_poly() -> MultiPoly:
    """The denominator-control polynomial X of the four-parameter family."""
    q, r, t, u = MultiPoly.variables_of(_FAMILY_VARS)
    one = MultiPoly.constant(_FAMILY_VARS, 1)
    return (
        7 * q * q + 7 * r * r + 21 * q * t - 7 * r * t + 34 * t * t
        - 7 * q * u - 21 * t * u + 4 * u * u + 7 * q + 21 * r - 7 * u + 34 * one
    )


@dataclass(frozen=True)
class FamilyResult:
    q: Fraction
    r: Fraction
    t: Fraction
    u: Fraction
    x_value: Fraction
    right: Tuple[Fraction, ...]
    matrix: Matrix
    primitive: Matrix
    report: VerifyReport


def four_parameter_family(q, r, t, u) -> FamilyResult:
    """The proper family at left (2,1,1,4,2,1,1,-2), specialized at (q,r,t,u).

    right = (3(t^2-1)u / 2X, q, r, 1, t, u-q-3t-1, t-r-3, (u^2-X) / 2u).
    Requires X != 0 and u != 0; every specialization is Euler magic, and the
    report says whether the point keeps properness.
    """
    q, r, t, u = (Fraction(v) for v in (q, r, t, u))
    x_value = family_x_poly().eval({"q": q, "r": r, "t": t, "u": u})
    if x_value == 0:
        raise ValueError("degenerate parameter: X = 0")
    if u == 0:
        raise ValueError("degenerate parameter: u = 0")
    right = (
        Fraction(3 * (t * t - 1) * u, 2 * x_value),
        q,
        r,
        Fraction(1),
        t,
        u - q - 3 * t - 1,
        t - r - 3,
        Fraction(u * u - x_value, 2 * u),
    )
    matrix = mat_mul(left_matrix(FAMILY_LEFT), right_matrix(right))
    primitive = rescale_primitive(matrix)
    report = verify(primitive)
    return FamilyResult(
        q=q, r=r, t=t, u=u, x_value=x_value, right=right,
        matrix=matrix, primitive=primitive, report=report,
    )


def family_result_to_json_dict(result: FamilyResult) -> dict:
    return {
        "params": {
            "q": str(result.q),
            "r": str(result.r),
            "t": str(result.t),
            "u": str(result.u),
        },
        "X": str(result.x_value),
        "right": [str(v) for v in result.right],
        "matrix": [[str(x) for x in row] for row in result.primitive.entries],
        "report": report_to_json_dict(result.report),
    }


# ----------------------------------------------------------------------
# fast bulk verification of the elimination coefficients
# ----------------------------------------------------------------------

def w1_coefficient_checker():
    """Build a fast per-tuple checker for the two elimination coefficient facts.

    Returns check(left) -> bool testing, for an integer tuple satisfying the
    degree-one restriction, that the p^3 coefficient of F vanishes and that
    the p^2 coefficient equals -128 h^2 times the documented linear form.
    The coefficient structure is extracted once from the fully symbolic F, so
    the per-tuple work is plain integer arithmetic.
    """
    forms = symbolic_diag_forms()
    a_form, b_form = forms.A, forms.B
    x = a_form.coefficient_of("w", 1)
    y = b_form.coefficient_of("w", 1)
    f = y * a_form - x * b_form

    def compile_left_poly(poly: MultiPoly) -> List[Tuple[int, Tuple[int, ...]]]:
        """[(coeff, flat index list over a..h)] for a poly in the left block."""
        compiled = []
        for exps, coeff in poly.terms.items():
            if any(exps[8:]):
                raise ValueError("polynomial has right-block variables")
            if not isinstance(coeff, int):
                raise ValueError("expected integer coefficients")
            flat = []
            for i, e in enumerate(exps[:8]):
                flat.extend([i] * e)
            compiled.append((int(coeff), tuple(flat)))
        return compiled

    p3 = compile_left_poly(f.coefficient_of("p", 3))
    p2 = f.coefficient_of("p", 2)
    if p2.degree_in("p") > 0:
        raise ValueError("unexpected p term inside the p^2 coefficient")
    p2_by_var: Dict[str, List[Tuple[int, Tuple[int, ...]]]] = {}
    for name in RIGHT_VARS[1:]:
        part = p2.coefficient_of(name, 1)
        if not part.is_zero():
            p2_by_var[name] = compile_left_poly(part)

    expected_pattern = {
        name: (t1, t2) for name, t1, t2 in _P2_PATTERN
    }

    def evaluate(compiled, values) -> int:
        total = 0
        for coeff, flat in compiled:
            term = coeff
            for i in flat:
                term *= values[i]
            total += term
        return total

    def check(left: Sequence[int]) -> bool:
        values = [int(v) for v in left]
        h = values[7]
        if evaluate(p3, values) != 0:
            return False
        factor = -128 * h * h
        for name, compiled in p2_by_var.items():
            got = evaluate(compiled, values)
            pattern = expected_pattern.get(name)
            if pattern is None:
                if got != 0:
                    return False
                continue
            (i1, j1, s1), (i2, j2, s2) = pattern
            want = factor * (s1 * values[i1] * values[j1] + s2 * values[i2] * values[j2])
            if got != want:
                return False
        return True

    return check
