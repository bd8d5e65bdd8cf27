"""Sparse multivariate polynomial arithmetic over exact rationals.

A polynomial carries an explicit, ordered variable context.  Terms are a
mapping from exponent vectors to nonzero coefficients; all arithmetic is
exact, and two polynomials are equal iff their contexts and term maps are
structurally equal.  Coefficients are ints or Fractions (an integer-valued
Fraction is stored as an int, which keeps the common all-integer case fast).

Rendering uses a canonical graded-lexicographic term order and round-trips
through parse_poly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, Mapping, Sequence, Tuple, Union

Coeff = Union[int, Fraction]
Exponents = Tuple[int, ...]

__all__ = [
    "MultiPoly",
    "parse_poly",
    "quadratic_form_coeffs",
]


def _norm_coeff(c: Coeff) -> Coeff:
    """Keep integer-valued coefficients as plain ints."""
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return int(c)
        return c
    if isinstance(c, int):
        return c
    raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")


def _grlex_key(exponents: Exponents):
    """Sort key for descending graded-lexicographic order."""
    return (-sum(exponents), tuple(-e for e in exponents))


@dataclass(frozen=True, eq=True)
class MultiPoly:
    """A sparse polynomial over an ordered tuple of named variables."""

    variables: Tuple[str, ...]
    terms: Dict[Exponents, Coeff] = field(default_factory=dict)

    def __post_init__(self):
        names = tuple(self.variables)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in context {names}")
        cleaned = {}
        for exps, c in self.terms.items():
            if len(exps) != len(names):
                raise ValueError(
                    f"exponent vector {exps} does not match context of arity {len(names)}"
                )
            c = _norm_coeff(c)
            if c:
                cleaned[tuple(exps)] = c
        object.__setattr__(self, "variables", names)
        object.__setattr__(self, "terms", cleaned)

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------
    @staticmethod
    def zero(variables: Sequence[str]) -> "MultiPoly":
        return MultiPoly(tuple(variables), {})

    @staticmethod
    def constant(variables: Sequence[str], value: Coeff) -> "MultiPoly":
        variables = tuple(variables)
        value = _norm_coeff(Fraction(value) if not isinstance(value, (int, Fraction)) else value)
        if not value:
            return MultiPoly(variables, {})
        return MultiPoly(variables, {(0,) * len(variables): value})

    @staticmethod
    def variable(variables: Sequence[str], name: str) -> "MultiPoly":
        variables = tuple(variables)
        if name not in variables:
            raise ValueError(f"unknown variable {name!r} in context {variables}")
        exps = tuple(1 if v == name else 0 for v in variables)
        return MultiPoly(variables, {exps: 1})

    @staticmethod
    def variables_of(variables: Sequence[str]) -> Tuple["MultiPoly", ...]:
        """All generators of the context, in order."""
        return tuple(MultiPoly.variable(variables, v) for v in variables)

    # ------------------------------------------------------------------
    # basic structure
    # ------------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Maximum term degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self, degree: int) -> bool:
        return all(sum(e) == degree for e in self.terms)

    def constant_value(self) -> Coeff:
        """The value of a constant polynomial."""
        if not self.terms:
            return 0
        if len(self.terms) == 1:
            (exps, c), = self.terms.items()
            if not any(exps):
                return c
        raise ValueError(f"polynomial is not constant: {self}")

    def _index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r} in context {self.variables}") from None

    def _check_context(self, other: "MultiPoly") -> None:
        if self.variables != other.variables:
            raise ValueError(
                f"variable context mismatch: {self.variables} vs {other.variables}"
            )

    # ------------------------------------------------------------------
    # ring operations
    # ------------------------------------------------------------------
    def __add__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.variables, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_context(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = out.get(exps, 0) + c
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return MultiPoly(self.variables, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.variables, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultiPoly.zero(self.variables)
            return MultiPoly(
                self.variables, {e: c * other for e, c in self.terms.items()}
            )
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_context(other)
        out: Dict[Exponents, Coeff] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(exps, 0) + c1 * c2
                if s:
                    out[exps] = s
                else:
                    out.pop(exps, None)
        return MultiPoly(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.constant(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c: Coeff) -> "MultiPoly":
        return self * c

    # ------------------------------------------------------------------
    # coefficient extraction and substitution
    # ------------------------------------------------------------------
    def degree_in(self, name: str) -> int:
        """Max exponent of the named variable; -1 for the zero polynomial."""
        i = self._index(name)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def coefficient_of(self, name: str, k: int) -> "MultiPoly":
        """The polynomial multiplying name**k, in the same context."""
        i = self._index(name)
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        out: Dict[Exponents, Coeff] = {}
        for exps, c in self.terms.items():
            if exps[i] == k:
                reduced = exps[:i] + (0,) + exps[i + 1:]
                out[reduced] = out.get(reduced, 0) + c
        return MultiPoly(self.variables, out)

    def substitute(self, name: str, value) -> "MultiPoly":
        """Substitute a rational or a same-context polynomial for a variable."""
        i = self._index(name)
        if isinstance(value, (int, Fraction)):
            out: Dict[Exponents, Coeff] = {}
            for exps, c in self.terms.items():
                k = exps[i]
                coeff = c * value**k if k else c
                if not coeff:
                    continue
                reduced = exps[:i] + (0,) + exps[i + 1:]
                s = out.get(reduced, 0) + coeff
                if s:
                    out[reduced] = s
                else:
                    out.pop(reduced, None)
            return MultiPoly(self.variables, out)
        if isinstance(value, MultiPoly):
            self._check_context(value)
            result = MultiPoly.zero(self.variables)
            powers = {0: MultiPoly.constant(self.variables, 1)}
            max_k = self.degree_in(name)
            for k in range(1, max_k + 1):
                powers[k] = powers[k - 1] * value
            for exps, c in self.terms.items():
                k = exps[i]
                reduced = exps[:i] + (0,) + exps[i + 1:]
                term = MultiPoly(self.variables, {reduced: c})
                result = result + term * powers[k]
            return result
        raise TypeError(f"cannot substitute value of type {type(value).__name__}")

    def compose(
        self, assignment: Mapping[str, "MultiPoly"], variables: Sequence[str]
    ) -> "MultiPoly":
        """Map every variable to a polynomial over a new context."""
        variables = tuple(variables)
        images = []
        for v in self.variables:
            if v not in assignment:
                raise ValueError(f"missing assignment for variable {v!r}")
            img = assignment[v]
            if img.variables != variables:
                raise ValueError(
                    f"image of {v!r} lives in context {img.variables}, expected {variables}"
                )
            images.append(img)
        result = MultiPoly.zero(variables)
        for exps, c in self.terms.items():
            term = MultiPoly.constant(variables, c)
            for img, k in zip(images, exps):
                for _ in range(k):
                    term = term * img
            result = result + term
        return result

    def eval(self, point: Mapping[str, Coeff]) -> Coeff:
        """Exact evaluation; every variable must be assigned."""
        values = []
        for v in self.variables:
            if v not in point:
                raise ValueError(f"missing assignment for variable {v!r}")
            values.append(point[v])
        total: Coeff = 0
        for exps, c in self.terms.items():
            t = c
            for val, k in zip(values, exps):
                if k:
                    t *= val**k
            total += t
        return _norm_coeff(total if isinstance(total, (int, Fraction)) else Fraction(total))

    def quadratic_coeff_table(self) -> Dict[Tuple[int, int], Coeff]:
        """Coefficient table {(i, j): c} with i <= j for a quadratic polynomial.

        c[(i, i)] multiplies x_i**2 and c[(i, j)] multiplies x_i*x_j, matching
        the table produced by quadratic_form_coeffs.
        """
        if self.terms and not self.is_homogeneous(2):
            raise ValueError("polynomial is not a homogeneous quadratic")
        table: Dict[Tuple[int, int], Coeff] = {}
        for exps, c in self.terms.items():
            support = [i for i, e in enumerate(exps) if e]
            if len(support) == 1:
                i = support[0]
                table[(i, i)] = c
            else:
                i, j = support
                table[(i, j)] = c
        return table

    # ------------------------------------------------------------------
    # rendering
    # ------------------------------------------------------------------
    def sorted_terms(self) -> Iterable[Tuple[Exponents, Coeff]]:
        for exps in sorted(self.terms, key=_grlex_key):
            yield exps, self.terms[exps]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            factors = []
            for v, e in zip(self.variables, exps):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            mono = "*".join(factors)
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = f"{mag}"
            pieces.append(("-" if c < 0 else "+", body))
        sign0, body0 = pieces[0]
        out = ("-" if sign0 == "-" else "") + body0
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"MultiPoly({','.join(self.variables)}: {self})"


def parse_poly(text: str, variables: Sequence[str]) -> MultiPoly:
    """Parse the rendering produced by str(MultiPoly) back into a polynomial."""
    variables = tuple(variables)
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return MultiPoly.zero(variables)
    # normalize into signed chunks
    s = s.replace("- ", "-").replace("+ ", "+")
    chunks = []
    for raw in s.split():
        if raw in {"+", "-"}:
            raise ValueError(f"dangling sign in {text!r}")
        chunks.append(raw)
    result = MultiPoly.zero(variables)
    for chunk in chunks:
        sign = 1
        while chunk and chunk[0] in "+-":
            if chunk[0] == "-":
                sign = -sign
            chunk = chunk[1:]
        if not chunk:
            raise ValueError(f"malformed term in {text!r}")
        coeff: Coeff = sign
        exps = [0] * len(variables)
        for factor in chunk.split("*"):
            if not factor:
                raise ValueError(f"malformed term in {text!r}")
            if factor[0].isdigit():
                coeff = coeff * Fraction(factor)
            else:
                name, _, power = factor.partition("^")
                if name not in variables:
                    raise ValueError(f"unknown variable {name!r} in {text!r}")
                exps[variables.index(name)] += int(power) if power else 1
        term = MultiPoly(variables, {tuple(exps): _norm_coeff(coeff)}) if coeff else MultiPoly.zero(variables)
        result = result + term
    return result


def quadratic_form_coeffs(
    f: Callable[[Sequence[Fraction]], Coeff],
    n: int,
    homogeneity_samples: int = 4,
) -> Dict[Tuple[int, int], Coeff]:
    """Recover the coefficient table of a homogeneous quadratic blackbox.

    c[(i, i)] = f(e_i); c[(i, j)] = f(e_i + e_j) - f(e_i) - f(e_j) for i < j.
    The caller promises f is a homogeneous quadratic; this is spot-checked by
    evaluating f(2x) = 4 f(x) at a few pseudorandom points (fixed seed, so the
    check is deterministic).
    """
    rng = random.Random(271828)
    for _ in range(homogeneity_samples):
        x = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)]
        if f([2 * xi for xi in x]) != 4 * f(x):
            raise ValueError("homogeneity check failed: blackbox is not a quadratic form")
    zero = [Fraction(0)] * n
    diag = []
    for i in range(n):
        e = list(zero)
        e[i] = Fraction(1)
        diag.append(f(e))
    table: Dict[Tuple[int, int], Coeff] = {}
    for i in range(n):
        if diag[i]:
            table[(i, i)] = _norm_coeff(diag[i])
    for i in range(n):
        for j in range(i + 1, n):
            e = list(zero)
            e[i] = Fraction(1)
            e[j] = Fraction(1)
            c = f(e) - diag[i] - diag[j]
            if c:
                table[(i, j)] = _norm_coeff(c)
    return table
