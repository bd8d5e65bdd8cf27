"""Seeded, reproducible search harnesses.

Two search styles share this module:

* a random 5x5 search that samples rational skew-symmetric parameters,
  applies the Cayley transform, and keeps exact hits of the two diagonal
  conditions (near misses - exactly one condition holding - are counted);
* a deterministic 8x8 pipeline that fixes a left tuple and five of the right
  coefficients, then solves the remaining two quadratic conditions for w over
  a bounded-height grid of (u, v) values, optionally verifying a supplied
  solution first.

Reproducibility contract: the pseudo-random source is xorshift64* (shift
triple 12/25/27, multiplier 0x2545F4914F6CDD1D).  Sample number i of a run
with seed s draws from an independent generator seeded with
(s + (i+1) * 0x9E3779B97F4A7C15) mod 2^64, so partitioning samples across
workers cannot change any stream.  Integers in [lo, hi] are taken by modulo
reduction of the 64-bit output (the modulo bias is negligible for the tiny
spans used here and is fixed by this contract).  Candidate lists are merged
in (score descending, sample index ascending) order, which makes output
byte-identical for equal seeds regardless of worker count.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .cayley import cayley, skew_from_upper
from .family8 import diag_forms, improper_witnesses
from .matrices import Matrix, SingularMatrixError, mat_mul, rescale_primitive
from .octonion import RIGHT_VARS, left_matrix, right_matrix
from .poly import MultiPoly
from .verify import VerifyReport, verify

__all__ = [
    "Xorshift64Star",
    "stream_seed",
    "SearchConfig",
    "Candidate",
    "SearchResult",
    "search5_cayley",
    "search8_seeded",
    "greedy_backtrack_left",
    "candidate_to_json_dict",
    "summary_to_json_dict",
    "canonical_json",
]

_MASK64 = (1 << 64) - 1
_MULTIPLIER = 0x2545F4914F6CDD1D
_STREAM_STEP = 0x9E3779B97F4A7C15


class Xorshift64Star:
    """xorshift64* with the documented constants; never yields a zero state."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64
        if self.state == 0:
            self.state = _STREAM_STEP

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & _MASK64
        x ^= x >> 27
        self.state = x
        return (x * _MULTIPLIER) & _MASK64

    def uniform_int(self, lo: int, hi: int) -> int:
        """Uniform on [lo, hi] by modulo reduction (bias fixed by contract)."""
        if lo > hi:
            raise ValueError("empty range")
        return lo + self.next_u64() % (hi - lo + 1)

    def rational(self, numerator_bound: int, denominator_bound: int) -> Fraction:
        """Numerator uniform in [-N, N], denominator uniform in [1, D], reduced."""
        num = self.uniform_int(-numerator_bound, numerator_bound)
        den = self.uniform_int(1, denominator_bound)
        return Fraction(num, den)


def stream_seed(seed: int, index: int) -> int:
    """The per-sample generator seed; independent of how samples are batched."""
    return (seed + (index + 1) * _STREAM_STEP) & _MASK64


@dataclass(frozen=True)
class SearchConfig:
    seed: int
    numerator_bound: int = 120
    denominator_bound: int = 8
    max_iterations: int = 1000
    score_threshold: int = 1

    def __post_init__(self):
        if self.numerator_bound < 1 or self.denominator_bound < 1:
            raise ValueError("bounds must be at least 1")
        if self.max_iterations < 0:
            raise ValueError("max_iterations must be nonnegative")


@dataclass(frozen=True)
class Candidate:
    sample_index: int
    source_params: Tuple[Fraction, ...]
    matrix: Matrix
    score: int
    duplicates: Tuple[Tuple[Tuple[int, int], Tuple[int, int]], ...]
    gamma: Fraction


@dataclass(frozen=True)
class SearchResult:
    candidates: Tuple[Candidate, ...]
    iterations: int
    hits: int
    near_misses: int
    best_score: int


def _canonical_sign(m: Matrix) -> Matrix:
    """The lexicographically smaller of the matrix and its negation."""
    negated = tuple(tuple(-x for x in row) for row in m.entries)
    if negated < m.entries:
        return Matrix.from_rows([list(r) for r in negated])
    return m


def _make_candidate(index: int, params: Sequence[Fraction], primitive: Matrix,
                    report: VerifyReport) -> Candidate:
    return Candidate(
        sample_index=index,
        source_params=tuple(Fraction(x) for x in params),
        matrix=_canonical_sign(primitive),
        score=report.distinct_square_count,
        duplicates=report.duplicate_pairs,
        gamma=report.gamma,
    )


def _rank(candidates: Iterable[Candidate]) -> Tuple[Candidate, ...]:
    """(score desc, sample index asc), deduplicated by canonical matrix."""
    ordered = sorted(
        candidates,
        key=lambda c: (-c.score, c.sample_index, c.matrix.entries, c.source_params),
    )
    seen = set()
    out = []
    for c in ordered:
        if c.matrix.entries not in seen:
            seen.add(c.matrix.entries)
            out.append(c)
    return tuple(out)


# ----------------------------------------------------------------------
# 5x5 random Cayley search
# ----------------------------------------------------------------------

def _search5_sample(config: SearchConfig, index: int):
    """(candidate | None, is_hit, is_near_miss) for one sample index."""
    rng = Xorshift64Star(stream_seed(config.seed, index))
    params = tuple(
        rng.rational(config.numerator_bound, config.denominator_bound)
        for _ in range(10)
    )
    try:
        m = cayley(skew_from_upper(5, params))
        primitive = rescale_primitive(m)
    except (SingularMatrixError, ValueError):
        return None, False, False
    report = verify(primitive)
    if report.is_euler_magic:
        if report.distinct_square_count >= config.score_threshold:
            return _make_candidate(index, params, primitive, report), True, False
        return None, True, False
    if report.cond_diagonal != report.cond_antidiagonal:
        return None, False, True
    return None, False, False


def _search5_run_indices(config: SearchConfig, indices: Sequence[int]):
    candidates: List[Candidate] = []
    hits = near = 0
    for i in indices:
        cand, is_hit, is_near = _search5_sample(config, i)
        if cand is not None:
            candidates.append(cand)
        hits += is_hit
        near += is_near
    return candidates, hits, near


def search5_cayley(config: SearchConfig, workers: int = 1) -> SearchResult:
    """Random rational skew parameters -> Cayley -> exact condition checks.

    Fully reproducible from the seed: identical configurations give identical
    results for any worker count.
    """
    indices = list(range(config.max_iterations))
    if workers <= 1 or len(indices) < 2:
        parts = [_search5_run_indices(config, indices)]
    else:
        from multiprocessing import Pool

        chunks = [indices[k::workers] for k in range(workers)]
        with Pool(workers) as pool:
            parts = pool.starmap(_search5_run_indices, [(config, c) for c in chunks])
    candidates: List[Candidate] = []
    hits = near = 0
    for part_candidates, part_hits, part_near in parts:
        candidates.extend(part_candidates)
        hits += part_hits
        near += part_near
    ranked = _rank(candidates)
    best = ranked[0].score if ranked else 0
    return SearchResult(ranked, len(indices), hits, near, best)


# ----------------------------------------------------------------------
# 8x8 seeded pipeline
# ----------------------------------------------------------------------

def _bounded_height_offsets(height: int) -> List[Fraction]:
    """0 and all reduced n/d with 1 <= |n| <= height, 1 <= d <= height,
    ordered by (|x|, x)."""
    values = {Fraction(0)}
    for den in range(1, height + 1):
        for num in range(1, height + 1):
            values.add(Fraction(num, den))
            values.add(Fraction(-num, den))
    return sorted(values, key=lambda x: (abs(x), x))


def _rational_sqrt(value: Fraction) -> Optional[Fraction]:
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def _w_roots(poly: MultiPoly) -> Optional[List[Fraction]]:
    """Rational roots of a polynomial in w alone (degree <= 2); None means
    the zero polynomial (every w is a root)."""
    if poly.is_zero():
        return None
    c2 = poly.coefficient_of("w", 2).constant_value()
    c1 = poly.coefficient_of("w", 1).constant_value()
    c0 = poly.coefficient_of("w", 0).constant_value()
    if poly.degree_in("w") > 2:
        raise ValueError("internal error: w-degree above 2")
    if c2 == 0:
        if c1 == 0:
            return []  # nonzero constant: no roots
        return [Fraction(-c0, c1)]
    disc = Fraction(c1) ** 2 - 4 * Fraction(c2) * Fraction(c0)
    root = _rational_sqrt(disc)
    if root is None:
        return []
    if root == 0:
        return [Fraction(-c1, 2 * c2)]
    return sorted([Fraction(-c1 + root, 2 * c2), Fraction(-c1 - root, 2 * c2)])


def _specialized_entries_proper(left: Sequence[Fraction],
                                partial: Sequence[Fraction]) -> bool:
    """Whether M with p..t fixed has pairwise-distinct entry squares as
    polynomials in (u, v, w)."""
    m = mat_mul(left_matrix(list(left)), right_matrix(
        list(MultiPoly.variables_of(RIGHT_VARS))))
    seen = set()
    for i in range(8):
        for j in range(8):
            f = m.entry(i, j)
            for name, value in zip(("p", "q", "r", "s", "t"), partial):
                f = f.substitute(name, value)
            key_pos = tuple(sorted(f.terms.items()))
            key_neg = tuple(sorted((-f).terms.items()))
            key = min(key_pos, key_neg)
            if key in seen:
                return False
            seen.add(key)
    return True


def _search8_check_point(a_uv: MultiPoly, b_uv: MultiPoly, u: Fraction, v: Fraction):
    """Solve for w at one (u, v) point: (list of w hits, near_miss flag)."""
    a_w = a_uv.substitute("u", u).substitute("v", v)
    b_w = b_uv.substitute("u", u).substitute("v", v)
    roots_a = _w_roots(a_w)
    roots_b = _w_roots(b_w)
    if roots_a is None and roots_b is None:
        return [], False  # a full line of solutions; outside this harness
    if roots_a is None:
        return roots_b, False
    if roots_b is None:
        return roots_a, False
    common = sorted(set(roots_a) & set(roots_b))
    near = bool((set(roots_a) | set(roots_b)) and not common)
    return common, near


def _search8_grid_chunk(left, partial, points):
    """points: list of (sample_index, u, v). Returns (candidates, hits, near)."""
    forms = diag_forms(left)
    a_uv, b_uv = forms.A, forms.B
    for name, value in zip(("p", "q", "r", "s", "t"), partial):
        a_uv = a_uv.substitute(name, value)
        b_uv = b_uv.substitute(name, value)
    candidates: List[Candidate] = []
    hits = near_misses = 0
    lmat = left_matrix(list(left))
    for index, u, v in points:
        ws, near = _search8_check_point(a_uv, b_uv, u, v)
        near_misses += near
        for w in ws:
            right = tuple(partial) + (u, v, w)
            matrix = mat_mul(lmat, right_matrix(list(right)))
            try:
                primitive = rescale_primitive(matrix)
            except ValueError:
                continue
            report = verify(primitive)
            if not report.is_euler_magic:
                raise ValueError("internal error: solved point failed verification")
            candidates.append(_make_candidate(index, right, primitive, report))
            hits += 1
    return candidates, hits, near_misses


def search8_seeded(
    left: Sequence[int],
    partial: Sequence[Fraction],
    supplied: Optional[Sequence[Fraction]] = None,
    height: int = 0,
    center: Optional[Tuple[Fraction, Fraction]] = None,
    workers: int = 1,
) -> SearchResult:
    """Fix the left tuple and (p,q,r,s,t); solve A = B = 0 for (u,v,w).

    The left tuple must give a proper polynomial matrix (witness scan), and
    the specialization by the partial values must preserve that, else error.
    A supplied (u,v,w) is verified exactly as sample 0.  With height >= 1 the
    (u,v) plane is scanned over bounded-height offsets around center
    (default (0,0)); at each point the two conditions become polynomials of
    degree <= 2 in w, solved exactly over the rationals.
    """
    left = tuple(Fraction(x) for x in left)
    partial = tuple(Fraction(x) for x in partial)
    if len(partial) != 5:
        raise ValueError("expected exactly five fixed values (p, q, r, s, t)")
    scan = improper_witnesses(left)
    if not scan.polynomial_matrix_proper or scan.properness_obstructed:
        raise ValueError("polynomial matrix improper")
    if not _specialized_entries_proper(left, partial):
        raise ValueError("polynomial matrix improper after fixing (p, q, r, s, t)")

    points: List[Tuple[int, Fraction, Fraction]] = []
    next_index = 0
    supplied_point: Optional[Tuple[int, Fraction, Fraction]] = None
    supplied_w: Optional[Fraction] = None
    if supplied is not None:
        u, v, w = (Fraction(x) for x in supplied)
        supplied_point = (next_index, u, v)
        supplied_w = w
        next_index += 1
    if height > 0:
        cu, cv = (Fraction(0), Fraction(0)) if center is None else (
            Fraction(center[0]), Fraction(center[1]))
        offsets = _bounded_height_offsets(height)
        for du in offsets:
            for dv in offsets:
                points.append((next_index, cu + du, cv + dv))
                next_index += 1

    candidates: List[Candidate] = []
    hits = near_misses = 0

    if supplied_point is not None:
        got, _, extra_near = _search8_grid_chunk(left, partial, [supplied_point])
        kept = [c for c in got if c.source_params[7] == supplied_w]
        if not kept:
            raise ValueError("supplied solution does not satisfy the diagonal conditions")
        candidates.extend(kept)
        hits += len(kept)
        near_misses += extra_near

    if points:
        if workers <= 1 or len(points) < 2:
            parts = [_search8_grid_chunk(left, partial, points)]
        else:
            from multiprocessing import Pool

            chunks = [points[k::workers] for k in range(workers)]
            with Pool(workers) as pool:
                parts = pool.starmap(
                    _search8_grid_chunk,
                    [(left, partial, chunk) for chunk in chunks],
                )
        for part_candidates, part_hits, part_near in parts:
            candidates.extend(part_candidates)
            hits += part_hits
            near_misses += part_near

    ranked = _rank(candidates)
    best = ranked[0].score if ranked else 0
    return SearchResult(ranked, next_index, hits, near_misses, best)


# ----------------------------------------------------------------------
# greedy backtracking over small left/partial tuples
# ----------------------------------------------------------------------

_GREEDY_NAMES = ("a", "b", "c", "d", "e", "f", "g", "h", "p", "q", "r", "s", "t")


def _greedy_values(lo: int, hi: int, rng: Xorshift64Star) -> List[int]:
    """Integers of [lo, hi] in increasing |value|, seed-shuffled within ties."""
    by_abs: Dict[int, List[int]] = {}
    for v in range(lo, hi + 1):
        by_abs.setdefault(abs(v), []).append(v)
    out: List[int] = []
    for a in sorted(by_abs):
        group = sorted(by_abs[a])
        for k in range(len(group) - 1, 0, -1):
            j = rng.uniform_int(0, k)
            group[k], group[j] = group[j], group[k]
        out.extend(group)
    return out


def greedy_backtrack_left(
    bounds,
    seed: int,
    max_results: int = 16,
    max_nodes: Optional[int] = None,
) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Depth-first assignment of (a..h, p..t) by increasing absolute value.

    bounds is one (lo, hi) pair applied to all thirteen positions, or a
    sequence of thirteen such pairs.  After each assignment the 64 entry
    polynomials (in the still-free variables) are compared up to sign; a
    collision means two entry squares already coincide identically, so the
    branch is pruned.  Tuples that survive with all thirteen values placed
    have a proper polynomial matrix in (u, v, w) and are emitted as
    (left, partial) pairs.  Deterministic for a given seed; max_nodes bounds
    the number of assignments tried (the budget is part of the result's
    reproducibility contract, not a wall-clock cutoff).
    """
    bounds = list(bounds)
    if len(bounds) == 2 and all(isinstance(b, int) for b in bounds):
        per_position = [(bounds[0], bounds[1])] * 13
    else:
        per_position = [(int(lo), int(hi)) for lo, hi in bounds]
        if len(per_position) != 13:
            raise ValueError("need bounds for exactly 13 positions")
    for lo, hi in per_position:
        if lo > hi:
            raise ValueError("empty bound range")

    rng = Xorshift64Star(seed)
    orders = [_greedy_values(lo, hi, rng) for lo, hi in per_position]

    from .family8 import product_matrix

    base = product_matrix(None)
    results: List[Tuple[Tuple[int, ...], Tuple[int, ...]]] = []

    def entries_clash(matrix: Matrix) -> bool:
        seen = set()
        for i in range(8):
            for j in range(8):
                f = matrix.entry(i, j)
                key_pos = tuple(sorted(f.terms.items()))
                key_neg = tuple(sorted((-f).terms.items()))
                key = min(key_pos, key_neg)
                if key in seen:
                    return True
                seen.add(key)
        return False

    nodes_left = [max_nodes if max_nodes is not None else -1]

    def descend(depth: int, matrix: Matrix, assigned: List[int]) -> bool:
        if len(results) >= max_results:
            return True
        if depth == 13:
            results.append((tuple(assigned[:8]), tuple(assigned[8:])))
            return len(results) >= max_results
        name = _GREEDY_NAMES[depth]
        for value in orders[depth]:
            if nodes_left[0] == 0:
                return True
            if nodes_left[0] > 0:
                nodes_left[0] -= 1
            substituted = Matrix.from_rows(
                [[matrix.entry(i, j).substitute(name, value) for j in range(8)]
                 for i in range(8)]
            )
            if entries_clash(substituted):
                continue
            assigned.append(value)
            if descend(depth + 1, substituted, assigned):
                assigned.pop()
                return True
            assigned.pop()
        return False

    descend(0, base, [])
    return results


# ----------------------------------------------------------------------
# JSON output
# ----------------------------------------------------------------------

def canonical_json(value) -> str:
    return json.dumps(value, sort_keys=True, separators=(",", ":"))


def candidate_to_json_dict(candidate: Candidate) -> dict:
    return {
        "sample_index": candidate.sample_index,
        "source_params": [str(x) for x in candidate.source_params],
        "matrix": [[str(x) for x in row] for row in candidate.matrix.entries],
        "gamma": str(candidate.gamma),
        "score": candidate.score,
        "duplicates": [
            [[i, j], [k, l]] for (i, j), (k, l) in candidate.duplicates
        ],
    }


def summary_to_json_dict(result: SearchResult) -> dict:
    return {
        "summary": True,
        "iterations": result.iterations,
        "hits": result.hits,
        "near_misses": result.near_misses,
        "best_score": result.best_score,
    }
