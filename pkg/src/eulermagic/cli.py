"""Command-line front end.

Subcommands: verify, family, prove3, perm, search5, search8, forms.  Every
subcommand is a thin adapter over the library; no arithmetic lives here.

Exit codes: 0 success (or verified true), 1 verified false (input was read
fine but the matrix is not Euler magic / an identity failed), 2 usage or
input errors.  Randomized subcommands require an explicit --seed so runs are
reproducible by construction.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from .cayley import certificate_to_json, certificate_to_text, nonexistence_certificate
from .family8 import (
    diag_forms,
    eliminate_w,
    family_result_to_json_dict,
    four_parameter_family,
    w1_check,
)
from .matrices import format_matrix_text, matrix_to_json_dict, parse_matrix_text
from .permutations import construction_permutation, improper_construction
from .search import (
    SearchConfig,
    candidate_to_json_dict,
    canonical_json,
    search5_cayley,
    search8_seeded,
    summary_to_json_dict,
)
from .verify import report_to_json_dict, report_to_text, verify

__all__ = ["main"]


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


# lets negative rationals like -14/15 pass as argument values, not options
_NEGATIVE_RATIONAL = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = _NEGATIVE_RATIONAL


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="eulermagic",
        description="Exact construction, verification, and search for Euler's magic matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_verify = sub.add_parser("verify", help="verify a matrix file against the three conditions")
    p_verify.add_argument("path", help="matrix file (whitespace-separated rationals; # comments)")
    p_verify.add_argument("--json", action="store_true", help="machine-readable report")

    p_family = sub.add_parser("family", help="evaluate the four-parameter proper family")
    for name in ("q", "r", "t", "u"):
        p_family.add_argument(name, type=_fraction)
    p_family.add_argument("--json", action="store_true")

    p_prove3 = sub.add_parser(
        "prove3", help="print the 3x3 nonexistence certificate (polynomial identities)")
    p_prove3.add_argument("--json", action="store_true")

    p_perm = sub.add_parser("perm", help="permutation construction for n >= 4")
    p_perm.add_argument("n", type=int)
    p_perm.add_argument("--json", action="store_true")

    p_s5 = sub.add_parser("search5", help="seeded random 5x5 Cayley search (JSON lines)")
    p_s5.add_argument("--seed", type=int, required=True)
    p_s5.add_argument("--iterations", type=int, default=1000)
    p_s5.add_argument("--numerator-bound", type=int, default=120)
    p_s5.add_argument("--denominator-bound", type=int, default=8)
    p_s5.add_argument("--score-threshold", type=int, default=1)
    p_s5.add_argument("--workers", type=int, default=1)

    p_s8 = sub.add_parser(
        "search8", help="8x8 pipeline: fixed left tuple and (p..t), solve for (u,v,w) (JSON lines)")
    p_s8.add_argument("--left", type=int, nargs=8, required=True, metavar="L")
    p_s8.add_argument("--partial", type=_fraction, nargs=5, required=True, metavar="P")
    p_s8.add_argument("--solution", type=_fraction, nargs=3, metavar="S",
                      help="candidate (u, v, w) to verify exactly")
    p_s8.add_argument("--height", type=int, default=0,
                      help="bounded-height (u, v) grid radius; 0 disables")
    p_s8.add_argument("--center", type=_fraction, nargs=2, metavar="C",
                      help="grid center (default 0 0)")
    p_s8.add_argument("--workers", type=int, default=1)

    p_forms = sub.add_parser(
        "forms", help="print the diagonal quadratic forms A and B for a left tuple")
    p_forms.add_argument("left", type=int, nargs=8, metavar="L")
    p_forms.add_argument("--json", action="store_true")

    return parser


def _cmd_verify(args) -> int:
    try:
        with open(args.path, "r", encoding="utf-8") as handle:
            matrix = parse_matrix_text(handle.read())
    except OSError as exc:
        print(f"error: cannot read {args.path}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not matrix.is_square():
        print("error: matrix is not square", file=sys.stderr)
        return 2
    report = verify(matrix)
    if args.json:
        print(canonical_json(report_to_json_dict(report)))
    else:
        print(report_to_text(report))
    return 0 if report.is_euler_magic else 1


def _cmd_family(args) -> int:
    try:
        result = four_parameter_family(args.q, args.r, args.t, args.u)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(canonical_json(family_result_to_json_dict(result)))
    else:
        print(f"X: {result.x_value}")
        print("right:", " ".join(str(v) for v in result.right))
        print(format_matrix_text(result.primitive))
        print(report_to_text(result.report))
    return 0


def _cmd_prove3(args) -> int:
    lines = nonexistence_certificate()
    if args.json:
        print(canonical_json(certificate_to_json(lines)))
    else:
        print(certificate_to_text(lines))
    ok = all(line.status in ("PASS", "AXIOM") for line in lines)
    return 0 if ok else 1


def _cmd_perm(args) -> int:
    try:
        sigma = construction_permutation(args.n)
        matrix = improper_construction(args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = verify(matrix)
    if args.json:
        print(canonical_json({
            "images": list(sigma.images),
            "matrix": matrix_to_json_dict(matrix),
            "report": report_to_json_dict(report),
        }))
    else:
        print("images:", " ".join(str(i) for i in sigma.images))
        print(format_matrix_text(matrix))
        print(report_to_text(report))
    return 0 if report.is_euler_magic else 1


def _emit_search(result) -> None:
    for candidate in result.candidates:
        print(canonical_json(candidate_to_json_dict(candidate)))
    print(canonical_json(summary_to_json_dict(result)))


def _cmd_search5(args) -> int:
    try:
        config = SearchConfig(
            seed=args.seed,
            numerator_bound=args.numerator_bound,
            denominator_bound=args.denominator_bound,
            max_iterations=args.iterations,
            score_threshold=args.score_threshold,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit_search(search5_cayley(config, workers=args.workers))
    return 0


def _cmd_search8(args) -> int:
    try:
        result = search8_seeded(
            args.left,
            args.partial,
            supplied=args.solution,
            height=args.height,
            center=tuple(args.center) if args.center else None,
            workers=args.workers,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit_search(result)
    return 0


def _cmd_forms(args) -> int:
    forms = diag_forms(args.left)
    restricted = w1_check(args.left)
    if args.json:
        payload = {
            "left": list(args.left),
            "A": str(forms.A),
            "B": str(forms.B),
            "degree_one_restriction": restricted,
        }
        if restricted:
            f, x, y = eliminate_w(forms)
            payload.update({"F": str(f), "x": str(x), "y": str(y)})
        print(canonical_json(payload))
    else:
        print(f"A: {forms.A}")
        print(f"B: {forms.B}")
        if restricted:
            f, x, y = eliminate_w(forms)
            print(f"x: {x}")
            print(f"y: {y}")
            print(f"F: {f}")
    return 0


_HANDLERS = {
    "verify": _cmd_verify,
    "family": _cmd_family,
    "prove3": _cmd_prove3,
    "perm": _cmd_perm,
    "search5": _cmd_search5,
    "search8": _cmd_search8,
    "forms": _cmd_forms,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    return _HANDLERS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
