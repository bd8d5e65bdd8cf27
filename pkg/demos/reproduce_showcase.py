"""Walk through the showcase matrices shipped as fixtures.

Run from anywhere:  python3 demos/reproduce_showcase.py
"""

from fractions import Fraction
from pathlib import Path

from eulermagic import (
    four_parameter_family,
    magic_square_of_squares,
    parse_matrix_text,
    verify,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def show(path: Path) -> None:
    matrix = parse_matrix_text(path.read_text())
    report = verify(matrix)
    dup = ", ".join(f"{a}~{b}" for a, b in report.duplicate_pairs) or "none"
    print(
        f"{path.name}: n={report.n} gamma={report.gamma} "
        f"euler_magic={report.is_euler_magic} proper={report.is_proper} "
        f"distinct={report.distinct_square_count} duplicates: {dup}"
    )


def main() -> None:
    print("== fixture census ==")
    for name in ("euler4.txt", "family8.txt", "search8.txt",
                 "five5_1.txt", "five5_2.txt", "five5_3.txt",
                 "five5_4.txt", "five5_5.txt"):
        show(FIXTURES / name)

    print()
    print("== the 4x4 matrix squared entrywise is a magic square ==")
    matrix = parse_matrix_text((FIXTURES / "euler4.txt").read_text())
    square = magic_square_of_squares(matrix)
    for row in square.squares.entries:
        print(" ".join(str(v).rjust(4) for v in row))
    print("all ten sums equal gamma:", square.all_sums_equal_gamma(),
          "(gamma =", str(square.gamma) + ")")

    print()
    print("== the four-parameter family ==")
    showcase = four_parameter_family(-55, -11, -27, -148)
    print("at (-55, -11, -27, -148): X =", showcase.x_value,
          "right =", tuple(str(v) for v in showcase.right))
    fixture = parse_matrix_text((FIXTURES / "family8.txt").read_text())
    print("matches family8.txt entry-for-entry:",
          showcase.primitive.entries == fixture.entries)

    fresh = four_parameter_family(Fraction(1, 2), 3, -2, 7)
    print("at (1/2, 3, -2, 7): gamma =", fresh.report.gamma,
          "euler_magic =", fresh.report.is_euler_magic,
          "proper =", fresh.report.is_proper)


if __name__ == "__main__":
    main()
