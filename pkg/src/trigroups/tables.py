"""Reference data: the 31 classified words, their non-piece factorisations,
and the hexadecimal indexing of word 13 used for its piece analysis."""

from __future__ import annotations

from dataclasses import dataclass

# (n, c, e, word)
TABLE1: tuple[tuple[int, int, int, str], ...] = (
    (1, 0, 0, "xy"),
    (2, 0, 1, "(xy)^2xy^2xyxy^2"),
    (3, 0, 2, "(xy)^3xy^2xy(xy^2)^2xyxy^2"),
    (4, 1, 0, "(xy)^2xy^2"),
    (5, 1, 1, "(xy)^3xy^2xy(xy^2)^2"),
    (6, 1, 2, "(xy)^3(xy^2)^3xyxy^2(xy)^2xy^2"),
    (7, 1, 2, "(xy)^4(xy^2)^2xyxy^2xy(xy^2)^2"),
    (8, 1, 3, "(xy)^4xy^2xy(xy^2)^3(xy)^2xy^2xy(xy^2)^2"),
    (9, 1, 4, "(xy)^4xy^2xy(xy^2)^3xy(xy^2)^2xyxy^2(xy)^2(xy^2)^3"),
    (10, 1, 4, "(xy)^4xy^2xy(xy^2)^3(xy)^3(xy^2)^2xy(xy^2)^2xyxy^2"),
    (11, 2, 0, "(xy)^3(xy^2)^2"),
    (12, 2, 1, "(xy)^3(xy^2)^3xy(xy^2)^2"),
    (13, 2, 2, "(xy)^4(xy^2)^3(xy)^2(xy^2)^2xyxy^2"),
    (14, 2, 3, "(xy)^4xy^2xy(xy^2)^2(xy)^3(xy^2)^3xy(xy^2)^2"),
    (15, 2, 3, "(xy)^4(xy^2)^3xyxy^2(xy)^2(xy^2)^3(xy)^2xy^2"),
    (16, 2, 3, "(xy)^4(xy^2)^3xy(xy^2)^3(xy)^2xy^2xy(xy^2)^2"),
    (17, 2, 4, "(xy)^4(xy^2)^2xyxy^2xy(xy^2)^2(xy)^3(xy^2)^4(xy)^2xy^2"),
    (18, 2, 4, "(xy)^4(xy^2)^3xy(xy^2)^2(xy)^3(xy^2)^3xyxy^2(xy)^2xy^2"),
    (19, 2, 4, "(xy)^4(xy^2)^4xyxy^2xy(xy^2)^2xy(xy^2)^2(xy)^3(xy^2)^2"),
    (20, 3, 1, "(xy)^4(xy^2)^3(xy)^2(xy^2)^2"),
    (21, 3, 2, "(xy)^4(xy^2)^3xy(xy^2)^2(xy)^3(xy^2)^2"),
    (22, 3, 2, "(xy)^4(xy^2)^3(xy)^2(xy^2)^3xy(xy^2)^2"),
    (23, 3, 4, "(xy)^4xy^2xy(xy^2)^4(xy)^2(xy^2)^3(xy)^2xy^2(xy)^2(xy^2)^3"),
    (24, 3, 6, "(xy)^4(xy^2)^4xyxy^2(xy)^2(xy^2)^3(xy)^3(xy^2)^2xy(xy^2)^3(xy)^3xy^2(xy)^2xy^2"),
    (25, 3, 6, "(xy)^5(xy^2)^3xy(xy^2)^2xyxy^2(xy)^3(xy^2)^4(xy)^2xy^2xy(xy^2)^2(xy)^3(xy^2)^2"),
    (
        26,
        3,
        8,
        "(xy)^5(xy^2)^4(xy)^3(xy^2)^2xyxy^2(xy)^2xy^2(xy)^3(xy^2)^3(xy)^2xy^2xy(xy^2)^4"
        "(xy)^2(xy^2)^2xyxy^2",
    ),
    (27, 4, 4, "(xy)^4(xy^2)^3(xy)^2xy^2(xy)^3(xy^2)^2(xy)^3(xy^2)^4xy(xy^2)^2"),
    (28, 4, 4, "(xy)^4(xy^2)^3xy(xy^2)^2(xy)^3(xy^2)^4(xy)^2(xy^2)^3(xy)^2xy^2"),
    (29, 4, 4, "(xy)^4(xy^2)^4(xy)^2(xy^2)^3xy(xy^2)^2(xy)^3(xy^2)^3(xy)^2xy^2"),
    (30, 4, 5, "(xy)^4(xy^2)^3(xy)^2(xy^2)^2xy(xy^2)^4(xy)^4(xy^2)^2(xy)^3(xy^2)^2xyxy^2"),
    (31, 4, 6, "(xy)^4(xy^2)^2xyxy^2(xy)^2xy^2(xy)^3(xy^2)^4xy(xy^2)^3(xy)^4(xy^2)^3(xy)^2(xy^2)^2"),
)

# n -> the three bracketed factors
TABLE2: dict[int, tuple[str, str, str]] = {
    9: ("(xy)^4", "xy^2xy(xy^2)^3xy", "(xy^2)^2xyxy^2(xy)^2(xy^2)^3"),
    10: ("(xy)^4", "xy^2xy(xy^2)^3xy", "(xy)^2(xy^2)^2xy(xy^2)^2xyxy^2"),
    14: ("(xy)^4", "xy^2xy(xy^2)^2(xy)^3xy^2", "(xy^2)^2xy(xy^2)^2"),
    15: ("(xy)^4", "(xy^2)^3xyxy^2xy", "xy(xy^2)^3(xy)^2xy^2"),
    17: ("(xy)^2(xy^2)^2xy", "xy^2xy(xy^2)^2(xy)^3xy^2", "(xy^2)^3(xy)^2xy^2(xy)^2"),
    18: ("(xy)^4", "(xy^2)^3xy(xy^2)^2(xy)^2", "xy(xy^2)^3xyxy^2(xy)^2xy^2"),
    19: ("(xy)^4(xy^2)^4xyxy^2", "xy(xy^2)^2xyxy^2", "xy^2(xy)^3(xy^2)^2"),
    22: ("(xy)^4", "(xy^2)^3(xy)^2(xy^2)^2", "xy^2xy(xy^2)^2"),
    23: ("xyxy^2xy(xy^2)^4(xy)^2xy^2", "(xy^2)^2(xy)^2xy^2xy", "xy(xy^2)^3(xy)^3"),
    24: (
        "(xy)^3(xy^2)^4xyxy^2xy",
        "xy(xy^2)^3(xy)^3(xy^2)^2xy(xy^2)^2",
        "xy^2(xy)^3xy^2(xy)^2xy^2xy",
    ),
    25: ("(xy)^5", "(xy^2)^3xy(xy^2)^2", "xyxy^2(xy)^3(xy^2)^4(xy)^2xy^2xy(xy^2)^2(xy)^3(xy^2)^2"),
    26: (
        "(xy)^5",
        "(xy^2)^4(xy)^3",
        "(xy^2)^2xyxy^2(xy)^2xy^2(xy)^3(xy^2)^3(xy)^2xy^2xy(xy^2)^4(xy)^2(xy^2)^2xyxy^2",
    ),
    27: ("(xy)^4(xy^2)^3(xy)^2xy^2xy", "(xy)^2(xy^2)^2xy", "(xy)^2(xy^2)^4xy(xy^2)^2"),
    28: ("(xy^2)^3xy(xy^2)^2(xy)^3(xy^2)^3", "xy^2(xy)^2(xy^2)^2", "xy^2(xy)^2xy^2(xy)^4"),
    30: ("(xy)^4(xy^2)^3", "(xy)^2(xy^2)^2xy(xy^2)^2", "(xy^2)^2(xy)^4(xy^2)^2(xy)^3(xy^2)^2xyxy^2"),
    31: ("(xy)^4(xy^2)^2xy", "xy^2(xy)^2xy^2xy", "(xy)^2(xy^2)^4xy(xy^2)^3(xy)^4(xy^2)^3(xy)^2(xy^2)^2"),
}

# Word 13 indexed 0..C with y^-1 written as y^2.
W13_HEX_ALPHAS: tuple[int, ...] = (1, 2, 1, 1, 1, 1, 2, 2, 2, 1, 1, 2, 2)

W13_NONPIECES: tuple[str, ...] = ("0..4", "5..9", "A..1", "2..5", "6..A", "7..B")


@dataclass(frozen=True)
class Row:
    n: int
    c: int
    e: int
    text: str

    @property
    def ell(self) -> int:
        return 1 + 2 * self.c + 4 * self.e


def table1_rows() -> list[Row]:
    return [Row(*r) for r in TABLE1]


def table1_row(n: int) -> Row:
    for r in TABLE1:
        if r[0] == n:
            return Row(*r)
    raise KeyError(n)
