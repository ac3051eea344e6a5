"""Golden data: the published example codes, with generator strings kept as printed.

Table 1 lists F4-skew cyclic codes used as the R-block components, Table 2
lists F4-cyclic codes used as the F4 block, and Table 3 lists the parameters
of the resulting Gray images.  Strings keep their TeX exponent braces and the
lowercase ``x^3`` of Table 2 row 7; the polynomial parser normalizes both.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["SkewRow", "CyclicRow", "ProductRow", "TABLE1", "TABLE2", "TABLE3"]


@dataclass(frozen=True)
class SkewRow:
    row: int
    n: int
    k: int
    d: int
    generators: tuple[str, ...]


@dataclass(frozen=True)
class CyclicRow:
    row: int
    n: int
    k: int
    d: int
    generator: str


@dataclass(frozen=True)
class ProductRow:
    row: int
    n: int
    k: int
    d: int


TABLE1 = (
    SkewRow(1, 6, 3, 4, ("w + w^2 X + w^2 X^2 + X^3",)),
    SkewRow(
        2, 30, 19, 7,
        (
            "w^2 X + X^2 + X^4 + w^2 X^6 + X^8 + w^2 X^{10} + X^{11}",
            "w + w^2 X + X^2 + X^4 + w^2 X^6 + X^8 + w^2 X^{10} + X^{11}",
        ),
    ),
    SkewRow(3, 12, 3, 8, ("w^2 + w X + w X^2 + X^3 + w^2 X^6 + w X^7 + w X^8 + X^9",)),
    SkewRow(
        4, 22, 11, 8,
        ("1 + X + w X^2 + w X^3 + X^4 + X^5 + X^6 + X^7 + w^2 X^8 + w^2 X^9 + X^{10} + X^{11}",),
    ),
    SkewRow(
        5, 38, 19, 12,
        (
            "1 + X + w^2 X^2 + w^2 X^3 + w^2 X^6 + w^2 X^7 + w^2 X^8 + w^2 X^9 + w X^{10}"
            " + w X^{11} + w X^{12} + w X^{13} + w X^{16} + w X^{17} + X^{18} + X^{19}",
            "1 + X + w X^2 + w X^3 + w X^6 + w X^7 + w X^8 + w X^9 + w^2 X^{10}"
            " + w^2 X^{11} + w^2 X^{12} + w^2 X^{13} + w^2 X^{16} + w^2 X^{17} + X^{18} + X^{19}",
        ),
    ),
    SkewRow(
        6, 30, 6, 18,
        (
            "w + w X + w^2 X^2 + X^3 + X^5 + w^2 X^6 + w X^7 + X^8 + w^2 X^9 + X^{10}"
            " + w X^{11} + w X^{12} + X^{14} + X^{15} + w^2 X^{16} + w X^{17} + X^{18}"
            " + w^2 X^{19} + w^2 X^{20} + X^{22} + X^{23} + X^{24}",
        ),
    ),
)  # fmt: skip

TABLE2 = (
    CyclicRow(1, 4, 1, 4, "X^3 + X^2 + X + 1"),
    CyclicRow(2, 5, 2, 4, "X^3 + w X^2 + w X + 1"),
    CyclicRow(3, 7, 3, 4, "X^4 + X^2 + X + 1"),
    CyclicRow(4, 15, 11, 4, "X^4 + X^3 + X^2 + w^2 X + w"),
    CyclicRow(5, 17, 13, 4, "X^4 + X^3 + w X^2 + X + 1"),
    CyclicRow(6, 35, 30, 4, "X^5 + w^2 X^4 + w X^2 + w X + 1"),
    CyclicRow(7, 15, 7, 7, "X^8 + X^6 + w X^5 + w X^4 + x^3 + w X^2 + w^2"),
    CyclicRow(8, 17, 9, 7, "X^8 + w X^7 + w X^5 + w X^4 + w X^3 + w X + 1"),
    CyclicRow(9, 19, 10, 7, "X^9 + w X^8 + w X^6 + w X^5 + w^2 X^4 + w^2 X^3 + w^2 X + 1"),
    CyclicRow(10, 35, 24, 7, "X^{11} + w X^{10} + X^9 + w X^8 + w X^7 + w X^5 + w X^3 + X + 1"),
    CyclicRow(11, 41, 30, 7, "X^{11} + w X^{10} + w X^7 + w^2 X^6 + w^2 X^5 + w X^4 + w X + 1"),
    CyclicRow(12, 15, 6, 8, "X^9 + w X^8 + X^7 + X^5 + w X^4 + w^2 X^2 + w^2 X + 1"),
    CyclicRow(13, 17, 8, 8, "X^9 + w^2 X^8 + w X^7 + w X^6 + w X^3 + w X^2 + w^2 X + 1"),
    CyclicRow(
        14, 19, 9, 8,
        "X^{10} + w X^9 + w^2 X^8 + w^2 X^7 + X^5 + w X^3 + w X^2 + w^2 X + 1",
    ),
    CyclicRow(
        15, 21, 10, 8,
        "X^{11} + w X^{10} + X^8 + w^2 X^7 + w X^6 + X^5 + w X^4 + X^3 + w X^2 + X + w",
    ),
    CyclicRow(
        16, 35, 23, 8,
        "X^{12} + w^2 X^{11} + w^2 X^{10} + w^2 X^9 + w X^7 + w X^6 + w X^5"
        " + w X^4 + w X^3 + X^2 + 1",
    ),
    CyclicRow(
        17, 43, 29, 8,
        "X^{14} + w^2 X^{13} + w^2 X^{12} + X^{11} + w^2 X^9 + w X^5 + X^3 + w X^2 + w X + 1",
    ),
    CyclicRow(
        18, 15, 2, 12,
        "X^{13} + w X^{12} + w X^{11} + X^{10} + X^8 + w X^7 + w X^6 + X^5"
        " + X^3 + w X^2 + w X + 1",
    ),
    CyclicRow(
        19, 17, 4, 12,
        "X^{13} + X^{12} + w X^{11} + X^9 + w X^8 + w^2 X^7 + w^2 X^6 + w X^5"
        " + X^4 + w X^2 + X + 1",
    ),
    CyclicRow(
        20, 21, 6, 12,
        "X^{15} + X^{14} + w^2 X^{13} + w^2 X^{12} + X^{11} + w X^{10} + X^9"
        " + w^2 X^8 + X^7 + X^6 + X^5 + w X^4 + w^2 X^3 + w X^2 + wX + 1",
    ),
    CyclicRow(
        21, 29, 14, 12,
        "X^{15} + w^2 X^{14} + w X^{13} + w X^{12} + X^{11} + w X^{10} + w X^9"
        " + X^8 + X^7 + w X^6 + w X^5 + X^4 + w X^3 + w X^2 + w^2 X + 1",
    ),
    CyclicRow(
        22, 37, 18, 12,
        "X^{19} + w X^{18} + w X^{17} + w X^{15} + X^{13} + w^2 X^{12} + w X^{11}"
        " + w X^{10} + w X^9 + w X^8 + w^2 X^7 + X^6 + w X^4 + w X^2 + w X + 1",
    ),
    CyclicRow(
        23, 39, 19, 12,
        "X^{20} + w^2 X^{18} + w^2 X^{17} + w X^{15} + X^{14} + X^{12} + X^{11}"
        " + X^{10} + w X^9 + w^2 X^8 + w X^6 + X^5 + X^3 + w X^2 + w",
    ),
    CyclicRow(
        24, 43, 14, 18,
        "X^{29} + w^2 X^{28} + X^{27} + w X^{24} + w^2 X^{23} + X^{20} + w^2 X^{19}"
        " + w X^{17} + w^2 X^{15} + w X^{14} + w^2 X^{12} + w X^{10} + X^9 + w X^6"
        " + w^2 X^5 + X^2 + w X + 1",
    ),
)  # fmt: skip

TABLE3 = tuple(
    ProductRow(i, n, k, d)
    for i, (n, k, d) in enumerate(
        [
            (16, 7, 4), (17, 8, 4), (19, 9, 4), (27, 17, 4), (29, 19, 4), (47, 36, 4),
            (75, 45, 7), (77, 47, 7), (79, 48, 7), (95, 62, 7), (101, 68, 7),
            (39, 12, 8), (41, 14, 8), (43, 15, 8), (45, 16, 8), (59, 29, 8),
            (61, 30, 8), (63, 31, 8), (65, 32, 8), (67, 35, 8), (79, 45, 8), (87, 51, 8),
            (91, 40, 12), (93, 42, 12), (97, 44, 12), (105, 52, 12), (113, 56, 12),
            (115, 57, 12), (103, 26, 18),
        ],
        start=1,
    )
)  # fmt: skip
