"""Reference weight enumerators and [n, k, d] rows, stored verbatim."""
from __future__ import annotations

from dataclasses import dataclass

from .distribution import parse_enumerator
from .params import CodeSpec


@dataclass(frozen=True)
class GoldenExample:
    name: str
    spec: CodeSpec
    exponents: tuple[int, ...]
    nkd: tuple[int, int, int]
    enumerator: str

    @property
    def frequencies(self) -> dict[int, int]:
        return parse_enumerator(self.enumerator)


@dataclass(frozen=True)
class GoldenRow:
    table: str
    spec: CodeSpec
    nkd: tuple[int, int, int]
    optimal: str


_QR = {(3, 27): (3, 1, 3), (9, 9): (3, 2, 1), (5, 5): (5, 1, 1), (7, 7): (7, 1, 1)}


def _row(table: str, family: int, q: int, r: int, t: int, h: int, f: int, nkd, optimal) -> GoldenRow:
    p, l, m = _QR[(q, r)]
    return GoldenRow(table, CodeSpec(family, p, l, m, h, f, t), tuple(nkd), optimal)


EXAMPLES: tuple[GoldenExample, ...] = (
    GoldenExample("1.1(1)", CodeSpec(1, 2, 2, 2, 1, 3, 1), (51, 66), (85, 6, 60),
                  "1+2040Y^{60}+255Y^{64}+1800Y^{68}"),
    GoldenExample("1.1(2)", CodeSpec(1, 2, 2, 2, 1, 3, 2), (51, 66, 81), (85, 10, 52),
                  "1+35700Y^{52}+30600Y^{56}+250920Y^{60}+377655Y^{64}+353700Y^{68}"),
    GoldenExample("1.1(3)", CodeSpec(1, 2, 2, 2, 1, 3, 3), (51, 66, 81, 96), (85, 14, 44),
                  "1+185640Y^{44}+464100Y^{48}+4641000Y^{52}+17646000Y^{56}+"
                  "54396600Y^{60}+101483115Y^{64}+89619000Y^{68}"),
    GoldenExample("1.2(1)", CodeSpec(1, 2, 3, 1, 1, 7, 1), (63, 70), (9, 3, 7),
                  "1+252Y^{7}+63Y^{8}+196Y^{9}"),
    GoldenExample("1.2(2)", CodeSpec(1, 2, 3, 1, 1, 7, 2), (63, 70, 77), (9, 5, 5),
                  "1+882Y^{5}+1764Y^{6}+7812Y^{7}+12411Y^8+9898Y^9"),
    GoldenExample("1.2(3)", CodeSpec(1, 2, 3, 1, 1, 7, 3), (63, 70, 77, 84), (9, 7, 3),
                  "1+588Y^{3}+4410Y^{4}+33516Y^{5}+154056Y^{6}+463428Y^7+810621Y^8+630532Y^9"),
    GoldenExample("2.1(1)", CodeSpec(2, 2, 2, 2, 2, 6, 1), (66,), (85, 4, 64),
                  "1+255Y^{64}"),
    GoldenExample("2.1(2)", CodeSpec(2, 2, 2, 2, 2, 6, 2), (66, 96), (85, 8, 56),
                  "1+10200Y^{56}+4080Y^{60}+30855Y^{64}+20400Y^{68}"),
    GoldenExample("2.1(3)", CodeSpec(2, 2, 2, 2, 2, 6, 3), (66, 96, 126), (85, 12, 48),
                  "1+92820Y^{48}+142800Y^{52}+1285200Y^{56}+3272160Y^{60}+"
                  "6390555Y^{64}+5593680Y^{68}"),
    GoldenExample("2.2(1)", CodeSpec(2, 2, 3, 1, 2, 14, 1), (70,), (9, 2, 8),
                  "1+63Y^{8}"),
    GoldenExample("2.2(2)", CodeSpec(2, 2, 3, 1, 2, 14, 2), (70, 84), (9, 4, 6),
                  "1+588Y^{6}+504Y^{7}+1827Y^{8}+1176Y^9"),
    GoldenExample("2.2(3)", CodeSpec(2, 2, 3, 1, 2, 14, 3), (70, 84, 98), (9, 6, 4),
                  "1+882Y^{4}+3528Y^{5}+19992Y^{6}+57456Y^{7}+101493Y^8+78792Y^9"),
)

TABLE_ROWS: tuple[GoldenRow, ...] = (
    _row("ex1", 1, 3, 27, 1, 2, 1, (182, 9, 108), "111 <= d <= 115 is optimal"),
    _row("ex1", 1, 9, 9, 1, 1, 2, (20, 3, 16), "16 <= d <= 17 is optimal"),
    _row("ex1", 1, 9, 9, 1, 1, 4, (10, 3, 8), "Y"),
    _row("ex1", 1, 9, 9, 2, 1, 4, (10, 5, 6), "Y"),
    _row("ex1", 1, 9, 9, 3, 1, 4, (10, 7, 4), "Y"),
    _row("ex1", 1, 9, 9, 4, 1, 4, (10, 9, 2), "Y"),
    _row("ex1", 1, 9, 9, 1, 2, 8, (5, 3, 3), "Y"),
    _row("ex1", 1, 5, 5, 1, 1, 1, (12, 3, 8), "Y"),
    _row("ex1", 1, 5, 5, 1, 1, 2, (6, 3, 4), "Y"),
    _row("ex1", 1, 5, 5, 2, 1, 2, (6, 5, 2), "Y"),
    _row("ex1", 1, 7, 7, 1, 1, 2, (24, 3, 18), "d=19 is optimal"),
    _row("ex1", 1, 7, 7, 1, 1, 3, (8, 3, 6), "Y"),
    _row("ex1", 1, 7, 7, 2, 1, 3, (8, 5, 4), "Y"),
    _row("ex1", 1, 7, 7, 3, 1, 3, (8, 7, 2), "Y"),
    _row("ex1", 1, 7, 7, 1, 2, 3, (4, 3, 2), "Y"),
    _row("ex2", 2, 3, 27, 1, 4, 2, (91, 6, 54), "57 <= d <= 58 is optimal"),
    _row("ex2", 2, 9, 9, 1, 2, 8, (5, 2, 4), "Y"),
    _row("ex2", 2, 9, 9, 2, 2, 8, (5, 4, 2), "Y"),
    _row("ex2", 2, 7, 7, 1, 1, 3, (16, 2, 14), "Y"),
    _row("ex2", 2, 7, 7, 2, 1, 3, (16, 4, 10), "d=11 is optimal"),
)


def find_example(name: str) -> GoldenExample:
    for ex in EXAMPLES:
        if ex.name == name:
            return ex
    raise KeyError(name)
