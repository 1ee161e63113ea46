"""Published reference data: the greedy sequence b_n, the 0/1 maxima d_n, seed matrices."""
from __future__ import annotations

from dataclasses import dataclass

from .exact_linalg import BinaryMatrix

PUBLISHED = "published"
ORACLE_CHECKABLE = "published, oracle-checkable"

#: values the brute-force oracle can reach at desk scale
ORACLE_MAX_N = 5


@dataclass(frozen=True)
class ReferenceEntry:
    n: int
    value: int
    provenance: str
    note: str = ""


def _entries(values, checkable_upto=0, notes=None):
    notes = notes or {}
    return tuple(
        ReferenceEntry(n, v, ORACLE_CHECKABLE if n <= checkable_upto else PUBLISHED, notes.get(n, ""))
        for n, v in enumerate(values, start=1)
    )


@dataclass(frozen=True)
class ReferenceTables:
    b: tuple[ReferenceEntry, ...]
    d: tuple[ReferenceEntry, ...]

    def b_value(self, n: int) -> int:
        return self.b[n - 1].value

    def d_value(self, n: int) -> int:
        return self.d[n - 1].value

    @property
    def max_n(self) -> int:
        return min(len(self.b), len(self.d))

    def violations(self) -> list[int]:
        """``n`` where the table has ``b_n > d_n`` (expected empty)."""
        return [n for n in range(1, self.max_n + 1) if self.b_value(n) > self.d_value(n)]


B_VALUES = (1, 1, 2, 3, 5, 9, 18, 40, 96, 220, 604, 1608, 4734, 14898, 45034)
D_VALUES = (1, 1, 2, 3, 5, 9, 32, 56, 144, 320, 1458, 3645, 9477, 25515, 131073)

TABLES = ReferenceTables(
    b=_entries(B_VALUES),
    d=_entries(
        D_VALUES,
        checkable_upto=ORACLE_MAX_N,
        notes={15: "other sources give 131072; kept as published, nothing depends on it"},
    ),
)

A1 = BinaryMatrix.from_strings(["1"])
A2 = BinaryMatrix.from_strings(["10", "11"])
A3 = BinaryMatrix.from_strings(["101", "110", "011"])
#: the two alternative 2x2 choices with the same determinant
A2_ALTERNATIVES = (
    BinaryMatrix.from_strings(["11", "01"]),
    BinaryMatrix.from_strings(["10", "01"]),
)

A15 = BinaryMatrix.from_strings(
    [
        "101100000010011",
        "110001011110000",
        "011010010011010",
        "010111000000101",
        "100011110000010",
        "001001101000110",
        "010100110010110",
        "001101010101100",
        "000110011100011",
        "111010100100100",
        "000011100111001",
        "110100101001000",
        "100010011011101",
        "110001000101111",
        "011000110000001",
    ]
)

SEEDS = {"a1": A1, "a2": A2, "a3": A3}
