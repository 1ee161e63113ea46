"""Run records and their jsonl, csv and plain-text ("paper") serializations.

paper format, one block per matrix, blocks separated by one blank line::

    3 2
    101
    110
    011
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Iterable, TextIO

from .errors import MatrixParseError
from .exact_linalg import BinaryMatrix, det_bareiss


@dataclass(frozen=True)
class RunRecord:
    n: int
    det: int
    rows: tuple[str, ...]
    policy: str = "paper-lex"
    tie_count: int | None = None
    timestamp: str | None = None

    @classmethod
    def from_node(cls, node, policy: str = "paper-lex", timestamp: str | None = None):
        return cls(node.depth, node.det, tuple(node.matrix.to_strings()), policy, node.tie_count, timestamp)

    @property
    def matrix(self) -> BinaryMatrix:
        return BinaryMatrix.from_strings(self.rows)

    def validate(self):
        m = self.matrix
        if m.n != self.n:
            raise MatrixParseError(f"record says n={self.n} but holds a {m.n}x{m.n} matrix")
        if det_bareiss(m, width=None) != self.det:
            raise MatrixParseError(f"record det {self.det} does not match its matrix")
        return self

    def to_dict(self) -> dict:
        d = {"n": self.n, "det": self.det, "rows": list(self.rows), "policy": self.policy, "tie_count": self.tie_count}
        if self.timestamp is not None:
            d["timestamp"] = self.timestamp
        return d

    @classmethod
    def from_dict(cls, d: dict):
        try:
            return cls(
                int(d["n"]),
                int(d["det"]),
                tuple(d["rows"]),
                d.get("policy", "paper-lex"),
                d.get("tie_count"),
                d.get("timestamp"),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise MatrixParseError(f"bad run record: {exc}") from exc


def dumps_jsonl(records: Iterable[RunRecord]) -> str:
    return "".join(json.dumps(r.to_dict()) + "\n" for r in records)


def loads_jsonl(text: str) -> list[RunRecord]:
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            out.append(RunRecord.from_dict(json.loads(line)))
        except json.JSONDecodeError as exc:
            raise MatrixParseError(f"line {lineno}: {exc}") from exc
    return out


def dumps_paper(records: Iterable[RunRecord]) -> str:
    blocks = [f"{r.n} {r.det}\n" + "".join(row + "\n" for row in r.rows) for r in records]
    return "\n".join(blocks)


def loads_paper(text: str, policy: str = "paper-lex") -> list[RunRecord]:
    records = []
    for block in _blocks(text):
        head = block[0].split()
        if len(head) != 2:
            raise MatrixParseError(f"expected 'n det' header, got {block[0]!r}")
        try:
            n, det = int(head[0]), int(head[1])
        except ValueError as exc:
            raise MatrixParseError(f"bad header {block[0]!r}") from exc
        rows = tuple(block[1:])
        if len(rows) != n:
            raise MatrixParseError(f"header says n={n} but block has {len(rows)} rows")
        _check_rows(rows)
        records.append(RunRecord(n, det, rows, policy))
    return records


def dumps_csv(records: Iterable[RunRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "det"])
    for r in records:
        w.writerow([r.n, r.det])
    return buf.getvalue()


def loads_csv(text: str) -> list[tuple[int, int]]:
    reader = csv.DictReader(io.StringIO(text))
    return [(int(row["n"]), int(row["det"])) for row in reader]


def _blocks(text: str) -> list[list[str]]:
    blocks, cur = [], []
    for line in text.splitlines():
        line = line.strip()
        if line:
            cur.append(line)
        elif cur:
            blocks.append(cur)
            cur = []
    if cur:
        blocks.append(cur)
    return blocks


def _check_rows(rows):
    n = len(rows)
    for row in rows:
        if len(row) != n or set(row) - {"0", "1"}:
            raise MatrixParseError(f"row {row!r} is not {n} characters of 0/1")


def parse_matrix_text(text: str) -> BinaryMatrix:
    """Read one square 0/1 matrix.

    Accepts a jsonl run record (last line wins), a paper-format block (last
    block wins), or bare rows such as ``101`` or ``1 0 1``.
    """
    stripped = text.strip()
    if not stripped:
        raise MatrixParseError("empty matrix input")
    if stripped.startswith("{"):
        records = loads_jsonl(stripped)
        return records[-1].matrix
    blocks = _blocks(stripped)
    rows = [_compact(line) for line in blocks[-1]]
    head = blocks[-1][0].split()
    if len(head) == 2 and head[0].isdigit():
        body = rows[1:]
        if len(body) == int(head[0]) and all(len(r) == len(body) for r in body):
            rows = body
    _check_rows(rows)
    return BinaryMatrix.from_strings(rows)


def _compact(line: str) -> str:
    return "".join(line.replace(",", " ").split())


def write_records(records: list[RunRecord], fmt: str, fh: TextIO, append: bool = False):
    """Serialize ``records`` to ``fh``; appended paper blocks get their blank separator."""
    if fmt == "jsonl":
        fh.write(dumps_jsonl(records))
    elif fmt == "csv":
        text = dumps_csv(records)
        if append and fh.tell() > 0:
            text = text.split("\n", 1)[1]
        fh.write(text)
    elif fmt == "paper":
        if append and fh.tell() > 0 and records:
            fh.write("\n")
        fh.write(dumps_paper(records))
    else:
        raise ValueError(f"unknown format {fmt!r}")
