"""Brute-force maximal determinants over {0,1} and {-1,+1} matrices.

Matrices are enumerated as ``n*n``-bit integers in ascending order, bit
``n*n - 1`` being entry ``(0, 0)``; the witness is the first matrix in that
order attaining the maximum. For each choice of the first ``n - 1`` rows the
cofactors along the last row are computed once and reused for every last row,
which still evaluates every determinant exactly.

Work is sharded by the first row. Shards are merged in ascending order with
strict improvement, so the result does not depend on the worker count.
"""
from __future__ import annotations

import itertools
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import SizeGuardError
from .exact_linalg import IntMatrix, det_bareiss

MAX_N = 5
_BATCH = 1 << 14


@dataclass(frozen=True)
class OracleReport:
    n: int
    value: int
    witness: IntMatrix
    search_space: int
    elapsed: float
    alphabet: str
    normalized: bool = False
    provenance: str = "oracle"

    def __post_init__(self):
        if det_bareiss(self.witness, width=None) != self.value:
            raise AssertionError("witness determinant disagrees with the reported maximum")


@dataclass(frozen=True)
class RelationReport:
    """``M(n) = 2**(n-1) * d_{n-1}`` checked with both oracles."""

    n: int
    m_value: int
    d_prev: int
    holds: bool
    m_report: OracleReport
    d_report: OracleReport

    @property
    def rhs(self) -> int:
        return 2 ** (self.n - 1) * self.d_prev


def batched_det(a: np.ndarray) -> np.ndarray:
    """Exact determinants of a stack ``(B, k, k)`` of small integer matrices by Laplace expansion."""
    k = a.shape[-1]
    if k == 0:
        return np.ones(a.shape[0], dtype=np.int64)
    if k == 1:
        return a[:, 0, 0].copy()
    if k == 2:
        return a[:, 0, 0] * a[:, 1, 1] - a[:, 0, 1] * a[:, 1, 0]
    total = np.zeros(a.shape[0], dtype=np.int64)
    rest = a[:, 1:, :]
    for j in range(k):
        sub = batched_det(np.delete(rest, j, axis=2))
        term = a[:, 0, j] * sub
        total = total + term if j % 2 == 0 else total - term
    return total


def _rows(n: int, symbols: tuple[int, int], first_fixed: bool = False) -> np.ndarray:
    """All length-``n`` rows over ``symbols`` (bit 0, bit 1) in ascending bit order."""
    ts = np.arange(1 << n, dtype=np.int64)
    bits = (ts[:, None] >> np.arange(n - 1, -1, -1)) & 1
    rows = np.where(bits == 1, symbols[1], symbols[0]).astype(np.int64)
    if first_fixed:
        rows = rows[bits[:, 0] == 1]
    return rows


def _last_row_cofactors(top: np.ndarray) -> np.ndarray:
    """Cofactors along the last row of ``[top; r]`` for a stack of ``(n-1) x n`` tops."""
    b, m, n = top.shape
    cof = np.empty((b, n), dtype=np.int64)
    for j in range(n):
        d = batched_det(np.delete(top, j, axis=2))
        cof[:, j] = d if (m + j) % 2 == 0 else -d
    return cof


def _scan_shard(first: int, row_sets: list[np.ndarray], use_abs: bool):
    """Best value in the shard whose first row is ``row_sets[0][first]``, and its row indices."""
    n = len(row_sets)
    last = row_sets[-1]
    mids = row_sets[1:-1]
    mid_sizes = [len(r) for r in mids]
    total = int(np.prod(mid_sizes)) if mids else 1
    best = best_pos = None
    for start in range(0, total, _BATCH):
        idx = np.arange(start, min(start + _BATCH, total), dtype=np.int64)
        # mixed-radix digits of idx, most significant first
        digits = []
        rem = idx
        for size in reversed(mid_sizes):
            digits.append(rem % size)
            rem = rem // size
        digits.reverse()
        top = np.empty((len(idx), n - 1, n), dtype=np.int64)
        if n > 1:
            top[:, 0, :] = row_sets[0][first]
            for r, (rows, dig) in enumerate(zip(mids, digits), start=1):
                top[:, r, :] = rows[dig]
        vals = _last_row_cofactors(top) @ last.T
        if use_abs:
            vals = np.abs(vals)
        k = int(np.argmax(vals))
        m = int(vals.flat[k])
        if best is None or m > best:
            best, best_pos = m, start * len(last) + k
    mid_index, last_index = divmod(best_pos, len(last))
    picks = []
    rem = mid_index
    for size in reversed(mid_sizes):
        picks.append(rem % size)
        rem //= size
    picks.reverse()
    return best, [first] + picks + [last_index]


def _search(row_sets: list[np.ndarray], use_abs: bool, threads: int):
    n = len(row_sets)
    if n == 1:
        vals = np.abs(row_sets[0][:, 0]) if use_abs else row_sets[0][:, 0]
        k = int(np.argmax(vals))
        return int(vals[k]), [row_sets[0][k]]
    shards = range(len(row_sets[0]))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda s: _scan_shard(s, row_sets, use_abs), shards))
    else:
        parts = [_scan_shard(s, row_sets, use_abs) for s in shards]
    best = picks = None
    for value, p in parts:
        if best is None or value > best:
            best, picks = value, p
    return best, [rows[i] for rows, i in zip(row_sets, picks)]


def _guard(n: int, allow_large: bool, lo: int = 1):
    if n < lo:
        raise SizeGuardError(f"n must be at least {lo}")
    if n > MAX_N and not allow_large:
        raise SizeGuardError(f"brute force refused for n={n} > {MAX_N} without allow_large")


def brute_dn(n: int, threads: int = 1, allow_large: bool = False) -> OracleReport:
    """Maximal determinant over all ``2**(n*n)`` 0/1 matrices."""
    _guard(n, allow_large)
    t0 = time.perf_counter()
    rows = _rows(n, (0, 1))
    value, witness = _search([rows] * n, False, threads)
    return OracleReport(
        n=n,
        value=value,
        witness=IntMatrix.from_rows(witness),
        search_space=2 ** (n * n),
        elapsed=time.perf_counter() - t0,
        alphabet="0/1",
    )


def brute_Mn(n: int, normalize: bool = True, threads: int = 1, allow_large: bool = False) -> OracleReport:
    """Maximal determinant over ``-1/+1`` matrices.

    With ``normalize`` the first row and column are fixed to ``+1``: negating
    rows and columns maps every matrix onto that form without changing
    ``|det|``, so the search maximizes ``|det|`` over ``2**((n-1)**2)``
    matrices. A witness with negative determinant then gets its last row
    negated, so the returned witness is no longer normalized in that case.
    """
    _guard(n, allow_large)
    t0 = time.perf_counter()
    if normalize:
        ones = np.ones((1, n), dtype=np.int64)
        sets = [ones] + [_rows(n, (-1, 1), first_fixed=True)] * (n - 1)
        space = 2 ** ((n - 1) ** 2)
    else:
        sets = [_rows(n, (-1, 1))] * n
        space = 2 ** (n * n)
    value, witness = _search(sets, normalize, threads)
    w = [list(map(int, r)) for r in witness]
    if normalize and det_bareiss(w, width=None) < 0:
        w[-1] = [-v for v in w[-1]]
    return OracleReport(
        n=n,
        value=value,
        witness=IntMatrix.from_rows(w),
        search_space=space,
        elapsed=time.perf_counter() - t0,
        alphabet="-1/+1",
        normalized=normalize,
    )


def check_relation(n: int, threads: int = 1, allow_large: bool = False) -> RelationReport:
    _guard(n, allow_large, lo=2)
    m = brute_Mn(n, threads=threads, allow_large=allow_large)
    d = brute_dn(n - 1, threads=threads, allow_large=allow_large)
    return RelationReport(n, m.value, d.value, m.value == 2 ** (n - 1) * d.value, m, d)


def naive_max_det(n: int, symbols=(0, 1)) -> tuple[int, IntMatrix]:
    """Reference scan with one Bareiss determinant per matrix; only for tiny ``n``."""
    best = None
    for bits in itertools.product((0, 1), repeat=n * n):
        rows = [[symbols[b] for b in bits[i * n:(i + 1) * n]] for i in range(n)]
        d = det_bareiss(rows)
        if best is None or d > best[0]:
            best = (d, rows)
    return best[0], IntMatrix.from_rows(best[1])
