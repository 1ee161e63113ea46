"""Maximization of the bordered determinant over binary border vectors.

Assignments are ordered the way a depth-first search over
``(x_n, y_n), (x_{n-1}, y_{n-1}), ..., (x_1, y_1)`` visits them, each pair
taking ``(0,0), (0,1), (1,0), (1,1)`` in turn. Only a strict improvement
replaces the incumbent, so among several maximizers the one reached first in
that order wins ("paper-lex"). ``BorderAssignment.paper_index`` maps an
assignment to its position in the order.

The corner ``z`` is fixed to 1 everywhere here: with ``det(A) > 0`` the
bilinear part does not depend on ``z``, so ``z = 1`` always wins.
"""
from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .border_form import BorderAssignment, BorderForm
from .errors import SizeGuardError
from .exact_linalg import DEFAULT_WIDTH, check_int

EXHAUSTIVE_MAX_N = 16
FAST_MAX_N = 30
_CHUNK = 1 << 16
_LOW_BITS = 12


class TieBreakPolicy(str, enum.Enum):
    PAPER_LEX = "paper-lex"
    REPORT_ALL = "report-all"


@dataclass(frozen=True)
class MaxResult:
    """Maximal bordered determinant, its paper-lex maximizer and the tie multiplicity.

    ``maximizers`` is only filled under ``TieBreakPolicy.REPORT_ALL`` and is
    capped; ``tie_count`` is always the full count of maximizing ``(x, y)``.
    """

    value: int
    chosen: BorderAssignment
    tie_count: int
    maximizers: tuple[BorderAssignment, ...] | None = None

    def same_outcome(self, other: "MaxResult") -> bool:
        return (self.value, self.chosen, self.tie_count) == (other.value, other.chosen, other.tie_count)


def _coeffs(f: BorderForm) -> np.ndarray:
    # int64 is safe while no partial sum can reach 2**62.
    bound = sum(abs(c) for row in f.coeffs.rows for c in row) + abs(f.base_det)
    dtype = np.int64 if bound < (1 << 62) else object
    return np.array(f.coeffs.rows, dtype=dtype).reshape(f.n, f.n)


def _guard(n: int, limit: int, name: str):
    if n < 1:
        raise SizeGuardError(f"{name} needs n >= 1")
    if n > limit:
        raise SizeGuardError(f"{name} refused for n={n} > {limit}")


def maximize_exhaustive(f: BorderForm, width: int | None = DEFAULT_WIDTH) -> MaxResult:
    """Evaluate all ``4**n`` assignments in paper order.

    Chunks of the order are evaluated vectorized; ``argmax`` returns the first
    maximum of a chunk, and a later chunk only takes over on a strictly larger
    value, which reproduces the strict-improvement rule of a sequential scan.
    """
    n = f.n
    _guard(n, EXHAUSTIVE_MAX_N, "exhaustive maximization")
    c = _coeffs(f)
    shifts = 2 * np.arange(n, dtype=np.int64)
    total = 4**n
    best = best_index = None
    ties = 0
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)[:, None]
        y = ((idx >> shifts) & 1).astype(c.dtype)
        x = ((idx >> (shifts + 1)) & 1).astype(c.dtype)
        vals = ((x @ c) * y).sum(axis=1)
        k = int(np.argmax(vals))
        m = int(vals[k])
        hits = int(np.count_nonzero(vals == m))
        if best is None or m > best:
            best, best_index, ties = m, start + k, hits
        elif m == best:
            ties += hits
    value = check_int(f.base_det + best, width)
    return MaxResult(value, BorderAssignment.from_paper_index(best_index, n), check_int(ties, width))


def _gray(k: int) -> int:
    return k ^ (k >> 1)


def _low_table(c: np.ndarray, low: int) -> np.ndarray:
    """``table[g] = c[:, :low] @ bits(g)`` for every ``g``, filled in Gray-code order."""
    n = c.shape[0]
    table = np.zeros((1 << low, n), dtype=c.dtype)
    v = np.zeros(n, dtype=c.dtype)
    g = 0
    for k in range(1, 1 << low):
        bit = (k & -k).bit_length() - 1
        g ^= 1 << bit
        if (g >> bit) & 1:
            v = v + c[:, bit]
        else:
            v = v - c[:, bit]
        table[g] = v
    return table


def _scan_range(c, table, low, begin, end):
    """Best bilinear value and tie count over high Gray positions ``[begin, end)``."""
    n = c.shape[0]
    high_cols = c[:, low:]
    g = _gray(begin)
    bits = np.array([(g >> b) & 1 for b in range(n - low)], dtype=c.dtype)
    vh = high_cols @ bits if n > low else np.zeros(n, dtype=c.dtype)
    best = None
    ties = 0
    for k in range(begin, end):
        if k > begin:
            bit = ((k & -k).bit_length()) - 1
            g ^= 1 << bit
            col = high_cols[:, bit]
            vh = vh + col if (g >> bit) & 1 else vh - col
        block = table + vh
        opt = np.maximum(block, 0).sum(axis=1)
        m = int(opt.max())
        if best is not None and m < best:
            continue
        zeros = np.count_nonzero(block[opt == m] == 0, axis=1)
        hits = sum(int(cnt) << int(z) for z, cnt in enumerate(np.bincount(zeros)))
        if best is None or m > best:
            best, ties = m, hits
        else:
            ties += hits
    return best, ties


def _pass1(c: np.ndarray, threads: int = 1) -> tuple[int, int]:
    """Maximal bilinear value over all ``(x, y)`` and the number of maximizers.

    For fixed ``y`` with ``v = c @ y`` the best ``x`` takes ``x_i = 1`` exactly
    where ``v_i > 0``, worth ``sum(max(0, v))``; components with ``v_i == 0``
    are free, so each optimal ``y`` contributes ``2**zeros(v)`` maximizers.
    """
    n = c.shape[0]
    low = min(n, _LOW_BITS)
    table = _low_table(c, low)
    n_high = 1 << (n - low)
    threads = max(1, min(threads, n_high))
    cuts = [n_high * w // threads for w in range(threads + 1)]
    ranges = [(cuts[w], cuts[w + 1]) for w in range(threads) if cuts[w] < cuts[w + 1]]
    if len(ranges) == 1:
        parts = [_scan_range(c, table, low, *ranges[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(ranges)) as pool:
            parts = list(pool.map(lambda r: _scan_range(c, table, low, *r), ranges))
    best = max(p[0] for p in parts)
    return best, sum(t for m, t in parts if m == best)


def _search_order(c: list[list[int]], target: int, cap: int) -> list[BorderAssignment]:
    """Depth-first search in paper order for assignments whose bilinear value equals ``target``.

    A branch is cut when an optimistic bound on its best completion is below
    ``target``. With indices ``k..n-1`` assigned the bound is the fixed part,
    plus ``max(0, sum_{i assigned} c_ij x_i)`` for every free column ``j``,
    plus ``max(0, sum_{j assigned} c_ij y_j + sum_{j free} max(0, c_ij))`` for
    every free row ``i``. Every term of the remaining sum falls into exactly
    one of these groups, so the bound never underestimates.
    """
    n = len(c)
    # pos_prefix[i][k] = sum_{j<k} max(0, c[i][j])
    pos_prefix = []
    for row in c:
        acc = [0]
        for v in row:
            acc.append(acc[-1] + max(0, v))
        pos_prefix.append(acc)
    x = [0] * n
    y = [0] * n
    found: list[BorderAssignment] = []

    def bound(k, fixed, colx, rowy):
        # indices k..n-1 assigned, 0..k-1 free
        b = fixed
        for j in range(k):
            if colx[j] > 0:
                b += colx[j]
        for i in range(k):
            r = rowy[i] + pos_prefix[i][k]
            if r > 0:
                b += r
        return b

    def visit(k, fixed, colx, rowy):
        # choose (x[k-1], y[k-1]); indices >= k are already set
        if k == 0:
            if fixed == target:
                found.append(BorderAssignment(tuple(x), tuple(y)))
                return len(found) >= cap
            return False
        i = k - 1
        for xi in (0, 1):
            for yi in (0, 1):
                # new terms: row i against assigned columns (incl. i), column i against assigned rows
                add = 0
                if xi:
                    add += rowy[i] + (c[i][i] if yi else 0)
                if yi:
                    add += colx[i]
                nfixed = fixed + add
                ncolx = colx if not xi else [cx + ci for cx, ci in zip(colx, c[i])]
                nrowy = rowy if not yi else [ry + row[i] for ry, row in zip(rowy, c)]
                if bound(i, nfixed, ncolx, nrowy) < target:
                    continue
                x[i], y[i] = xi, yi
                if visit(i, nfixed, ncolx, nrowy):
                    return True
        x[i] = y[i] = 0
        return False

    visit(n, 0, [0] * n, [0] * n)
    return found


def maximize_fast(
    f: BorderForm,
    policy: TieBreakPolicy | str = TieBreakPolicy.PAPER_LEX,
    cap: int = 1000,
    threads: int = 1,
    width: int | None = DEFAULT_WIDTH,
) -> MaxResult:
    """Same result as ``maximize_exhaustive`` at roughly ``2**n`` cost."""
    policy = TieBreakPolicy(policy)
    n = f.n
    _guard(n, FAST_MAX_N, "fast maximization")
    c = _coeffs(f)
    best, ties = _pass1(c, threads)
    want = cap if policy is TieBreakPolicy.REPORT_ALL else 1
    found = _search_order([[int(v) for v in row] for row in f.coeffs.rows], best, max(1, want))
    value = check_int(f.base_det + best, width)
    return MaxResult(
        value,
        found[0],
        check_int(ties, width),
        tuple(found) if policy is TieBreakPolicy.REPORT_ALL else None,
    )


def enumerate_maximizers(f: BorderForm, cap: int, threads: int = 1) -> tuple[list[BorderAssignment], int]:
    """All maximizing assignments in paper order, at most ``cap`` of them, plus the full count."""
    if cap < 1:
        raise ValueError("cap must be positive")
    _guard(f.n, FAST_MAX_N, "maximizer enumeration")
    best, ties = _pass1(_coeffs(f), threads)
    found = _search_order([[int(v) for v in row] for row in f.coeffs.rows], best, cap)
    return found, ties
