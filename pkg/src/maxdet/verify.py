"""Property suites shared by the test-suite and ``maxdet verify``.

Each suite returns a ``SuiteResult``; a failure carries enough data
(matrix rows, assignment) to reproduce the counterexample by hand.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .border_form import BorderAssignment, bordered_det, build_border_form, eval_border_form
from .exact_linalg import BinaryMatrix
from .growth import grow_sequence
from .reference import A3, TABLES
from .search import maximize_exhaustive, maximize_fast

MAX_RANDOM_N = 7


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.checked} checks, {len(self.failures)} failures"


def random_binary_matrix(rng: np.random.Generator, n: int) -> BinaryMatrix:
    return BinaryMatrix.from_rows(rng.integers(0, 2, size=(n, n)).tolist())


def _random_assignment(rng, n, z=None) -> BorderAssignment:
    x = rng.integers(0, 2, size=n).tolist()
    y = rng.integers(0, 2, size=n).tolist()
    return BorderAssignment(x, y, int(rng.integers(0, 2)) if z is None else z)


def all_binary_matrices(n: int):
    for bits in itertools.product((0, 1), repeat=n * n):
        yield BinaryMatrix(tuple(tuple(bits[i * n:(i + 1) * n]) for i in range(n)))


def all_assignments(n: int, zs=(0, 1)):
    for z in zs:
        for bits in itertools.product((0, 1), repeat=2 * n):
            yield BorderAssignment(bits[:n], bits[n:], z)


def identity_suite(trials: int = 1000, seed: int = 7, per_instance: int = 16) -> SuiteResult:
    """Border form evaluation equals the direct bordered determinant."""
    res = SuiteResult("identity")

    def check(a, f, asg):
        res.checked += 1
        lhs, rhs = eval_border_form(f, asg), bordered_det(a, asg)
        if lhs != rhs:
            res.failures.append(
                f"matrix={a.to_strings()} x={asg.x} y={asg.y} z={asg.z}: form {lhs} != det {rhs}"
            )

    for n in (1, 2):
        for a in all_binary_matrices(n):
            f = build_border_form(a)
            for asg in all_assignments(n):
                check(a, f, asg)
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        n = int(rng.integers(1, MAX_RANDOM_N + 1))
        a = random_binary_matrix(rng, n)
        f = build_border_form(a)
        for _ in range(per_instance):
            check(a, f, _random_assignment(rng, n))
    return res


def equivalence_suite(trials: int = 200, seed: int = 7) -> SuiteResult:
    """Fast and exhaustive maximizers agree on value, chosen border and tie count."""
    res = SuiteResult("equivalence")
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        n = int(rng.integers(1, MAX_RANDOM_N + 1))
        a = random_binary_matrix(rng, n)
        f = build_border_form(a)
        slow, fast = maximize_exhaustive(f), maximize_fast(f)
        res.checked += 1
        if not slow.same_outcome(fast):
            res.failures.append(
                f"matrix={a.to_strings()}: exhaustive=({slow.value}, {slow.chosen}, {slow.tie_count}) "
                f"fast=({fast.value}, {fast.chosen}, {fast.tie_count})"
            )
    return res


def tables_suite(regrow: bool = True) -> SuiteResult:
    """Stored tables satisfy b_n <= d_n, and regrowing from A_3 gives the stored b_n."""
    res = SuiteResult("tables")
    for n in range(1, TABLES.max_n + 1):
        res.checked += 1
        if TABLES.b_value(n) > TABLES.d_value(n):
            res.failures.append(f"n={n}: b={TABLES.b_value(n)} > d={TABLES.d_value(n)}")
    if regrow:
        chain = grow_sequence(A3, TABLES.max_n - A3.n)
        for node in chain:
            res.checked += 1
            if node.det != TABLES.b_value(node.depth):
                res.failures.append(f"n={node.depth}: grown det {node.det} != stored b {TABLES.b_value(node.depth)}")
            if node.det > TABLES.d_value(node.depth):
                res.failures.append(f"n={node.depth}: grown det {node.det} > stored d {TABLES.d_value(node.depth)}")
    return res


SUITES = {
    "identity": identity_suite,
    "equivalence": equivalence_suite,
    "tables": tables_suite,
}


def run_suites(name: str, trials: int | None = None, seed: int = 7) -> list[SuiteResult]:
    names = list(SUITES) if name == "all" else [name]
    out = []
    for s in names:
        if s == "tables":
            out.append(tables_suite())
        elif trials is None:
            out.append(SUITES[s](seed=seed))
        else:
            out.append(SUITES[s](trials=trials, seed=seed))
    return out
