import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxdet.border_form import BorderAssignment, bordered_det, build_border_form, eval_border_form
from maxdet.errors import DimensionMismatchError
from maxdet.exact_linalg import BinaryMatrix, det_cofactor
from maxdet.reference import A1, A2, A3
from maxdet.verify import all_assignments, all_binary_matrices


def test_form_of_1x1():
    f = build_border_form(A1)
    assert f.base_det == 1
    assert f.coeffs.rows == ((-1,),)


def test_form_of_a2_is_negated_adjugate():
    f = build_border_form(A2)
    assert f.base_det == 1
    assert f.coeffs.rows == ((-1, 0), (1, -1))
    for asg in all_assignments(2):
        assert eval_border_form(f, asg) == bordered_det(A2, asg)


def test_form_of_a3_maximum():
    f = build_border_form(A3)
    best = max(eval_border_form(f, a) for a in all_assignments(3, zs=(1,)))
    assert best == 3


def test_bordered_det_examples():
    assert bordered_det(A2, BorderAssignment((0, 1), (1, 0), 1)) == 2
    assert bordered_det(A2, BorderAssignment((0, 0), (0, 0), 1)) == 1


def test_eval_examples():
    assert eval_border_form(build_border_form(A1), BorderAssignment((1,), (1,), 1)) == 0
    assert eval_border_form(build_border_form(A2), BorderAssignment((0, 1), (1, 0), 1)) == 2
    f = build_border_form(A3)
    assert eval_border_form(f, BorderAssignment((0,) * 3, (0,) * 3, 1)) == f.base_det


def test_dimension_mismatch():
    f = build_border_form(A3)
    with pytest.raises(DimensionMismatchError):
        eval_border_form(f, BorderAssignment((0, 1), (1, 0)))
    with pytest.raises(DimensionMismatchError):
        bordered_det(A3, BorderAssignment((0, 1), (1, 0)))
    with pytest.raises(DimensionMismatchError):
        BorderAssignment((0, 1), (1,))


def test_paper_index_round_trip():
    for n in (1, 2, 3):
        keys = []
        for idx in range(4**n):
            asg = BorderAssignment.from_paper_index(idx, n)
            assert asg.paper_index() == idx
            keys.append(asg.paper_key())
        # index order is the lexicographic order of (x_n, y_n, ..., x_1, y_1)
        assert keys == sorted(keys)
        assert keys == list(itertools.product((0, 1), repeat=2 * n))


def test_identity_exhaustive_small():
    for n in (1, 2):
        for a in all_binary_matrices(n):
            f = build_border_form(a)
            for asg in all_assignments(n):
                direct = det_cofactor(a.bordered(asg.x, asg.y, asg.z).rows)
                assert eval_border_form(f, asg) == direct


def test_identity_randomized_incl_singular():
    rng = np.random.default_rng(99)
    singular = 0
    for _ in range(1000):
        n = int(rng.integers(1, 8))
        a = BinaryMatrix.from_rows(rng.integers(0, 2, size=(n, n)).tolist())
        f = build_border_form(a)
        singular += f.base_det == 0
        for _ in range(4):
            asg = BorderAssignment(
                rng.integers(0, 2, n).tolist(), rng.integers(0, 2, n).tolist(), int(rng.integers(0, 2))
            )
            assert eval_border_form(f, asg) == bordered_det(a, asg)
    assert singular > 0


binary = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, 1), min_size=n, max_size=n), min_size=n, max_size=n)
)


@settings(max_examples=200, deadline=None)
@given(binary, st.data())
def test_z_shift_and_nonnegative_bilinear_max(rows, data):
    a = BinaryMatrix.from_rows(rows)
    n = a.n
    f = build_border_form(a)
    x = data.draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
    y = data.draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
    with_z = eval_border_form(f, BorderAssignment(x, y, 1))
    without = eval_border_form(f, BorderAssignment(x, y, 0))
    # the corner only adds base_det
    assert with_z - without == f.base_det
    assert eval_border_form(f, BorderAssignment([0] * n, y, 0)) == 0


def test_z_one_wins_when_base_positive():
    for a in all_binary_matrices(3):
        f = build_border_form(a)
        if f.base_det <= 0:
            continue
        m1 = max(eval_border_form(f, s) for s in all_assignments(3, zs=(1,)))
        m0 = max(eval_border_form(f, s) for s in all_assignments(3, zs=(0,)))
        assert m1 - m0 == f.base_det


def test_coeffs_bounded_by_largest_minor():
    from maxdet.exact_linalg import minor

    rng = np.random.default_rng(3)
    for _ in range(100):
        n = int(rng.integers(2, 6))
        a = BinaryMatrix.from_rows(rng.integers(0, 2, size=(n, n)).tolist())
        biggest = max(abs(det_cofactor(minor(a, i, j))) for i in range(n) for j in range(n))
        assert max(abs(c) for row in build_border_form(a).coeffs.rows for c in row) <= biggest
