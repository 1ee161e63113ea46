import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxdet.errors import ArithmeticOverflowError, DimensionMismatchError, SizeGuardError
from maxdet.exact_linalg import BinaryMatrix, IntMatrix, adjugate, det_bareiss, det_cofactor

A2 = [[1, 0], [1, 1]]
A3 = [[1, 0, 1], [1, 1, 0], [0, 1, 1]]


def int_matrices(max_n=6, lo=-9, hi=9):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)
    )


def test_det_of_seed_matrices():
    assert det_bareiss(A3) == 2
    assert det_bareiss([[1]]) == 1
    assert det_cofactor(A2) == 1
    assert det_cofactor([[0] * 3 for _ in range(3)]) == 0


def test_bareiss_matches_cofactor_on_random_binary():
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        n = int(rng.integers(2, 7))
        m = rng.integers(0, 2, size=(n, n)).tolist()
        assert det_bareiss(m) == det_cofactor(m)


def test_random_5x5_engines_agree():
    rng = np.random.default_rng(5)
    m = rng.integers(-9, 10, size=(5, 5)).tolist()
    assert det_bareiss(m) == det_cofactor(m)


def test_bareiss_needs_row_swap():
    # zero leading pivot, nonsingular
    assert det_bareiss([[0, 1], [1, 0]]) == -1
    assert det_bareiss([[0, 0, 1], [0, 1, 0], [1, 0, 0]]) == -1


def test_zero_column_short_circuits():
    assert det_bareiss([[0, 1, 1], [0, 2, 3], [0, 5, 7]]) == 0


def test_cofactor_guard():
    with pytest.raises(SizeGuardError):
        det_cofactor(np.eye(9, dtype=int).tolist())


def test_overflow_is_detected():
    big = 1 << 40
    m = [[big, 1], [1, big]]
    with pytest.raises(ArithmeticOverflowError):
        det_bareiss(m)
    assert det_bareiss(m, width=None) == big * big - 1
    with pytest.raises(ArithmeticOverflowError):
        adjugate([[big, big, 0], [0, big, big], [big, 0, big]])


def test_non_square_rejected():
    with pytest.raises(DimensionMismatchError):
        det_bareiss([[1, 2, 3], [4, 5, 6]])


def test_adjugate_examples():
    assert adjugate(IntMatrix.identity(3)) == IntMatrix.identity(3)
    # 2x2 formula [[d, -b], [-c, a]]
    assert adjugate(A2).rows == ((1, 0), (-1, 1))
    assert adjugate([[5]]).rows == ((1,),)


def test_adjugate_identity_random_4x4():
    rng = np.random.default_rng(11)
    m = IntMatrix.from_rows(rng.integers(-9, 10, size=(4, 4)).tolist())
    adj = adjugate(m)
    d = det_bareiss(m)
    assert m @ adj == m.scaled_identity(d)
    assert adj @ m == m.scaled_identity(d)


@settings(max_examples=300, deadline=None)
@given(int_matrices())
def test_engines_agree(rows):
    assert det_bareiss(rows) == det_cofactor(rows)


@settings(max_examples=200, deadline=None)
@given(int_matrices(max_n=5))
def test_adjugate_identity(rows):
    m = IntMatrix.from_rows(rows)
    d = det_bareiss(m)
    adj = adjugate(m)
    assert m @ adj == m.scaled_identity(d) == adj @ m


@settings(max_examples=200, deadline=None)
@given(int_matrices())
def test_transpose_invariance(rows):
    m = IntMatrix.from_rows(rows)
    assert det_bareiss(m) == det_bareiss(m.transpose())


@settings(max_examples=200, deadline=None)
@given(int_matrices(max_n=6).filter(lambda r: len(r) >= 2), st.data())
def test_equal_rows_give_zero(rows, data):
    n = len(rows)
    i = data.draw(st.integers(0, n - 1))
    j = data.draw(st.integers(0, n - 1).filter(lambda k: k != i))
    rows = [list(r) for r in rows]
    rows[j] = list(rows[i])
    assert det_bareiss(rows) == 0
    assert det_cofactor(rows) == 0


def test_binary_matrix_validation_and_bordering():
    with pytest.raises(ValueError):
        BinaryMatrix.from_rows([[1, 2], [0, 1]])
    a = BinaryMatrix.from_rows(A2)
    b = a.bordered([0, 1], [1, 0], 1)
    assert b.to_strings() == ["101", "110", "011"]
    assert b.leading_block(2) == a
    with pytest.raises(DimensionMismatchError):
        a.bordered([1], [1, 0])
