import itertools

import numpy as np
import pytest

from maxdet.errors import SizeGuardError
from maxdet.exact_linalg import det_bareiss, det_cofactor
from maxdet.growth import grow_sequence
from maxdet.oracle import batched_det, brute_dn, brute_Mn, check_relation, naive_max_det
from maxdet.reference import A1, TABLES


def test_batched_det_matches_cofactor():
    rng = np.random.default_rng(0)
    for k in range(0, 6):
        a = rng.integers(-3, 4, size=(50, k, k))
        got = batched_det(a)
        want = [det_cofactor(m.tolist()) if k else 1 for m in a]
        assert got.tolist() == want


def test_dn_small_values():
    assert brute_dn(1).value == 1
    assert brute_dn(3).value == 2
    for n in (1, 2, 3, 4):
        assert brute_dn(n).value == TABLES.d_value(n)


def test_dn_witness_is_first_in_ascending_order():
    for n in (1, 2, 3):
        value, first = naive_max_det(n)
        rep = brute_dn(n)
        assert rep.value == value
        assert rep.witness == first
        assert rep.search_space == 2 ** (n * n)


def test_mn_values():
    assert brute_Mn(1).value == 1
    # 16 sign patterns
    assert brute_Mn(2).value == max(
        det_bareiss([[a, b], [c, d]]) for a, b, c, d in itertools.product((-1, 1), repeat=4)
    ) == 2
    assert brute_Mn(4).value == 16 == 2**3 * brute_dn(3).value


def test_mn_normalization_agrees():
    for n in (1, 2, 3):
        full = brute_Mn(n, normalize=False)
        fast = brute_Mn(n, normalize=True)
        naive, _ = naive_max_det(n, (-1, 1))
        assert full.value == fast.value == naive
        assert fast.search_space == 2 ** ((n - 1) ** 2)
        assert det_bareiss(fast.witness) == fast.value
        assert set(v for row in fast.witness.rows for v in row) <= {-1, 1}


def test_sign_flips_preserve_abs_det():
    rng = np.random.default_rng(4)
    for _ in range(50):
        m = rng.choice([-1, 1], size=(4, 4))
        d = abs(det_bareiss(m.tolist()))
        i, j = rng.integers(0, 4, size=2)
        flipped = m.copy()
        flipped[i] *= -1
        flipped[:, j] *= -1
        assert abs(det_bareiss(flipped.tolist())) == d


@pytest.mark.parametrize("n,expected", [(2, 2), (3, 4), (4, 16)])
def test_relation(n, expected):
    rel = check_relation(n)
    assert rel.holds
    assert rel.m_value == expected == rel.rhs


def test_guards():
    with pytest.raises(SizeGuardError):
        brute_dn(6)
    with pytest.raises(SizeGuardError):
        brute_Mn(0)
    with pytest.raises(SizeGuardError):
        check_relation(1)


def test_thread_count_does_not_change_result():
    base = brute_dn(4)
    for t in (2, 8):
        rep = brute_dn(4, threads=t)
        assert (rep.value, rep.witness) == (base.value, base.witness)


def test_growth_below_total_maximum():
    chain = grow_sequence(A1, 4)
    for node in chain:
        assert node.det <= brute_dn(node.depth).value
