import math

import pytest

from qeulerian.errors import MTooSmall, PartsSumMismatch, QEulerianError
from qeulerian.permstats import compositions, ordered_set_partitions, partition_inv
from qeulerian.polyring import ONE, ZERO, QPoly, eval_at_root
from qeulerian.qfunctions import (
    hook_weight_block,
    q_binomial,
    q_binomial_by_division,
    q_binomial_r,
    q_multinomial,
    q_poch,
    rogers_szego,
)


def test_q_poch_values():
    assert q_poch(0) == ONE
    assert q_poch(1) == QPoly((1, -1))
    assert q_poch(2) == QPoly((1, -1, -1, 1))
    with pytest.raises(QEulerianError):
        q_poch(-1)


def test_q_binomial_values():
    assert q_binomial(3, 2) == QPoly((1, 1, 1))
    assert q_binomial(4, 2) == QPoly((1, 1, 2, 1, 1))
    assert q_binomial(2, 5) == ZERO
    assert q_binomial(2, -1) == ZERO
    assert all(q_binomial(n, 0) == ONE for n in range(8))


def test_q_binomial_large_n():
    """Large n with small k (or n - k) is computed without deep recursion."""
    b = q_binomial(1200, 2)
    assert b.deg() == 2 * 1198
    assert b.evaluate(1) == math.comb(1200, 2)
    assert q_binomial(1200, 1198) == b
    assert q_binomial(1500, 1) == QPoly((1,) * 1500)


def test_q_binomial_recurrences_and_symmetry():
    """Both q-Pascal rules, the k <-> n-k symmetry and the division oracle agree for n <= 12."""
    for n in range(1, 13):
        for k in range(n + 1):
            b = q_binomial(n, k)
            assert b == q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(k)
            assert b == q_binomial(n - 1, k - 1).shift(n - k) + q_binomial(n - 1, k)
            assert b == q_binomial(n, n - k)
            assert b == q_binomial_by_division(n, k)
            assert all(c >= 0 for c in b.coeffs)
            assert b.evaluate(1) == math.comb(n, k)


def test_q_binomial_in_base_q_power():
    assert q_binomial_r(2, 1, 2) == QPoly((1, 0, 1))
    assert q_binomial_r(3, 1, 1) == q_binomial(3, 1)


def test_q_multinomial_values():
    assert q_multinomial(2, [1, 1]) == QPoly((1, 1))
    assert q_multinomial(3, [3]) == ONE
    assert q_multinomial(3, [1, 1, 1]) == QPoly((1, 2, 2, 1))
    with pytest.raises(PartsSumMismatch):
        q_multinomial(3, [1, 1])
    with pytest.raises(PartsSumMismatch):
        q_multinomial(1, [2, -1])


def test_q_multinomial_counts_ordered_set_partitions():
    """The multinomial is the inversion generating function of ordered set partitions with those sizes."""
    for n in range(1, 6):
        for parts in compositions(n):
            expected = sum(
                (QPoly.monomial(partition_inv(p)) for p in ordered_set_partitions(range(1, n + 1), parts)), ZERO
            )
            assert q_multinomial(n, parts) == expected


def test_rogers_szego():
    assert rogers_szego(0).to_rows() == [[1]]
    assert rogers_szego(2).to_rows() == [[1], [1, 1], [1]]
    assert rogers_szego(2).at_t_one() == QPoly((3, 1))


def test_hook_weight_block():
    assert hook_weight_block(2).to_rows() == [[], [1]]
    assert hook_weight_block(4).to_rows() == [[], [1], [1], [1]]
    for m in range(2, 7):
        assert hook_weight_block(m).at_t_one() == QPoly.constant(m - 1)
    with pytest.raises(MTooSmall):
        hook_weight_block(1)


def test_q_binomial_at_minus_one():
    """[2n 2k+1] vanishes at q = -1 and [2n 2k] becomes C(n, k)."""
    for n in range(1, 7):
        for k in range(n + 1):
            assert eval_at_root(q_binomial(2 * n, 2 * k), 2).as_integer() == math.comb(n, k)
            if 2 * k + 1 <= 2 * n:
                assert eval_at_root(q_binomial(2 * n, 2 * k + 1), 2).is_zero()
