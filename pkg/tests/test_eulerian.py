import math
from concurrent.futures import ThreadPoolExecutor

import pytest

from qeulerian.errors import NotDivisor, QEulerianError
from qeulerian.eulerian import (
    EulerianTable,
    classical_eulerian,
    classical_eulerian_row,
    eulerian_number,
    eulerian_tq,
    root_specialization_pair,
)
from qeulerian.permstats import distribution
from qeulerian.polyring import ONE, ZERO, QPoly

CLASSICAL_TRIANGLE = [
    [],
    [1],
    [1, 1],
    [1, 4, 1],
    [1, 11, 11, 1],
    [1, 26, 66, 26, 1],
    [1, 57, 302, 302, 57, 1],
    [1, 120, 1191, 2416, 1191, 120, 1],
    [1, 247, 4293, 15619, 15619, 4293, 247, 1],
]


def test_small_rows():
    """A_0 = 0, A_1 = 1, A_2 = 1 + t, A_3 = 1 + (2 + q + q^2)t + t^2."""
    assert eulerian_tq(0).is_zero()
    assert eulerian_number(1, 0) == ONE
    assert eulerian_number(2, 0) == ONE
    assert eulerian_number(2, 1) == ONE
    assert eulerian_number(3, 0) == ONE
    assert eulerian_number(3, 1) == QPoly((2, 1, 1))
    assert eulerian_number(3, 2) == ONE
    assert str(eulerian_tq(3)) == "1 + (2 + q + q^2)t + t^2"


def test_out_of_range_coefficients_are_zero():
    assert eulerian_number(5, -1) == ZERO
    assert eulerian_number(3, 3) == ZERO
    assert eulerian_number(0, 0) == ZERO
    assert eulerian_number(0, 0, 3) == ZERO


def test_colored_row():
    """The r = 2 recurrence needs the k = 1 term: A_2^(2) = 1 + (2 + q^2)t + (2 + q^2)t^2 + t^3."""
    assert eulerian_tq(2, 2).to_rows() == [[1], [2, 0, 1], [2, 0, 1], [1]]
    assert eulerian_tq(1, 2).to_rows() == [[1], [1]]
    assert eulerian_tq(0, 2).is_zero()


def test_classical_triangle():
    for n, row in enumerate(CLASSICAL_TRIANGLE):
        assert classical_eulerian_row(n) == row
    assert classical_eulerian(0, 0) == 0
    assert classical_eulerian(3, 1) == 4
    assert classical_eulerian(4, 1) == 11


def test_three_way_agreement():
    """The recurrence equals both exhaustive distributions over S_n."""
    for n in range(0, 8):
        expected = eulerian_tq(n)
        assert distribution(n, "maj-exc") == expected
        assert distribution(n, "inv-lec") == expected


def test_symmetry_and_wreath_cardinality():
    """Rows are palindromic of length rn, nonnegative, and sum to r^n n! at t = q = 1."""
    for r in range(1, 4):
        for n in range(1, 9 // r + 1):
            row = eulerian_tq(n, r)
            assert row.t_degree() == r * n - 1
            for k in range(r * n):
                assert row.coefficient(k) == row.coefficient(r * n - 1 - k)
                assert all(c >= 0 for c in row.coefficient(k).coeffs)
            assert row.at_t_one().evaluate(1) == r ** n * math.factorial(n)


def test_root_specialization_examples():
    lhs, rhs = root_specialization_pair(4, 2)
    assert lhs == rhs
    assert lhs.to_rows() == [[1], [3], [3], [1]]
    lhs, rhs = root_specialization_pair(3, 3)
    assert lhs == rhs
    assert lhs.to_rows() == [[1], [1], [1]]
    lhs, rhs = root_specialization_pair(5, 1)
    assert lhs.to_rows() == [[c] for c in CLASSICAL_TRIANGLE[5]]


def test_root_specialization_all_divisors():
    for n in range(1, 9):
        for d in range(1, n + 1):
            if n % d == 0:
                lhs, rhs = root_specialization_pair(n, d)
                assert lhs == rhs, (n, d)


def test_root_specialization_needs_a_divisor():
    with pytest.raises(NotDivisor):
        root_specialization_pair(4, 3)


def test_table_validation():
    with pytest.raises(QEulerianError):
        EulerianTable(0)
    with pytest.raises(QEulerianError):
        EulerianTable(1).row(-1)


def test_table_grows_consistently_across_threads():
    """Concurrent growth of a fresh table yields the same rows as the shared one."""
    table = EulerianTable(2)
    with ThreadPoolExecutor(max_workers=4) as pool:
        rows = list(pool.map(table.row, [4, 2, 3, 4, 1, 4]))
    assert rows[0] == rows[3] == rows[5] == eulerian_tq(4, 2)
    assert len(table.rows) == 5
