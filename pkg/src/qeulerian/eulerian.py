"""q-Eulerian polynomials A_n(t,q) and their r-colored versions A_n^(r)(t,q).

Rows come from the generating function cleared of denominators. Equating the coefficient
of z^n/(q^r;q^r)_n on both sides gives

    sum_k [n k]_{q^r} (t^{rk} - t) A_{n-k} = 1 - t^{rn},

and the k = 0 term is (1 - t) A_n, so each row is one exact division by (1 - t). A_0 = 0.
The formal series in z are never built.
"""
from __future__ import annotations

import functools
import threading

from eliot import start_action

from qeulerian.errors import NotDivisor, QEulerianError
from qeulerian.polyring import (
    ONE_MINUS_T,
    ZERO,
    CyclotomicTPoly,
    QPoly,
    TQPoly,
    tq_eval_q,
    tq_exact_div,
)
from qeulerian.qfunctions import q_binomial_r


class EulerianTable:
    """Memoized rows A_0^(r), A_1^(r), ... for a fixed colour count r."""

    def __init__(self, r: int = 1):
        if r < 1:
            raise QEulerianError(f"colour count r must be positive, got {r}")
        self.r = r
        self._rows: list[TQPoly] = [TQPoly()]
        self._lock = threading.Lock()

    @property
    def rows(self) -> tuple[TQPoly, ...]:
        return tuple(self._rows)

    def grow(self, n: int) -> None:
        """Make sure rows 0..n exist. Safe to call from several threads."""
        if n < len(self._rows):
            return
        with self._lock:
            with start_action(action_type="grow_eulerian_table", r=self.r, start=len(self._rows), target=n) as action:
                while len(self._rows) <= n:
                    self._rows.append(self._next_row())
                action.add_success_fields(t_degree=self._rows[n].t_degree())

    def _next_row(self) -> TQPoly:
        n, r = len(self._rows), self.r
        rhs = TQPoly.constant(1) - TQPoly.t_power(r * n)
        for k in range(1, n + 1):
            weight = TQPoly.t_power(r * k) - TQPoly.t_power(1)
            if weight.is_zero():
                continue
            rhs = rhs - weight * q_binomial_r(n, k, r) * self._rows[n - k]
        return tq_exact_div(rhs, ONE_MINUS_T)

    def row(self, n: int) -> TQPoly:
        if n < 0:
            raise QEulerianError(f"row index must be >= 0, got {n}")
        self.grow(n)
        return self._rows[n]

    def number(self, n: int, k: int) -> QPoly:
        if n <= 0:
            return ZERO
        return self.row(n).coefficient(k)


@functools.lru_cache(maxsize=None)
def get_table(r: int = 1) -> EulerianTable:
    """The shared table for colour count r."""
    return EulerianTable(r)


def eulerian_tq(n: int, r: int = 1) -> TQPoly:
    """
    A_n^(r)(t,q); for r = 1 this is A_n(t,q).

    >>> str(eulerian_tq(3))
    '1 + (2 + q + q^2)t + t^2'
    """
    return get_table(r).row(n)


def eulerian_number(n: int, k: int, r: int = 1) -> QPoly:
    """Coefficient of t^k in A_n^(r)(t,q); zero outside 0 <= k <= rn - 1 and for n = 0."""
    return get_table(r).number(n, k)


def classical_eulerian(n: int, k: int) -> int:
    """A_{n,k} with the convention A_{0,0} = 0."""
    return eulerian_number(n, k).evaluate(1)


def classical_eulerian_row(n: int) -> list[int]:
    """[A_{n,0}, ..., A_{n,n-1}]; empty for n = 0."""
    return list(eulerian_tq(n).at_q_one())


def root_specialization_pair(n: int, d: int) -> tuple[CyclotomicTPoly, CyclotomicTPoly]:
    """
    Both sides of A_n(t, w_d) = A_{n/d}(t) ((1 - t^d)/(1 - t))^{n/d} for a primitive d-th
    root of unity w_d, as polynomials in t over Z[q]/Phi_d. The caller compares them.
    """
    if n < 1 or d < 1 or n % d:
        raise NotDivisor(f"d={d} does not divide n={n}")
    k = n // d
    lhs = tq_eval_q(eulerian_tq(n), d)
    block = CyclotomicTPoly.from_integers(d, [1] * d)
    rhs = CyclotomicTPoly.from_integers(d, classical_eulerian_row(k)) * block ** k
    return lhs, rhs
