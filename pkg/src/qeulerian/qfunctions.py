"""q-analog building blocks: q-shifted factorials, Gaussian binomials, q-multinomials,
Rogers-Szego polynomials and the hook weight block P_m(t)."""
from __future__ import annotations

import functools
from typing import Sequence

from qeulerian.errors import MTooSmall, PartsSumMismatch, QEulerianError
from qeulerian.polyring import ONE, ZERO, QPoly, TQPoly


@functools.lru_cache(maxsize=None)
def q_poch(n: int) -> QPoly:
    """(q;q)_n = (1-q)(1-q^2)...(1-q^n); (q;q)_0 = 1."""
    if n < 0:
        raise QEulerianError(f"q_poch needs n >= 0, got {n}")
    result = ONE
    for i in range(1, n + 1):
        result = result * (ONE - QPoly.monomial(i))
    return result


@functools.lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QPoly:
    """
    Gaussian binomial [n k]_q, zero when k < 0 or k > n.

    Built as [n-k+i i] = [n-k+i-1 i-1] (1 - q^(n-k+i)) / (1 - q^i) for i = 1..k with
    k replaced by min(k, n-k), so every intermediate value is itself a Gaussian binomial.

    >>> q_binomial(3, 2)
    QPoly('1 + q + q^2')
    """
    if n < 0:
        raise QEulerianError(f"q_binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return ZERO
    k = min(k, n - k)
    result = ONE
    for i in range(1, k + 1):
        result = (result * (ONE - QPoly.monomial(n - k + i))).exact_div(ONE - QPoly.monomial(i))
    return result


def q_binomial_by_division(n: int, k: int) -> QPoly:
    """(q;q)_n / ((q;q)_{n-k} (q;q)_k) by exact division."""
    if k < 0 or k > n:
        return ZERO
    return q_poch(n).exact_div(q_poch(n - k) * q_poch(k))


def q_binomial_r(n: int, k: int, r: int) -> QPoly:
    """[n k] in base q^r."""
    return q_binomial(n, k).subst_q_power(r)


def q_multinomial(n: int, parts: Sequence[int]) -> QPoly:
    """(q;q)_n / prod (q;q)_{a_i}, built as a product of Gaussian binomials."""
    if any(a < 0 for a in parts):
        raise PartsSumMismatch(f"negative part in {list(parts)}")
    if sum(parts) != n:
        raise PartsSumMismatch(f"parts {list(parts)} sum to {sum(parts)}, expected {n}")
    result = ONE
    remaining = n
    for a in parts:
        result = result * q_binomial(remaining, a)
        remaining -= a
    return result


def rogers_szego(n: int) -> TQPoly:
    """H_n(t;q) = sum_i [n i]_q t^i."""
    if n < 0:
        raise QEulerianError(f"rogers_szego needs n >= 0, got {n}")
    return TQPoly(q_binomial(n, i) for i in range(n + 1))


def hook_weight_block(m: int) -> TQPoly:
    """P_m(t) = t + t^2 + ... + t^(m-1): one term per hook on an m-letter content."""
    if m < 2:
        raise MTooSmall(f"a hook needs at least two letters, got m={m}")
    return TQPoly((ZERO,) + (ONE,) * (m - 1))
