"""Dense exact polynomials over the integers.

``QPoly`` is a polynomial in q stored as a tuple of coefficients starting with the constant
term, so 1 - 2q + q^3 is ``QPoly((1, -2, 0, 1))``. ``TQPoly`` is a polynomial in t whose
coefficients are ``QPoly`` values (t outer, q inner). Both are kept canonical: no trailing
zeros, the zero polynomial is the empty tuple.

Evaluation at a primitive d-th root of unity is done exactly by reducing modulo the d-th
cyclotomic polynomial, see ``eval_at_root`` and ``tq_eval_q``.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Literal, Mapping, Union

from qeulerian.errors import DivisionNotExact, MixedOrientation, PolyDivisionByZero, QEulerianError


def _trim(values: tuple) -> tuple:
    end = len(values)
    while end and not values[end - 1]:
        end -= 1
    return values[:end]


@dataclass(frozen=True, init=False)
class QPoly:
    """
    A polynomial in q over the integers.

    >>> QPoly((1, 1)) * QPoly((1, 1, 1))
    QPoly('1 + 2q + 2q^2 + q^3')
    """
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        values = tuple(coeffs)
        for c in values:
            if not isinstance(c, int):
                raise TypeError(f"QPoly coefficients must be integers, got {c!r}")
        object.__setattr__(self, "coeffs", _trim(values))

    @classmethod
    def constant(cls, c: int) -> QPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, power: int, c: int = 1) -> QPoly:
        if power < 0:
            raise QEulerianError(f"negative power {power}")
        return cls((0,) * power + (c,))

    def deg(self) -> int:
        """Degree of the leading term; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k: int) -> QPoly:
        """Multiply by q^k."""
        if self.is_zero():
            return self
        return QPoly((0,) * k + self.coeffs)

    def subst_q_power(self, r: int) -> QPoly:
        """Return p(q^r)."""
        if r < 1:
            raise QEulerianError(f"substitution power must be positive, got {r}")
        if r == 1 or self.deg() < 1:
            return self
        out = [0] * (r * self.deg() + 1)
        for i, c in enumerate(self.coeffs):
            out[r * i] = c
        return QPoly(out)

    def __add__(self, other: Union[int, QPoly]) -> QPoly:
        coeffs = (other,) if isinstance(other, int) else other.coeffs
        return QPoly(c + d for c, d in itertools.zip_longest(self.coeffs, coeffs, fillvalue=0))

    def __sub__(self, other: Union[int, QPoly]) -> QPoly:
        coeffs = (other,) if isinstance(other, int) else other.coeffs
        return QPoly(c - d for c, d in itertools.zip_longest(self.coeffs, coeffs, fillvalue=0))

    def __rsub__(self, other: int) -> QPoly:
        return QPoly.constant(other) - self

    def __neg__(self) -> QPoly:
        return QPoly(-c for c in self.coeffs)

    def __mul__(self, other: Union[int, QPoly]) -> QPoly:
        if isinstance(other, int):
            return QPoly(c * other for c in self.coeffs)
        if not isinstance(other, QPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        result = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c:
                for j, d in enumerate(other.coeffs):
                    result[i + j] += c * d
        return QPoly(result)

    __radd__ = __add__
    __rmul__ = __mul__

    def __pow__(self, n: int) -> QPoly:
        if n < 0:
            raise QEulerianError("cannot invert a polynomial")
        if n == 0:
            return ONE
        half = self ** (n // 2)
        return half * half * self if n % 2 else half * half

    def __divmod__(self, d: QPoly) -> tuple[QPoly, QPoly]:
        """
        Quotient and remainder with deg(remainder) < deg(d). The leading coefficient of each
        step must divide exactly, so this is only total for monic divisors.

        >>> divmod(QPoly((-1, 0, 0, 1)), QPoly((-1, 1)))
        (QPoly('1 + q + q^2'), QPoly('0'))
        """
        if d.is_zero():
            raise PolyDivisionByZero(f"division of {self} by the zero polynomial")
        quotient = [0] * max(len(self.coeffs) - len(d.coeffs) + 1, 0)
        rem = list(self.coeffs)
        lead = d.coeffs[-1]
        for shift in range(len(quotient) - 1, -1, -1):
            top = rem[shift + len(d.coeffs) - 1]
            if not top:
                continue
            c, leftover = divmod(top, lead)
            if leftover:
                raise DivisionNotExact(f"leading coefficient {top} is not divisible by {lead} in {self} / {d}")
            quotient[shift] = c
            for j, dc in enumerate(d.coeffs):
                rem[shift + j] -= c * dc
        return QPoly(quotient), QPoly(rem)

    def exact_div(self, d: QPoly) -> QPoly:
        """Return self / d, raising ``DivisionNotExact`` on a nonzero remainder."""
        quotient, rem = divmod(self, d)
        if not rem.is_zero():
            raise DivisionNotExact(f"{self} is not divisible by {d}: remainder {rem}")
        return quotient

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            var = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            body = f"{mag}{var}" if (mag != 1 or not var) else var
            parts.append(f"{sign} {body}" if parts else f"{sign}{body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"QPoly('{self}')"


ZERO = QPoly()
ONE = QPoly((1,))


def qpoly_arith(op: Literal["add", "sub", "mul"], a: QPoly, b: QPoly) -> QPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise QEulerianError(f"unknown operation {op!r}")


def subst_q_power(p: QPoly, r: int) -> QPoly:
    return p.subst_q_power(r)


@dataclass(frozen=True, init=False)
class TQPoly:
    """A polynomial in t with ``QPoly`` coefficients, ascending in t."""
    tcoeffs: tuple[QPoly, ...]

    def __init__(self, tcoeffs: Iterable[QPoly] = ()):
        values = tuple(tcoeffs)
        for c in values:
            if not isinstance(c, QPoly):
                raise MixedOrientation(f"TQPoly coefficients must be QPoly (t outer, q inner), got {c!r}")
        object.__setattr__(self, "tcoeffs", _trim(tuple(values)))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> TQPoly:
        """Build from ascending-in-t rows of ascending-in-q integer coefficients."""
        return cls(QPoly(row) for row in rows)

    @classmethod
    def from_terms(cls, terms: Mapping[tuple[int, int], int]) -> TQPoly:
        """Build from a mapping ``(t_power, q_power) -> coefficient``."""
        if not terms:
            return cls()
        t_deg = max(i for i, _ in terms)
        rows: list[list[int]] = [[] for _ in range(t_deg + 1)]
        for (i, j), c in terms.items():
            row = rows[i]
            if len(row) <= j:
                row.extend([0] * (j + 1 - len(row)))
            row[j] += c
        return cls.from_rows(rows)

    @classmethod
    def t_power(cls, k: int, coeff: QPoly = QPoly((1,))) -> TQPoly:
        return cls((ZERO,) * k + (coeff,))

    @classmethod
    def constant(cls, c: Union[int, QPoly]) -> TQPoly:
        return cls((QPoly.constant(c) if isinstance(c, int) else c,))

    def t_degree(self) -> int:
        return len(self.tcoeffs) - 1

    def is_zero(self) -> bool:
        return not self.tcoeffs

    def coefficient(self, k: int) -> QPoly:
        return self.tcoeffs[k] if 0 <= k < len(self.tcoeffs) else ZERO

    def at_t_one(self) -> QPoly:
        return sum(self.tcoeffs, ZERO)

    def at_q_one(self) -> tuple[int, ...]:
        return _trim(tuple(c.evaluate(1) for c in self.tcoeffs))

    def subst_q_power(self, r: int) -> TQPoly:
        return TQPoly(c.subst_q_power(r) for c in self.tcoeffs)

    def _coerce(self, other: Union[int, QPoly, TQPoly]) -> tuple[QPoly, ...]:
        if isinstance(other, TQPoly):
            return other.tcoeffs
        if isinstance(other, QPoly):
            return (other,)
        if isinstance(other, int):
            return (QPoly.constant(other),)
        raise MixedOrientation(f"cannot combine TQPoly with {other!r}")

    def __add__(self, other: Union[int, QPoly, TQPoly]) -> TQPoly:
        coeffs = self._coerce(other)
        return TQPoly(a + b for a, b in itertools.zip_longest(self.tcoeffs, coeffs, fillvalue=ZERO))

    def __sub__(self, other: Union[int, QPoly, TQPoly]) -> TQPoly:
        coeffs = self._coerce(other)
        return TQPoly(a - b for a, b in itertools.zip_longest(self.tcoeffs, coeffs, fillvalue=ZERO))

    def __neg__(self) -> TQPoly:
        return TQPoly(-c for c in self.tcoeffs)

    def __mul__(self, other: Union[int, QPoly, TQPoly]) -> TQPoly:
        coeffs = self._coerce(other)
        if self.is_zero() or not coeffs:
            return TQPoly()
        result = [ZERO] * (len(self.tcoeffs) + len(coeffs) - 1)
        for i, a in enumerate(self.tcoeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(coeffs):
                result[i + j] = result[i + j] + a * b
        return TQPoly(result)

    __radd__ = __add__
    __rmul__ = __mul__

    def __pow__(self, n: int) -> TQPoly:
        if n < 0:
            raise QEulerianError("cannot invert a polynomial")
        result = TQPoly.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def __divmod__(self, den: TQPoly) -> tuple[TQPoly, TQPoly]:
        if den.is_zero():
            raise PolyDivisionByZero(f"division of {self} by the zero polynomial")
        size = len(den.tcoeffs)
        quotient = [ZERO] * max(len(self.tcoeffs) - size + 1, 0)
        rem = list(self.tcoeffs)
        lead = den.tcoeffs[-1]
        for shift in range(len(quotient) - 1, -1, -1):
            top = rem[shift + size - 1]
            if top.is_zero():
                continue
            c = top.exact_div(lead)
            quotient[shift] = c
            for j, dc in enumerate(den.tcoeffs):
                rem[shift + j] = rem[shift + j] - c * dc
        return TQPoly(quotient), TQPoly(rem)

    def to_rows(self) -> list[list[int]]:
        return [c.to_list() for c in self.tcoeffs]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.tcoeffs):
            if c.is_zero():
                continue
            var = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if not var:
                parts.append(str(c) if c.deg() == 0 else f"({c})")
            elif c == ONE:
                parts.append(var)
            else:
                parts.append(f"({c}){var}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"TQPoly('{self}')"


ONE_MINUS_T = TQPoly((ONE, -ONE))


def tq_exact_div(num: TQPoly, den: TQPoly) -> TQPoly:
    """
    Exact division in t; raises ``DivisionNotExact`` if anything is left over.

    >>> tq_exact_div(TQPoly.from_rows([[1], [], [], [-1]]), ONE_MINUS_T)
    TQPoly('1 + t + t^2')
    """
    quotient, rem = divmod(num, den)
    if not rem.is_zero():
        raise DivisionNotExact(f"({num}) / ({den}) leaves remainder {rem}")
    return quotient


@functools.lru_cache(maxsize=None)
def cyclotomic(d: int) -> QPoly:
    """
    The d-th cyclotomic polynomial, from q^d - 1 divided by the lower ones.

    >>> [str(cyclotomic(d)) for d in range(1, 5)]
    ['-1 + q', '1 + q', '1 + q + q^2', '1 + q^2']
    """
    if d <= 0:
        raise QEulerianError(f"root order must be positive, got {d}")
    poly = QPoly((-1,) + (0,) * (d - 1) + (1,))
    for e in range(1, d):
        if d % e == 0:
            poly = poly.exact_div(cyclotomic(e))
    return poly


@dataclass(frozen=True)
class CyclotomicElem:
    """An element of Z[q]/Phi_d, i.e. an exact value at a primitive d-th root of unity."""
    d: int
    residue: QPoly

    def __post_init__(self) -> None:
        if self.d < 1:
            raise QEulerianError(f"root order must be positive, got {self.d}")
        if self.residue.deg() >= cyclotomic(self.d).deg():
            raise QEulerianError(f"residue {self.residue} is not reduced modulo Phi_{self.d}")

    @classmethod
    def reduce(cls, p: QPoly, d: int) -> CyclotomicElem:
        _, rem = divmod(p, cyclotomic(d))
        return cls(d, rem)

    def is_zero(self) -> bool:
        return self.residue.is_zero()

    def as_integer(self) -> int:
        """The value as an integer; always defined for d = 1 and d = 2."""
        if self.residue.deg() > 0:
            raise QEulerianError(f"{self.residue} mod Phi_{self.d} is not an integer")
        return self.residue.coefficient(0)

    def _check(self, other: CyclotomicElem) -> None:
        if other.d != self.d:
            raise QEulerianError(f"cannot mix residues modulo Phi_{self.d} and Phi_{other.d}")

    def __add__(self, other: CyclotomicElem) -> CyclotomicElem:
        self._check(other)
        return CyclotomicElem.reduce(self.residue + other.residue, self.d)

    def __sub__(self, other: CyclotomicElem) -> CyclotomicElem:
        self._check(other)
        return CyclotomicElem.reduce(self.residue - other.residue, self.d)

    def __mul__(self, other: CyclotomicElem) -> CyclotomicElem:
        self._check(other)
        return CyclotomicElem.reduce(self.residue * other.residue, self.d)

    def __neg__(self) -> CyclotomicElem:
        return CyclotomicElem(self.d, -self.residue)

    def __str__(self) -> str:
        return str(self.residue)


def eval_at_root(p: QPoly, d: int) -> CyclotomicElem:
    """
    Exact value of p at a primitive d-th root of unity.

    >>> eval_at_root(QPoly((0, 0, 0, 1)), 4).residue
    QPoly('-q')
    """
    return CyclotomicElem.reduce(p, d)


@dataclass(frozen=True, init=False)
class CyclotomicTPoly:
    """A polynomial in t over Z[q]/Phi_d, ascending in t."""
    d: int
    residues: tuple[QPoly, ...]

    def __init__(self, d: int, coeffs: Iterable[Union[QPoly, CyclotomicElem]] = ()):
        reduced = []
        for c in coeffs:
            if isinstance(c, CyclotomicElem):
                if c.d != d:
                    raise QEulerianError(f"coefficient modulo Phi_{c.d} in a polynomial over Phi_{d}")
                reduced.append(c.residue)
            else:
                reduced.append(CyclotomicElem.reduce(c, d).residue)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "residues", _trim(tuple(reduced)))

    @classmethod
    def from_integers(cls, d: int, values: Iterable[int]) -> CyclotomicTPoly:
        return cls(d, (QPoly.constant(v) for v in values))

    def coefficient(self, k: int) -> CyclotomicElem:
        residue = self.residues[k] if 0 <= k < len(self.residues) else ZERO
        return CyclotomicElem(self.d, residue)

    def t_degree(self) -> int:
        return len(self.residues) - 1

    def __add__(self, other: CyclotomicTPoly) -> CyclotomicTPoly:
        return CyclotomicTPoly(
            self.d, (a + b for a, b in itertools.zip_longest(self.residues, other.residues, fillvalue=ZERO))
        )

    def __mul__(self, other: CyclotomicTPoly) -> CyclotomicTPoly:
        if not self.residues or not other.residues:
            return CyclotomicTPoly(self.d)
        result = [ZERO] * (len(self.residues) + len(other.residues) - 1)
        for i, a in enumerate(self.residues):
            for j, b in enumerate(other.residues):
                result[i + j] = result[i + j] + a * b
        return CyclotomicTPoly(self.d, result)

    def __pow__(self, n: int) -> CyclotomicTPoly:
        result = CyclotomicTPoly.from_integers(self.d, [1])
        for _ in range(n):
            result = result * self
        return result

    def to_rows(self) -> list[list[int]]:
        return [r.to_list() for r in self.residues]

    def __str__(self) -> str:
        return f"{TQPoly(self.residues)} mod Phi_{self.d}"


def tq_eval_q(p: TQPoly, d: int) -> CyclotomicTPoly:
    """Evaluate every q-coefficient of p at a primitive d-th root of unity."""
    return CyclotomicTPoly(d, p.tcoeffs)
