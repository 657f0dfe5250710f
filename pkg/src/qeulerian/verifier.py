"""Exact sweep-and-check engine for the q-Eulerian identities.

Every checker computes both sides of an identity exactly and returns the failing cases as
witnesses; nothing here raises on a failed identity. Sweeps cover every parameter tuple up
to a bound, optionally on a thread pool, and merge results in parameter order so a report
depends only on the sweep.
"""
from __future__ import annotations

import inspect
import math
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from typing import Any, Callable, Iterable, Optional

from eliot import start_action
from pydantic import BaseModel, Field, model_validator

from qeulerian.eulerian import classical_eulerian, eulerian_number, eulerian_tq, root_specialization_pair
from qeulerian.errors import IndexExcluded, QEulerianError
from qeulerian.hookmaps import (
    enumerate_two_pix,
    enumerate_two_pix_colored,
    colored_distribution,
    lemma2_involution,
    lemma4_map,
    th5_map,
    two_pix_colored_gf,
    two_pix_gf,
)
from qeulerian.permstats import (
    compositions,
    distribution,
    hook_factorize,
    inversions,
    ordered_set_partitions,
    partition_inv,
    permutations,
)
from qeulerian.polyring import ZERO, CyclotomicTPoly, QPoly, TQPoly, eval_at_root
from qeulerian.qfunctions import q_binomial, q_binomial_r, q_multinomial, rogers_szego


class IdentityId(str, Enum):
    th1 = "th1"
    coeff = "coeff"
    rs = "rs"
    eqma = "eqma"
    root = "root"
    cgk = "cgk"
    equidist = "equidist"
    symmetry = "symmetry"
    qmul = "qmul"
    parity = "parity"
    lemma2 = "lemma2"
    lemma3 = "lemma3"
    lemma4 = "lemma4"
    prop = "prop"
    colored_lemma3 = "colored_lemma3"
    th5 = "th5"


class Status(str, Enum):
    passed = "pass"
    failed = "fail"
    skipped = "skipped"


class Witness(BaseModel):
    params: dict[str, int] = Field(..., description="The parameter tuple that failed")
    lhs: Any = Field(..., description="Left side, fully evaluated; polynomials as ascending coefficient arrays")
    rhs: Any = Field(..., description="Right side, fully evaluated")
    note: Optional[str] = Field(None, description="Which part of the identity failed")


class VerificationReport(BaseModel):
    identity_id: IdentityId = Field(..., description="Identity family")
    params: dict[str, int] = Field(default_factory=dict, description="Swept ranges or the single checked tuple")
    status: Status = Field(..., description="pass, fail or skipped")
    checked: int = Field(0, description="Number of parameter tuples checked")
    witnesses: list[Witness] = Field(default_factory=list, description="Every failing case found")

    @model_validator(mode="after")
    def _status_matches_witnesses(self) -> VerificationReport:
        if (self.status == Status.failed) != bool(self.witnesses):
            raise ValueError(f"status {self.status.value} does not match {len(self.witnesses)} witness(es)")
        return self

    @property
    def passed(self) -> bool:
        return self.status != Status.failed


class SweepBudget(BaseModel):
    """Upper bound per family (n, a+b, c+d or rn depending on the family); 0 skips it."""
    th1: int = Field(7, ge=0, description="max a + b")
    coeff: int = Field(7, ge=0, description="max rn")
    rs: int = Field(7, ge=0, description="max n")
    eqma: int = Field(7, ge=0, description="max rn")
    root: int = Field(7, ge=0, description="max n")
    cgk: int = Field(7, ge=0, description="max c + d")
    equidist: int = Field(7, ge=0, description="max n")
    symmetry: int = Field(7, ge=0, description="max rn")
    qmul: int = Field(7, ge=0, description="max n")
    parity: int = Field(6, ge=0, description="max n (binomials of 2n)")
    lemma2: int = Field(7, ge=0, description="max n")
    lemma3: int = Field(7, ge=0, description="max n")
    lemma4: int = Field(7, ge=0, description="max n")
    prop: int = Field(7, ge=0, description="max rn")
    colored_lemma3: int = Field(7, ge=0, description="max rn")
    th5: int = Field(6, ge=0, description="max rn")
    max_r: int = Field(3, ge=1, description="largest color count for the colored families")

    @classmethod
    def uniform(cls, max_n: int, max_r: int = 3) -> SweepBudget:
        return cls(**{identity.value: max_n for identity in IdentityId}, max_r=max_r)

    def bound(self, identity: IdentityId) -> int:
        return getattr(self, identity.value)


def encode(value: Any) -> Any:
    """JSON-ready form: polynomials become ascending coefficient arrays."""
    if isinstance(value, QPoly):
        return value.to_list()
    if isinstance(value, (TQPoly, CyclotomicTPoly)):
        return value.to_rows()
    if isinstance(value, (int, str)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    return str(value)


def _compare(params: dict[str, int], lhs: Any, rhs: Any, note: Optional[str] = None) -> list[Witness]:
    if lhs == rhs:
        return []
    return [Witness(params=params, lhs=encode(lhs), rhs=encode(rhs), note=note)]


def _report(identity: IdentityId, params: dict[str, int], checked: int, witnesses: list[Witness]) -> VerificationReport:
    status = Status.failed if witnesses else Status.passed
    return VerificationReport(identity_id=identity, params=params, status=status, checked=checked, witnesses=witnesses)


# single-tuple checks, each returning the witnesses it found


def _check_th1(a: int, b: int) -> list[Witness]:
    n = a + b
    lhs = sum((q_binomial(n, k) * eulerian_number(k, a - 1) for k in range(n + 1)), ZERO)
    rhs = sum((q_binomial(n, k) * eulerian_number(k, b - 1) for k in range(n + 1)), ZERO)
    return _compare({"a": a, "b": b}, lhs, rhs)


def _check_coeff(n: int, i: int, r: int = 1) -> list[Witness]:
    first = sum((q_binomial_r(n, k, r) * eulerian_number(n - k, i - r * k, r) for k in range(n + 1)), ZERO)
    second = sum((q_binomial_r(n, k, r) * eulerian_number(n - k, i - 1, r) for k in range(n + 1)), ZERO)
    expected = 0
    if n:
        expected = (1 if i == 0 else 0) - (1 if i == r * n else 0)
    return _compare({"n": n, "i": i, "r": r}, first - second, QPoly.constant(expected))


def _check_rs(n: int, i: int) -> list[Witness]:
    h = [rogers_szego(k).at_t_one() for k in range(n + 1)]
    lhs = sum((h[k] * q_binomial(n, k) * eulerian_number(n - k, i - k) for k in range(n + 1)), ZERO)
    lhs = lhs - sum((h[k] * q_binomial(n, k) * eulerian_number(n - k, i - 2) for k in range(n + 1)), ZERO)
    rhs = q_binomial(n, i) - q_binomial(n, i - 1)
    if i == 1 and n != 1:
        rhs = rhs + h[n]
    elif i == n and n != 1:
        rhs = rhs - h[n]
    return _compare({"n": n, "i": i}, lhs, rhs)


def _check_eqma(n: int, r: int, i: int) -> list[Witness]:
    if i == r * n:
        raise IndexExcluded(f"i = rn = {i} is excluded")
    lhs = sum((q_binomial_r(n, k, r) * eulerian_number(k, r * n - i - 1, r) for k in range(n + 1)), ZERO)
    rhs = sum((q_binomial_r(n, k, r) * eulerian_number(k, i - 1, r) for k in range(n + 1)), ZERO)
    return _compare({"n": n, "r": r, "i": i}, lhs, rhs)


def _check_root(n: int, d: int) -> list[Witness]:
    lhs, rhs = root_specialization_pair(n, d)
    return _compare({"n": n, "d": d}, lhs, rhs)


def _cgk_side(total: int, degree: int) -> int:
    """sum_k C(total, k) sum_{i+j=degree} C(k, i) A_{k,j}."""
    return sum(
        math.comb(total, k) * math.comb(k, i) * classical_eulerian(k, degree - i)
        for k in range(total + 1)
        for i in range(degree + 1)
    )


def _check_cgk(c: int, d: int) -> list[Witness]:
    params = {"c": c, "d": d}
    witnesses = _compare(params, _cgk_side(c + d, 2 * c - 1), _cgk_side(c + d, 2 * d - 1), note="C(c+d, k), i + j = 2c - 1")
    witnesses += _compare(
        params, _cgk_side(c + d - 1, 2 * (c - 1)), _cgk_side(c + d - 1, 2 * (d - 1)), note="C(c+d-1, k), i + j = 2(c - 1)"
    )
    return witnesses


def _check_equidist(n: int) -> list[Witness]:
    params = {"n": n}
    recurrence = eulerian_tq(n)
    witnesses = _compare(params, recurrence, distribution(n, "maj-exc"), note="recurrence vs (maj - exc, exc)")
    witnesses += _compare(params, recurrence, distribution(n, "inv-lec"), note="recurrence vs (inv - lec, lec)")
    for perm in permutations(n):
        fact = hook_factorize(perm)
        witnesses += _compare(
            params, inversions(perm.letters) - fact.lec(), partition_inv(fact.content()), note=f"inv - lec of {perm}"
        )
    return witnesses


def _check_symmetry(n: int, r: int) -> list[Witness]:
    params = {"n": n, "r": r}
    row = eulerian_tq(n, r)
    top = r * n - 1
    mirrored = TQPoly(row.coefficient(top - k) for k in range(top + 1))
    witnesses = _compare(params, row, mirrored, note="palindromic row")
    witnesses += _compare(params, row.at_t_one().evaluate(1), r ** n * math.factorial(n), note="value at t = q = 1")
    if any(x < 0 for c in row.tcoeffs for x in c.coeffs):
        witnesses.append(Witness(params=params, lhs=encode(row), rhs="nonnegative coefficients", note="sign"))
    return witnesses


def _check_qmul(n: int) -> list[Witness]:
    witnesses: list[Witness] = []
    for parts in compositions(n):
        exponents = [partition_inv(p) for p in ordered_set_partitions(range(1, n + 1), parts)]
        by_enumeration = sum((QPoly.monomial(e) for e in exponents), ZERO)
        witnesses += _compare({"n": n}, q_multinomial(n, parts), by_enumeration, note=f"parts {list(parts)}")
    return witnesses


def _check_parity(n: int) -> list[Witness]:
    witnesses: list[Witness] = []
    for k in range(n + 1):
        params = {"n": n, "k": k}
        even = eval_at_root(q_binomial(2 * n, 2 * k), 2).as_integer()
        witnesses += _compare(params, even, math.comb(n, k), note="[2n 2k] at q = -1")
        if 2 * k + 1 <= 2 * n:
            odd = eval_at_root(q_binomial(2 * n, 2 * k + 1), 2).as_integer()
            witnesses += _compare(params, odd, 0, note="[2n 2k+1] at q = -1")
    return witnesses


def _check_lemma2(n: int) -> list[Witness]:
    witnesses: list[Witness] = []
    for perm in permutations(n):
        image = lemma2_involution(perm)
        lec_pi, lec_sigma = hook_factorize(perm).lec(), hook_factorize(image).lec()
        params = {"n": n}
        witnesses += _compare(params, str(lemma2_involution(image)), str(perm), note=f"involution at {perm}")
        witnesses += _compare(params, lec_sigma, n - 1 - lec_pi, note=f"lec complement at {perm}")
        witnesses += _compare(
            params,
            inversions(image.letters) - lec_sigma,
            inversions(perm.letters) - lec_pi,
            note=f"inv - lec at {perm}",
        )
    return witnesses


def _check_lemma3(n: int) -> list[Witness]:
    witnesses: list[Witness] = []
    for s in range(n + 1):
        rhs = sum((q_binomial(n, k) * eulerian_number(k, s) for k in range(n + 1)), ZERO)
        witnesses += _compare({"n": n, "s": s}, two_pix_gf(n, s), rhs)
    return witnesses


def _check_lemma4(n: int) -> list[Witness]:
    witnesses: list[Witness] = []
    for v in enumerate_two_pix(n):
        s = v.lec()
        if s > n - 2:
            continue
        u = lemma4_map(v)
        params = {"n": n, "s": s}
        witnesses += _compare(params, u.lec(), n - 2 - s, note=f"lec complement at {v}")
        witnesses += _compare(params, u.inv_minus_lec(), v.inv_minus_lec(), note=f"inv - lec at {v}")
        witnesses += _compare(params, str(lemma4_map(u)), str(v), note=f"involution at {v}")
    return witnesses


def _check_prop(n: int, r: int) -> list[Witness]:
    return _compare({"n": n, "r": r}, colored_distribution(n, r), eulerian_tq(n, r))


def _check_colored_lemma3(n: int, r: int) -> list[Witness]:
    witnesses: list[Witness] = []
    for s in range(r * n + 1):
        rhs = sum((q_binomial_r(n, k, r) * eulerian_number(k, s, r) for k in range(n + 1)), ZERO)
        witnesses += _compare({"n": n, "r": r, "s": s}, two_pix_colored_gf(n, r, s), rhs)
    return witnesses


def _check_th5(n: int, r: int) -> list[Witness]:
    witnesses: list[Witness] = []
    size = r * n
    for v in enumerate_two_pix_colored(n, r):
        s = v.lec_r()
        if s > size - 2:
            continue
        u = th5_map(v)
        params = {"n": n, "r": r, "s": s}
        witnesses += _compare(params, u.lec_r(), size - 2 - s, note=f"lec_r complement at {v}")
        witnesses += _compare(params, u.inv_r() - u.lec_r(), v.inv_r() - s, note=f"inv_r - lec_r at {v}")
        witnesses += _compare(params, str(th5_map(u)), str(v), note=f"involution at {v}")
    return witnesses


# public single-tuple checkers


def verify_th1(a: int, b: int) -> VerificationReport:
    """
    sum_k [a+b k] A_{k,a-1} = sum_k [a+b k] A_{k,b-1}.

    >>> verify_th1(1, 2).status.value
    'pass'
    """
    return _report(IdentityId.th1, {"a": a, "b": b}, 1, _check_th1(a, b))


def verify_coeff_identity(n: int, i: int, r: int = 1) -> VerificationReport:
    """The coefficient of t^i in the cleared generating function: 1 at i = 0, -1 at i = rn, else 0."""
    return _report(IdentityId.coeff, {"n": n, "i": i, "r": r}, 1, _check_coeff(n, i, r))


def verify_rs_multline(n: int, i: int) -> VerificationReport:
    """The Rogers-Szego weighted form of the coefficient identity."""
    return _report(IdentityId.rs, {"n": n, "i": i}, 1, _check_rs(n, i))


def verify_eq_ma(n: int, r: int, i: int) -> VerificationReport:
    """sum_k [n k]_{q^r} A^(r)_{k,rn-i-1} = sum_k [n k]_{q^r} A^(r)_{k,i-1}; i = rn raises IndexExcluded."""
    return _report(IdentityId.eqma, {"n": n, "r": r, "i": i}, 1, _check_eqma(n, r, i))


def verify_root_specialization(n: int, d: int) -> VerificationReport:
    return _report(IdentityId.root, {"n": n, "d": d}, 1, _check_root(n, d))


def verify_cgk_qm1(c: int, d: int) -> VerificationReport:
    """Both binomial-Eulerian symmetries in c and d, over classical Eulerian numbers."""
    return _report(IdentityId.cgk, {"c": c, "d": d}, 1, _check_cgk(c, d))


def verify_equidistribution(n: int) -> VerificationReport:
    return _report(IdentityId.equidist, {"n": n}, 1, _check_equidist(n))


def verify_symmetry(n: int, r: int = 1) -> VerificationReport:
    return _report(IdentityId.symmetry, {"n": n, "r": r}, 1, _check_symmetry(n, r))


def verify_qmultinomial(n: int) -> VerificationReport:
    return _report(IdentityId.qmul, {"n": n}, 1, _check_qmul(n))


def verify_qbinomial_parity(n: int) -> VerificationReport:
    return _report(IdentityId.parity, {"n": n}, 1, _check_parity(n))


def verify_lemma2(n: int) -> VerificationReport:
    return _report(IdentityId.lemma2, {"n": n}, 1, _check_lemma2(n))


def verify_lemma3(n: int) -> VerificationReport:
    return _report(IdentityId.lemma3, {"n": n}, 1, _check_lemma3(n))


def verify_lemma4(n: int) -> VerificationReport:
    return _report(IdentityId.lemma4, {"n": n}, 1, _check_lemma4(n))


def verify_colored_distribution(n: int, r: int) -> VerificationReport:
    return _report(IdentityId.prop, {"n": n, "r": r}, 1, _check_prop(n, r))


def verify_colored_lemma3(n: int, r: int) -> VerificationReport:
    return _report(IdentityId.colored_lemma3, {"n": n, "r": r}, 1, _check_colored_lemma3(n, r))


def verify_th5(n: int, r: int) -> VerificationReport:
    return _report(IdentityId.th5, {"n": n, "r": r}, 1, _check_th5(n, r))


# sweeps


def _colored_pairs(bound: int, max_r: int, start: int = 1) -> list[tuple[int, int]]:
    return [(n, r) for r in range(1, max_r + 1) for n in range(start, bound // r + 1)]


def _cases(identity: IdentityId, bound: int, max_r: int) -> tuple[Callable[..., list[Witness]], list[tuple[int, ...]]]:
    if identity == IdentityId.th1:
        return _check_th1, [(a, s - a) for s in range(2, bound + 1) for a in range(1, s)]
    if identity == IdentityId.coeff:
        return _check_coeff, [(n, i, r) for n, r in _colored_pairs(bound, max_r, start=0) for i in range(r * n + 1)]
    if identity == IdentityId.rs:
        return _check_rs, [(n, i) for n in range(bound + 1) for i in range(n + 1)]
    if identity == IdentityId.eqma:
        return _check_eqma, [(n, r, i) for n, r in _colored_pairs(bound, max_r) for i in range(1, r * n)]
    if identity == IdentityId.root:
        return _check_root, [(n, d) for n in range(1, bound + 1) for d in range(1, n + 1) if n % d == 0]
    if identity == IdentityId.cgk:
        return _check_cgk, [(c, s - c) for s in range(2, bound + 1) for c in range(1, s)]
    if identity == IdentityId.symmetry:
        return _check_symmetry, _colored_pairs(bound, max_r)
    if identity == IdentityId.prop:
        return _check_prop, _colored_pairs(bound, max_r)
    if identity == IdentityId.colored_lemma3:
        return _check_colored_lemma3, _colored_pairs(bound, max_r)
    if identity == IdentityId.th5:
        return _check_th5, _colored_pairs(bound, max_r)
    single = {
        IdentityId.equidist: _check_equidist,
        IdentityId.qmul: _check_qmul,
        IdentityId.parity: _check_parity,
        IdentityId.lemma2: _check_lemma2,
        IdentityId.lemma3: _check_lemma3,
        IdentityId.lemma4: _check_lemma4,
    }
    return single[identity], [(n,) for n in range(1, bound + 1)]


def sweep(identity: IdentityId, bound: int, max_r: int = 3, threads: int = 1) -> VerificationReport:
    """Check every parameter tuple of a family up to ``bound``; a bound of 0 is a skipped report."""
    identity = IdentityId(identity)
    params = {"bound": bound, "max_r": max_r}
    if bound <= 0:
        return VerificationReport(identity_id=identity, params=params, status=Status.skipped)
    check, cases = _cases(identity, bound, max_r)
    with start_action(action_type="verify_sweep", identity=identity.value, bound=bound, max_r=max_r, cases=len(cases)) as action:
        results = _run(check, cases, threads)
        witnesses = [w for found in results for w in found]
        action.add_success_fields(witnesses=len(witnesses))
    return _report(identity, params, len(cases), witnesses)


def _guarded(check: Callable[..., list[Witness]], case: tuple[int, ...]) -> list[Witness]:
    """Run one case; a library error becomes a witness so the sweep carries on."""
    try:
        return check(*case)
    except QEulerianError as e:
        params = dict(zip(inspect.signature(check).parameters, case))
        return [Witness(params=params, lhs=type(e).__name__, rhs=None, note=str(e))]


def _run(check: Callable[..., list[Witness]], cases: Iterable[tuple[int, ...]], threads: int) -> list[list[Witness]]:
    if threads <= 1:
        return [_guarded(check, case) for case in cases]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda case: _guarded(check, case), cases))



def verify_all(budget: Optional[SweepBudget] = None, threads: int = 1) -> list[VerificationReport]:
    """Every family in declaration order under ``budget`` (the default budget when omitted)."""
    budget = budget or SweepBudget()
    with start_action(action_type="verify_all", budget=budget.model_dump(), threads=threads) as action:
        reports = [sweep(identity, budget.bound(identity), budget.max_r, threads) for identity in IdentityId]
        action.add_success_fields(failed=[r.identity_id.value for r in reports if not r.passed])
        return reports
