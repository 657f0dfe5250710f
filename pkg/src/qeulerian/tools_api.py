"""MCP tool handlers: one class per area, each registering its documented methods as tools."""
from __future__ import annotations

import os
from dataclasses import asdict
from typing import Any, Optional

from eliot import start_action
from pydantic import BaseModel, Field

from qeulerian.eulerian import eulerian_tq, root_specialization_pair
from qeulerian.hookmaps import (
    lemma2_involution,
    lemma4_map,
    literal_colored_inv,
    parse_two_pix,
    parse_two_pix_colored,
    parse_word,
    th5_map,
)
from qeulerian.permstats import Perm, hook_factorize, inversions, stats
from qeulerian.qfunctions import q_binomial_r
from qeulerian.verifier import IdentityId, SweepBudget, VerificationReport, sweep, verify_all

DEFAULT_MAX_N = int(os.getenv("QEULERIAN_MAX_N", "8"))


class PolynomialResponse(BaseModel):
    variables: list[str] = Field(..., description="Variable order, outermost first")
    coefficients: list[Any] = Field(..., description="Ascending coefficient arrays")
    text: str = Field(..., description="Human readable form")


class MapResponse(BaseModel):
    kind: str = Field(..., description="lemma2, lemma4 or th5")
    input: str = Field(..., description="The object as given, normalized")
    output: str = Field(..., description="Its image")
    lec_before: int = Field(..., description="lec (lec_r for colored objects) of the input")
    lec_after: int = Field(..., description="lec of the image")
    inv_minus_lec: int = Field(..., description="inv - lec, shared by the input and the image")


def _check_n(n: int, max_n: int) -> None:
    if n > max_n:
        raise ValueError(f"n={n} exceeds the server limit QEULERIAN_MAX_N={max_n}")


class EulerianTools:
    """Handler for q-Eulerian polynomial tools."""

    def __init__(self, mcp_server, prefix: str = "", max_n: int = DEFAULT_MAX_N):
        self.mcp_server = mcp_server
        self.prefix = prefix
        self.max_n = max_n

    def eulerian_polynomial(self, n: int, r: int = 1) -> PolynomialResponse:
        """Compute the q-Eulerian polynomial A_n^(r)(t,q).

        r = 1 gives A_n(t,q) = sum over permutations of [n] of q^(maj-exc) t^exc; r > 1 gives the
        r-colored version whose value at t = q = 1 is r^n n!. The result lists one array of
        q-coefficients per power of t, lowest powers first. A_0 is the zero polynomial.
        """
        with start_action(action_type="eulerian_polynomial", n=n, r=r) as action:
            _check_n(n, self.max_n)
            poly = eulerian_tq(n, r)
            action.add_success_fields(t_degree=poly.t_degree())
            return PolynomialResponse(variables=["t", "q"], coefficients=poly.to_rows(), text=str(poly))

    def q_binomial_coefficient(self, n: int, k: int, r: int = 1) -> PolynomialResponse:
        """Gaussian binomial [n k] in the base q^r as ascending q-coefficients; zero when k < 0 or k > n."""
        with start_action(action_type="q_binomial_coefficient", n=n, k=k, r=r):
            _check_n(n, self.max_n)
            poly = q_binomial_r(n, k, r)
            return PolynomialResponse(variables=["q"], coefficients=poly.to_list(), text=str(poly))

    def root_specialization(self, n: int, d: int) -> dict[str, Any]:
        """Evaluate A_n(t,q) at a primitive d-th root of unity and compare with A_{n/d}(t) (1+t+...+t^(d-1))^(n/d).

        Both sides are polynomials in t over Z[q] modulo the d-th cyclotomic polynomial. d must divide n.
        """
        with start_action(action_type="root_specialization", n=n, d=d) as action:
            _check_n(n, self.max_n)
            lhs, rhs = root_specialization_pair(n, d)
            action.add_success_fields(equal=lhs == rhs)
            return {"d": d, "lhs": lhs.to_rows(), "rhs": rhs.to_rows(), "equal": lhs == rhs}

    def register_tools(self):
        self.mcp_server.tool(name=f"{self.prefix}eulerian_polynomial", description=self.eulerian_polynomial.__doc__)(self.eulerian_polynomial)
        self.mcp_server.tool(name=f"{self.prefix}q_binomial_coefficient", description=self.q_binomial_coefficient.__doc__)(self.q_binomial_coefficient)
        self.mcp_server.tool(name=f"{self.prefix}root_specialization", description=self.root_specialization.__doc__)(self.root_specialization)


class HookTools:
    """Handler for hook factorization and bijection tools."""

    def __init__(self, mcp_server, prefix: str = ""):
        self.mcp_server = mcp_server
        self.prefix = prefix

    def hook_factorization(self, word: str) -> dict[str, Any]:
        """Split a word of distinct positive integers into an increasing prefix followed by hooks.

        **Input Format:** comma separated letters ("1,3,4,14,12,2,5"), or digits without separators for
        letters below 10 ("2713"). A hook is x1 > x2 < x3 < ... < xm. lec is the sum of the hooks' inversions.
        """
        with start_action(action_type="hook_factorization", word=word) as action:
            fact = hook_factorize(Perm(parse_word(word)))
            action.add_success_fields(hooks=len(fact.hooks), lec=fact.lec())
            return {"prefix": list(fact.prefix), "hooks": [list(h) for h in fact.hooks], "lec": fact.lec()}

    def permutation_statistics(self, word: str) -> dict[str, int]:
        """Compute exc, des, maj, inv and lec of a permutation of 1..n (same input format as hook_factorization)."""
        with start_action(action_type="permutation_statistics", word=word):
            perm = Perm(parse_word(word))
            return {**asdict(stats(perm)), "lec": hook_factorize(perm).lec()}

    def apply_map(self, kind: str, obj: str) -> MapResponse:
        """Apply a lec-complementing bijection.

        **Kinds:**
        - lemma2: a permutation such as "2,1,3"; lec goes to n-1-lec.
        - lemma4: a two-pix-permutation written p1|hook|...|p2, e.g. "27|6389|514|"; lec goes to n-2-lec.
        - th5: a two-pix-r-colored word with letters value^color, e.g. "1^1,1^2|"; lec goes to rn-2-lec.
        inv - lec is the same before and after.
        """
        with start_action(action_type="apply_map", kind=kind, obj=obj) as action:
            try:
                if kind == "lemma2":
                    perm = Perm(parse_word(obj))
                    image = lemma2_involution(perm)
                    before, after = hook_factorize(perm).lec(), hook_factorize(image).lec()
                    rest = inversions(perm.letters) - before
                    source, target = str(perm), str(image)
                elif kind == "lemma4":
                    v = parse_two_pix(obj)
                    u = lemma4_map(v)
                    before, after, rest = v.lec(), u.lec(), v.inv_minus_lec()
                    source, target = str(v), str(u)
                elif kind == "th5":
                    cv = parse_two_pix_colored(obj)
                    cu = th5_map(cv)
                    before, after = cv.lec_r(), cu.lec_r()
                    rest = cv.inv_r() - before
                    source, target = str(cv), str(cu)
                    action.add_success_fields(literal_inv=literal_colored_inv(cv))
                else:
                    raise ValueError(f"unknown map {kind!r}; expected lemma2, lemma4 or th5")
            except ValueError as e:
                action.log(message_type="error", error=str(e))
                raise ValueError(f"Cannot apply {kind} to {obj!r}: {e}") from e
            return MapResponse(kind=kind, input=source, output=target, lec_before=before, lec_after=after, inv_minus_lec=rest)

    def register_tools(self):
        self.mcp_server.tool(name=f"{self.prefix}hook_factorization", description=self.hook_factorization.__doc__)(self.hook_factorization)
        self.mcp_server.tool(name=f"{self.prefix}permutation_statistics", description=self.permutation_statistics.__doc__)(self.permutation_statistics)
        self.mcp_server.tool(name=f"{self.prefix}apply_map", description=self.apply_map.__doc__)(self.apply_map)


class VerifierTools:
    """Handler for identity verification tools."""

    def __init__(self, mcp_server, prefix: str = "", max_n: int = DEFAULT_MAX_N):
        self.mcp_server = mcp_server
        self.prefix = prefix
        self.max_n = max_n

    def verify_identity(self, identity: str, max_n: Optional[int] = None, max_r: int = 3) -> list[VerificationReport]:
        """Check an identity exactly for every parameter tuple up to a bound and return the reports.

        **Identities:** th1, coeff, rs, eqma, root, cgk, equidist, symmetry, qmul, parity, lemma2,
        lemma3, lemma4, prop, colored_lemma3, th5, or all. max_n bounds n (a+b, c+d or rn for some
        families); max_r bounds the number of colors. A failing report carries witnesses with both sides.
        """
        with start_action(action_type="verify_identity", identity=identity, max_n=max_n, max_r=max_r) as action:
            if max_n is not None:
                _check_n(max_n, self.max_n)
            try:
                if identity == "all":
                    budget = SweepBudget(max_r=max_r) if max_n is None else SweepBudget.uniform(max_n, max_r)
                    reports = verify_all(budget)
                else:
                    family = IdentityId(identity)
                    reports = [sweep(family, SweepBudget().bound(family) if max_n is None else max_n, max_r)]
            except ValueError as e:
                action.log(message_type="error", error=str(e))
                raise ValueError(f"Cannot verify {identity!r}: {e}") from e
            action.add_success_fields(failed=[r.identity_id.value for r in reports if not r.passed])
            return reports

    def register_tools(self):
        self.mcp_server.tool(name=f"{self.prefix}verify_identity", description=self.verify_identity.__doc__)(self.verify_identity)
