import pytest
from pydantic import ValidationError

import qeulerian.verifier as verifier
from qeulerian.errors import DivisionNotExact, IndexExcluded, NotDivisor
from qeulerian.eulerian import eulerian_number
from qeulerian.polyring import QPoly
from qeulerian.qfunctions import q_binomial
from qeulerian.verifier import (
    IdentityId,
    Status,
    SweepBudget,
    VerificationReport,
    Witness,
    sweep,
    verify_all,
    verify_cgk_qm1,
    verify_coeff_identity,
    verify_eq_ma,
    verify_root_specialization,
    verify_rs_multline,
    verify_th1,
)

# Acceptance bounds per family: n, a+b, c+d or rn as the family defines it.
ACCEPTANCE_BOUNDS = [
    (IdentityId.th1, 8),
    (IdentityId.coeff, 8),
    (IdentityId.rs, 7),
    (IdentityId.eqma, 8),
    (IdentityId.root, 8),
    (IdentityId.cgk, 8),
    (IdentityId.equidist, 8),
    (IdentityId.symmetry, 9),
    (IdentityId.qmul, 7),
    (IdentityId.parity, 6),
    (IdentityId.lemma2, 8),
    (IdentityId.lemma3, 7),
    (IdentityId.lemma4, 7),
    (IdentityId.prop, 8),
    (IdentityId.colored_lemma3, 7),
    (IdentityId.th5, 6),
]


def test_th1_hand_expanded_instance():
    """a=1, b=2: both sides equal 3 + 2q + 2q^2."""
    lhs = sum((q_binomial(3, k) * eulerian_number(k, 0) for k in range(4)), QPoly())
    assert lhs == QPoly((3, 2, 2))
    report = verify_th1(1, 2)
    assert report.status == Status.passed
    assert report.params == {"a": 1, "b": 2}
    assert verify_th1(3, 3).passed
    assert verify_th1(1, 3).passed


def test_coefficient_identity_cases():
    assert verify_coeff_identity(2, 0).passed
    assert verify_coeff_identity(0, 0).passed
    assert verify_coeff_identity(3, 1).passed
    assert verify_coeff_identity(3, 3).passed
    assert verify_coeff_identity(2, 4, r=2).passed
    assert verify_coeff_identity(1, 1, r=2).passed


def test_rogers_szego_cases():
    """n=2, i=1 has both sides 3 + 2q; indices outside [0, n] are trivially fine."""
    assert verify_rs_multline(2, 1).passed
    assert verify_rs_multline(3, 3).passed
    assert verify_rs_multline(2, 5).passed


def test_eq_ma_cases():
    assert verify_eq_ma(1, 2, 1).passed
    assert verify_eq_ma(2, 2, 2).passed
    with pytest.raises(IndexExcluded):
        verify_eq_ma(2, 1, 2)


def test_eq_ma_reduces_to_th1_for_one_color():
    for n in range(2, 7):
        for i in range(1, n):
            assert verify_eq_ma(n, 1, i).passed == verify_th1(i, n - i).passed is True


def test_root_specialization_cases():
    assert verify_root_specialization(4, 2).passed
    assert verify_root_specialization(6, 3).passed
    assert verify_root_specialization(5, 1).passed
    with pytest.raises(NotDivisor):
        verify_root_specialization(4, 3)


def test_cgk_hand_expanded_instance():
    """c=1, d=2: both sides of the first identity are 19."""
    assert verifier._cgk_side(3, 1) == 19
    assert verifier._cgk_side(3, 3) == 19
    assert verify_cgk_qm1(1, 2).passed
    assert verify_cgk_qm1(2, 1).passed
    assert verify_cgk_qm1(3, 3).passed


@pytest.mark.parametrize("identity,bound", ACCEPTANCE_BOUNDS, ids=[i.value for i, _ in ACCEPTANCE_BOUNDS])
def test_acceptance_sweeps(identity, bound):
    """Every family holds exactly over its acceptance range."""
    report = sweep(identity, bound, max_r=3)
    assert report.status == Status.passed, report.witnesses[:3]
    assert report.checked > 0


def test_zero_bound_is_skipped():
    report = sweep(IdentityId.th1, 0)
    assert report.status == Status.skipped
    assert report.passed
    reports = verify_all(SweepBudget.uniform(0))
    assert [r.identity_id for r in reports] == list(IdentityId)
    assert all(r.status == Status.skipped for r in reports)


def test_verify_all_small_budget():
    reports = verify_all(SweepBudget.uniform(4, max_r=2))
    assert [r.identity_id for r in reports] == list(IdentityId)
    assert all(r.status == Status.passed for r in reports)


def test_threads_do_not_change_reports():
    one = sweep(IdentityId.eqma, 6, max_r=3, threads=1)
    four = sweep(IdentityId.eqma, 6, max_r=3, threads=4)
    assert one.model_dump_json() == four.model_dump_json()


def test_injected_fault_produces_witness(monkeypatch):
    """Perturbing A_{3,1} breaks a=1, b=2 and the witness carries both evaluated sides."""
    exact = verifier.eulerian_number

    def perturbed(n, k, r=1):
        value = exact(n, k, r)
        return value + 1 if (n, k, r) == (3, 1, 1) else value

    monkeypatch.setattr(verifier, "eulerian_number", perturbed)
    report = verify_th1(1, 2)
    assert report.status == Status.failed
    witness = report.witnesses[0]
    assert witness.params == {"a": 1, "b": 2}
    assert witness.lhs == [3, 2, 2]
    assert witness.rhs == [4, 2, 2]

    swept = sweep(IdentityId.th1, 4)
    assert not swept.passed
    assert {"a": 1, "b": 2} in [w.params for w in swept.witnesses]


def test_report_status_must_match_witnesses():
    witness = Witness(params={"n": 1}, lhs=[1], rhs=[2])
    with pytest.raises(ValidationError):
        VerificationReport(identity_id="th1", status="pass", witnesses=[witness])
    with pytest.raises(ValidationError):
        VerificationReport(identity_id="th1", status="fail", witnesses=[])
    report = VerificationReport(identity_id="th1", status="fail", witnesses=[witness])
    assert not report.passed


def test_budget_model():
    budget = SweepBudget.uniform(5, max_r=2)
    assert budget.bound(IdentityId.th5) == 5
    assert budget.max_r == 2
    with pytest.raises(ValidationError):
        SweepBudget(th1=-1)


def test_checker_errors_become_witnesses(monkeypatch):
    """A library error inside one case is reported for that case and the sweep carries on."""
    exact = verifier.eulerian_number

    def broken(n, k, r=1):
        if (n, k, r) == (3, 1, 1):
            raise DivisionNotExact("injected remainder")
        return exact(n, k, r)

    monkeypatch.setattr(verifier, "eulerian_number", broken)
    report = sweep(IdentityId.th1, 4)
    assert report.status == Status.failed
    assert report.checked == 6
    errors = [w for w in report.witnesses if w.lhs == "DivisionNotExact"]
    assert {"a": 1, "b": 2} in [w.params for w in errors]
    assert all(w.note == "injected remainder" for w in errors)

    reports = verify_all(SweepBudget.uniform(3, max_r=1))
    assert [r.identity_id for r in reports] == list(IdentityId)
    assert reports[0].status == Status.failed


def test_rogers_szego_at_n_zero():
    assert verify_rs_multline(0, 0).passed
    assert sweep(IdentityId.rs, 1).checked == 3
