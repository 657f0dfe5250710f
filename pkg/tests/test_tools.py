import pytest

from qeulerian.server import QEulerianMCP
from qeulerian.tools_api import EulerianTools, HookTools, VerifierTools


@pytest.fixture
def mcp_server():
    """Fixture providing a QEulerianMCP server instance for testing."""
    return QEulerianMCP()


@pytest.fixture
def eulerian_tools(mcp_server):
    return EulerianTools(mcp_server, prefix="test_", max_n=6)


@pytest.fixture
def hook_tools(mcp_server):
    return HookTools(mcp_server, prefix="test_")


@pytest.fixture
def verifier_tools(mcp_server):
    return VerifierTools(mcp_server, prefix="test_", max_n=6)


def test_server_registers_tool_handlers(mcp_server):
    """The server builds one handler per area with the configured prefix."""
    assert mcp_server.prefix == "qeulerian_"
    assert isinstance(mcp_server.eulerian_tools, EulerianTools)
    assert isinstance(mcp_server.hook_tools, HookTools)
    assert isinstance(mcp_server.verifier_tools, VerifierTools)


def test_eulerian_polynomial(eulerian_tools):
    """This test verifies that the tool returns A_3(t,q) as t-rows of q-coefficients."""
    result = eulerian_tools.eulerian_polynomial(3)
    assert result.coefficients == [[1], [2, 1, 1], [1]]
    assert result.text == "1 + (2 + q + q^2)t + t^2"


def test_eulerian_polynomial_respects_limit(eulerian_tools):
    with pytest.raises(ValueError):
        eulerian_tools.eulerian_polynomial(7)


def test_q_binomial_coefficient(eulerian_tools):
    assert eulerian_tools.q_binomial_coefficient(3, 2).coefficients == [1, 1, 1]
    assert eulerian_tools.q_binomial_coefficient(2, 1, r=2).coefficients == [1, 0, 1]


def test_root_specialization(eulerian_tools):
    result = eulerian_tools.root_specialization(4, 2)
    assert result["equal"] is True
    assert result["lhs"] == [[1], [3], [3], [1]]


def test_hook_factorization(hook_tools):
    """This test verifies the factorization of the 15-letter example and its lec of 7."""
    result = hook_tools.hook_factorization("1,3,4,14,12,2,5,11,15,8,6,7,13,9,10")
    assert result["prefix"] == [1, 3, 4, 14]
    assert result["lec"] == 7


def test_permutation_statistics(hook_tools):
    assert hook_tools.permutation_statistics("132") == {"exc": 1, "des": 1, "maj": 2, "inv": 1, "lec": 1}


def test_apply_map(hook_tools):
    result = hook_tools.apply_map("lemma4", "27|6389|514|")
    assert result.output == "|7,2|9,3,6,8|1,4,5"
    assert (result.lec_before, result.lec_after, result.inv_minus_lec) == (3, 4, 16)
    result = hook_tools.apply_map("lemma2", "2,1")
    assert result.output == "1,2"


def test_apply_map_errors(hook_tools):
    with pytest.raises(ValueError):
        hook_tools.apply_map("lemma9", "1")
    with pytest.raises(ValueError):
        hook_tools.apply_map("lemma4", "|4123|")


def test_verify_identity(verifier_tools):
    reports = verifier_tools.verify_identity("lemma4", max_n=5)
    assert len(reports) == 1
    assert reports[0].passed
    reports = verifier_tools.verify_identity("all", max_n=3, max_r=2)
    assert all(r.passed for r in reports)
    with pytest.raises(ValueError):
        verifier_tools.verify_identity("nope", max_n=3)
    with pytest.raises(ValueError):
        verifier_tools.verify_identity("th1", max_n=20)


def test_q_binomial_coefficient_respects_limit(eulerian_tools):
    with pytest.raises(ValueError):
        eulerian_tools.q_binomial_coefficient(1000, 2)
