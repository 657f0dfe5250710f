#!/usr/bin/env python3
"""qeulerian MCP server - q-Eulerian polynomial tools over stdio."""

import os
from pathlib import Path

import typer
from fastmcp import FastMCP

from qeulerian.tools_api import DEFAULT_MAX_N, EulerianTools, HookTools, VerifierTools

# Configuration
DEFAULT_PREFIX = os.getenv("QEULERIAN_MCP_PREFIX", "qeulerian_")


class QEulerianMCP(FastMCP):
    """MCP server exposing q-Eulerian computations; subclass it to add tools."""

    def __init__(
        self,
        name: str = "qeulerian MCP Server",
        prefix: str = DEFAULT_PREFIX,
        max_n: int = DEFAULT_MAX_N,
        **kwargs
    ):
        super().__init__(name=name, **kwargs)
        self.prefix = prefix
        self.max_n = max_n
        self._register_qeulerian_tools()

    def _register_qeulerian_tools(self):
        self.eulerian_tools = EulerianTools(self, self.prefix, self.max_n)
        self.hook_tools = HookTools(self, self.prefix)
        self.verifier_tools = VerifierTools(self, self.prefix, self.max_n)

        self.eulerian_tools.register_tools()
        self.hook_tools.register_tools()
        self.verifier_tools.register_tools()


app = typer.Typer(help="qeulerian MCP Server - q-Eulerian polynomials, hook factorizations and identity checks")


@app.command("stdio")
def cli_app_stdio_command(
    prefix: str = typer.Option(DEFAULT_PREFIX, "--prefix", help="Prefix for tool names"),
    max_n: int = typer.Option(DEFAULT_MAX_N, "--max-n", help="Largest n a tool will compute"),
) -> None:
    """Run the MCP server with stdio transport."""
    mcp = QEulerianMCP(prefix=prefix, max_n=max_n)
    mcp.run(transport="stdio")


def cli_app_stdio() -> None:
    """Standalone function for the qeulerian-mcp and stdio scripts."""
    mcp = QEulerianMCP()
    mcp.run(transport="stdio")


if __name__ == "__main__":
    from pycomfort.logging import to_nice_stdout, to_nice_file

    to_nice_stdout()
    project_root = Path(__file__).resolve().parents[2]
    log_dir = project_root / "logs"
    log_dir.mkdir(parents=True, exist_ok=True)

    json_log_path = log_dir / "mcp_server.log.json"
    rendered_log_path = log_dir / "mcp_server.log"

    to_nice_file(output_file=json_log_path, rendered_file=rendered_log_path)
    app()
