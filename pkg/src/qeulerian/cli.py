"""qeulerian command line: compute rows, factor words, apply the bijections, enumerate and verify.

Exit codes: 0 success, 1 a verification found a counterexample, 2 usage or input error.
"""
from __future__ import annotations

import csv
import io
from contextlib import contextmanager
from dataclasses import asdict
from enum import Enum
from pathlib import Path
from typing import Any, Iterator, Literal, Optional

import typer
from eliot import start_action
from pydantic import BaseModel, Field

from qeulerian.errors import QEulerianError
from qeulerian.eulerian import eulerian_tq
from qeulerian.hookmaps import (
    TwoPix,
    TwoPixColored,
    enumerate_colored,
    enumerate_two_pix,
    enumerate_two_pix_colored,
    lemma2_involution,
    lemma4_map,
    literal_colored_inv,
    parse_two_pix,
    parse_two_pix_colored,
    parse_word,
    th5_map,
)
from qeulerian.permstats import Perm, hook_factorize, inversions, stats as perm_stats
from qeulerian.verifier import IdentityId, SweepBudget, VerificationReport, sweep, verify_all

SCHEMA_VERSION = "1.0"


class OutputFormat(str, Enum):
    json = "json"
    csv = "csv"


class MapKind(str, Enum):
    lemma2 = "lemma2"
    lemma4 = "lemma4"
    th5 = "th5"


class EnumerateKind(str, Enum):
    twopix = "twopix"
    colored = "colored"


class OutputDocument(BaseModel):
    schema_version: str = Field(SCHEMA_VERSION, description="Version of this document layout")
    kind: Literal["table", "report", "object"] = Field(..., description="What the payload holds")
    payload: dict[str, Any] = Field(..., description="Polynomials as ascending coefficient arrays, t outer and q inner")


class CliSettings(BaseModel):
    format: OutputFormat = OutputFormat.json


app = typer.Typer(help="q-Eulerian polynomials, hook factorizations and identity verification", no_args_is_help=True)


@app.callback()
def main(
    ctx: typer.Context,
    output_format: OutputFormat = typer.Option(OutputFormat.json, "--format", help="json, or csv for tables"),
    log_dir: Optional[Path] = typer.Option(None, "--log-dir", help="Write eliot logs (json and rendered) here"),
) -> None:
    """Global options; they go before the command name."""
    if log_dir is not None:
        from pycomfort.logging import to_nice_file

        log_dir.mkdir(parents=True, exist_ok=True)
        to_nice_file(output_file=log_dir / "qeulerian.log.json", rendered_file=log_dir / "qeulerian.log")
    ctx.obj = CliSettings(format=output_format)


@contextmanager
def _command(action_type: str, **fields: Any) -> Iterator[None]:
    """Log the command as an eliot action and turn library errors into exit code 2."""
    try:
        with start_action(action_type=action_type, **fields):
            yield
    except (QEulerianError, ValueError) as e:
        typer.echo(f"error: {e}", err=True)
        raise typer.Exit(code=2) from e


def _settings(ctx: typer.Context) -> CliSettings:
    return ctx.obj if isinstance(ctx.obj, CliSettings) else CliSettings()


def _emit(ctx: typer.Context, document: OutputDocument, csv_rows: Optional[list[list[Any]]] = None) -> None:
    if _settings(ctx).format == OutputFormat.csv:
        if csv_rows is None:
            raise QEulerianError(f"csv output is only available for tables, not for a {document.kind}")
        buffer = io.StringIO()
        csv.writer(buffer, lineterminator="\n").writerows(csv_rows)
        typer.echo(buffer.getvalue(), nl=False)
        return
    typer.echo(document.model_dump_json(indent=2))


def _word_summary(word: Any) -> dict[str, Any]:
    if isinstance(word, TwoPixColored):
        lec = word.lec_r()
        return {"lec": lec, "inv": word.inv_r(), "inv_minus_lec": word.inv_r() - lec, "literal_inv": literal_colored_inv(word)}
    if isinstance(word, TwoPix):
        return {"lec": word.lec(), "inv": word.inv(), "inv_minus_lec": word.inv_minus_lec()}
    lec = hook_factorize(word).lec()
    inv = inversions(word.letters)
    return {"lec": lec, "inv": inv, "inv_minus_lec": inv - lec}


@app.command("eulerian")
def eulerian_cmd(
    ctx: typer.Context,
    n: int = typer.Option(..., "--n", min=0, help="Row index"),
    r: int = typer.Option(1, "--r", min=1, help="Number of colors"),
) -> None:
    """Print A_n^(r)(t,q) as rows of q-coefficients, one row per power of t."""
    with _command("cli_eulerian", n=n, r=r):
        rows = eulerian_tq(n, r).to_rows()
        width = max((len(row) for row in rows), default=0)
        header = ["t_power"] + [f"q^{j}" for j in range(width)]
        table = [header] + [[k] + row + [0] * (width - len(row)) for k, row in enumerate(rows)]
        payload = {"n": n, "r": r, "variables": ["t", "q"], "coefficients": rows}
        _emit(ctx, OutputDocument(kind="table", payload=payload), table)


@app.command("hookfact")
def hookfact_cmd(ctx: typer.Context, word: str = typer.Argument(..., help="Word such as 1,3,4,14,12,2")) -> None:
    """Hook factorization p tau_1 ... tau_r of a word and its lec."""
    with _command("cli_hookfact", word=word):
        perm = Perm(parse_word(word))
        fact = hook_factorize(perm)
        payload = {
            "word": list(perm.letters),
            "prefix": list(fact.prefix),
            "hooks": [list(h) for h in fact.hooks],
            "lec": fact.lec(),
        }
        _emit(ctx, OutputDocument(kind="object", payload=payload))


@app.command("stats")
def stats_cmd(ctx: typer.Context, word: str = typer.Argument(..., help="Permutation of 1..n")) -> None:
    """exc, des, maj, inv and lec of a permutation."""
    with _command("cli_stats", word=word):
        perm = Perm(parse_word(word))
        record = perm_stats(perm)
        payload = {"word": list(perm.letters), **asdict(record), "lec": hook_factorize(perm).lec()}
        _emit(ctx, OutputDocument(kind="object", payload=payload))


@app.command("map")
def map_cmd(
    ctx: typer.Context,
    kind: MapKind = typer.Argument(..., help="lemma2 (permutation), lemma4 (two-pix) or th5 (colored two-pix)"),
    obj: str = typer.Argument(..., help="e.g. 2,1,3 or 27|6389|514| or 1^1,1^2|"),
) -> None:
    """Apply one of the lec-complementing maps and report the statistics before and after."""
    with _command("cli_map", kind=kind.value, obj=obj):
        if kind == MapKind.lemma2:
            source: Any = Perm(parse_word(obj))
            image: Any = lemma2_involution(source)
        elif kind == MapKind.lemma4:
            source = parse_two_pix(obj)
            image = lemma4_map(source)
        else:
            source = parse_two_pix_colored(obj)
            image = th5_map(source)
        payload = {
            "kind": kind.value,
            "input": str(source),
            "output": str(image),
            "before": _word_summary(source),
            "after": _word_summary(image),
        }
        _emit(ctx, OutputDocument(kind="object", payload=payload))


@app.command("enumerate")
def enumerate_cmd(
    ctx: typer.Context,
    kind: EnumerateKind = typer.Argument(..., help="twopix or colored"),
    n: int = typer.Option(..., "--n", min=1, help="Size of the ground set [n]"),
    r: int = typer.Option(1, "--r", min=1, help="Number of colors; twopix with r > 1 lists colored two-pix words"),
    s: Optional[int] = typer.Option(None, "--s", help="Keep only objects with this lec"),
) -> None:
    """List two-pix-permutations, two-pix-r-colored words or pix-r-colored words with their statistics."""
    with _command("cli_enumerate", kind=kind.value, n=n, r=r, s=s):
        if kind == EnumerateKind.colored:
            rows = [(str(w), w.lec_r(), w.inv_r()) for w in enumerate_colored(n, r)]
        elif r > 1:
            rows = [(str(v), v.lec_r(), v.inv_r()) for v in enumerate_two_pix_colored(n, r)]
        else:
            rows = [(str(v), v.lec(), v.inv()) for v in enumerate_two_pix(n)]
        if s is not None:
            rows = [row for row in rows if row[1] == s]
        objects = [{"object": text, "lec": lec, "inv_minus_lec": inv - lec} for text, lec, inv in rows]
        payload = {"kind": kind.value, "n": n, "r": r, "s": s, "count": len(objects), "objects": objects}
        table = [["object", "lec", "inv_minus_lec"]] + [[o["object"], o["lec"], o["inv_minus_lec"]] for o in objects]
        _emit(ctx, OutputDocument(kind="table", payload=payload), table)


@app.command("verify")
def verify_cmd(
    ctx: typer.Context,
    identity: str = typer.Argument(..., help=f"One of {', '.join(i.value for i in IdentityId)}, or all"),
    max_n: Optional[int] = typer.Option(None, "--max-n", min=0, help="Sweep bound (n, a+b, c+d or rn); 0 skips"),
    max_r: int = typer.Option(3, "--max-r", min=1, help="Largest color count for colored families"),
    threads: int = typer.Option(1, "--threads", min=1, help="Worker threads for the sweep"),
) -> None:
    """Run an exhaustive identity sweep; exits 1 when a counterexample is found."""
    with _command("cli_verify", identity=identity, max_n=max_n, max_r=max_r, threads=threads):
        if identity == "all":
            budget = SweepBudget(max_r=max_r) if max_n is None else SweepBudget.uniform(max_n, max_r)
            reports: list[VerificationReport] = verify_all(budget, threads)
        else:
            family = IdentityId(identity)
            bound = SweepBudget().bound(family) if max_n is None else max_n
            reports = [sweep(family, bound, max_r, threads)]
        payload = {"reports": [report.model_dump(mode="json") for report in reports]}
        _emit(ctx, OutputDocument(kind="report", payload=payload))
    if not all(report.passed for report in reports):
        raise typer.Exit(code=1)


if __name__ == "__main__":
    app()
