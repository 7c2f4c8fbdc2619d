"""Command-line driver: dimensions, brackets and verification suites."""

from __future__ import annotations

import csv
import io
import json
import random
import sys
from typing import List

import click

from . import __version__
from .cache import cached, convention_hash
from .errors import ArtifactError, BudgetExceeded

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET, EXIT_DOMAIN = 0, 1, 2, 3, 4

SUITE_NAMES = ("fbn", "p531", "pdecompgen", "th521", "th91", "th731", "surj", "decomp", "wavy", "gd", "johnson")


def _emit(obj) -> None:
    click.echo(json.dumps(obj, sort_keys=True, default=str))


def _fail(code: int, message: str) -> None:
    click.echo(json.dumps({"error": message}), err=True)
    sys.exit(code)


@click.group()
@click.version_option(__version__)
@click.option("--no-cache", is_flag=True, help="Bypass the on-disk result cache.")
@click.pass_context
def main(ctx: click.Context, no_cache: bool) -> None:
    """Exact computations with Jacobi diagram spaces."""
    ctx.obj = {"cache": not no_cache}


@main.command("dims")
@click.option("--d", "d", type=click.IntRange(min=1), required=True)
@click.option("--k", "k", type=click.IntRange(min=0), required=True)
@click.option("--n", "n", type=click.IntRange(min=1), default=None)
@click.option("--connected", is_flag=True)
@click.option("--budget", type=click.IntRange(min=1), default=None, help="Spanning-diagram budget for A_d(n).")
@click.pass_context
def cmd_dims(ctx: click.Context, d: int, k: int, n, connected: bool, budget) -> None:
    """Dimensions of D_{d,k}, B_{d,k}(n) and A_d(n)."""
    from .arcspace import DEFAULT_BUDGET, ArcSpace
    from .colored import b_space
    from .opendiag import build_space

    def compute():
        out = {"d": d, "k": k, "n": n, "connected": connected}
        key = "dim_Dc" if connected else "dim_D"
        out[key] = build_space(d, k, connected).dimension if 2 * d - k >= 1 else 0
        if n is not None:
            out["dim_B"] = b_space(d, k, n, connected).dimension if 2 * d - k >= 1 else 0
            if d <= 3 and not connected:
                out["dim_A"] = ArcSpace(d, n, budget or DEFAULT_BUDGET).dimension
        return out

    try:
        _emit(cached("dims", {"d": d, "k": k, "n": n, "connected": connected, "budget": budget},
                     compute, ctx.obj["cache"]))
    except BudgetExceeded as exc:
        _fail(EXIT_BUDGET, str(exc))


@main.command("bracket")
@click.option("--d", "d", type=click.IntRange(min=1), required=True)
@click.option("--k", "k", type=click.IntRange(min=0), required=True)
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--endo", "endo_file", type=click.File("r"), required=True)
@click.option("--element", "element_file", type=click.File("r"), required=True)
@click.option("--r", "r", type=click.IntRange(min=1), default=None,
              help="Filtration degree of the endomorphism (default: its Andreadakis level).")
def cmd_bracket(d: int, k: int, n: int, endo_file, element_file, r) -> None:
    """Graded bracket of an element of B_{d,k}(n) with an endomorphism."""
    from .colored import b_element_from_json, b_element_to_json, b_space, bracket_beta
    from .johnson import Endo, andreadakis_level

    try:
        f = Endo.from_json(endo_file.read())
        if f.n != n:
            raise ArtifactError(f"endomorphism has rank {f.n}, expected {n}")
        src = b_space(d, k, n)
        u = b_element_from_json(element_file.read(), src)
        top = 2 * d - k
        if r is None:
            r = min(int(andreadakis_level(f, top)), top)
            if r < 1:
                raise ArtifactError("endomorphism is not in IA(n)")
        elif andreadakis_level(f, r) < r:
            raise ArtifactError(f"endomorphism is not in filtration degree {r}")
        out = {} if k + r > 2 * d - 1 else bracket_beta(u, f, r, src)
    except (ArtifactError, ValueError, KeyError) as exc:
        _fail(EXIT_DOMAIN, str(exc))
    header = {"convention": "[u, f] = (-1)^r c(u ⊗ Φτ_r(f))", "d": d, "k": k, "n": n, "r": r,
              "target": f"B_{{{d},{k + r}}}({n})", "convention_hash": convention_hash()}
    click.echo(json.dumps(header, sort_keys=True))
    click.echo(b_element_to_json(out))


def _suite_kwargs(suite: str, max_d, d, n, samples, seed) -> dict:
    kw = {}
    if suite in ("fbn", "p531", "pdecompgen", "th521", "th731", "surj", "gd") and max_d is not None:
        kw["max_d"] = max_d
    if suite == "th91":
        if d is not None:
            kw["d"] = d
        if n:
            kw["ns"] = tuple(n)
        if samples is not None:
            kw["samples"] = samples
        kw["seed"] = seed
    if suite == "th731":
        if n:
            kw["ns"] = tuple(n)
        kw["seed"] = seed
    if suite == "th521" and n:
        kw["ns"] = tuple(n)
    if suite == "wavy" and n:
        kw["ns"] = tuple(n)
    if suite == "johnson":
        kw["seed"] = seed
        if samples is not None:
            kw["samples"] = samples
    return kw


def _render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, default=str)
    rows = [[c["id"], c["status"], c["expected"], c["actual"], c["millis"]] for c in report["cases"]]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "status", "expected", "actual", "millis"])
        w.writerows(rows)
        return buf.getvalue().rstrip("\n")
    width = max((len(str(r[0])) for r in rows), default=2)
    lines = [f"{'id'.ljust(width)}  status  expected | actual"]
    for r in rows:
        lines.append(f"{str(r[0]).ljust(width)}  {r[1]:<6}  {r[2]} | {r[3]}")
    return "\n".join(lines)


@main.command("verify")
@click.argument("suite", type=click.Choice(SUITE_NAMES))
@click.option("--max-d", type=click.IntRange(min=1), default=None)
@click.option("--d", "d", type=click.IntRange(min=1), default=None)
@click.option("--n", "n", type=click.IntRange(min=1), multiple=True)
@click.option("--samples", type=click.IntRange(min=1), default=None)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--format", "fmt", type=click.Choice(("json", "csv", "table")), default="json", show_default=True)
@click.pass_context
def cmd_verify(ctx: click.Context, suite: str, max_d, d, n, samples, seed: int, fmt: str) -> None:
    """Run a verification suite; exit 1 if any case fails."""
    from .suites import SUITES

    kw = _suite_kwargs(suite, max_d, d, n, samples, seed)
    random.seed(seed)
    try:
        cases: List[dict] = cached(f"verify:{suite}", {"kwargs": kw, "version": __version__},
                                   lambda: SUITES[suite](**kw), ctx.obj["cache"])
    except ArtifactError as exc:
        _fail(EXIT_DOMAIN, str(exc))
    report = {"suite": suite, "cases": cases, "convention_hash": convention_hash(), "version": __version__}
    click.echo(_render(report, fmt))
    sys.exit(EXIT_FAIL if any(c["status"] == "fail" for c in cases) else EXIT_PASS)


if __name__ == "__main__":
    main()
