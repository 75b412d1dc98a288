"""
Logos - Command Line Interface

Thin commands over the core engine. Results are JSON on stdout (or --out);
messages and logs go to stderr.

Exit codes: 1 parse error, 2 invariant violation, 3 precondition failure,
10/11 for ks-check Impossible/Exhausted.
"""

import json
import logging
import sys
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import List, Optional, Tuple

import typer
from pydantic import BaseModel, ValidationError
from rich.console import Console
from rich.table import Table

from logos import __version__
from logos.core.errors import LogosError, UnknownName
from logos.core.hilbert import NAMED_BASES, NAMED_UNITARIES
from logos.core.ksvaluation import Outcome, find_binary_valuation, ks_for_superposition
from logos.core.opposition import (
    OppositionKind,
    classify,
    is_potential_contradiction,
    proposition,
)
from logos.core.powergraph import (
    PowerGraph,
    build_graph,
    generate_graph,
    graph_fingerprint,
    maximal_contexts,
)
from logos.core.psa import evaluate_psa
from logos.core.reproduce import reproduce_examples
from logos.core.sampler import run_trials
from logos.core.tomography import reconstruct, recover_vector
from logos.io import Workspace, codec, graph_to_dot, fixture_names, load_fixture
from logos.models import (
    CheckStatus,
    DensityPayload,
    ExampleReport,
    OppositionPayload,
    QuantumSituationPayload,
    VectorSetPayload,
)
from logos.utils.config import settings

app = typer.Typer(
    name="logos",
    help="🔷 Graph-theoretical toolkit for quantum possibility",
    add_completion=False,
)
# Stdout carries results only; everything else goes here.
console = Console(stderr=True)

KS_EXIT_CODES = {
    Outcome.FOUND: 0,
    Outcome.IMPOSSIBLE: 10,
    Outcome.EXHAUSTED: 11,
}

OUT_OPTION = typer.Option(None, "--out", "-o", help="Write the result here instead of stdout")


@contextmanager
def _guard() -> Iterator[None]:
    """Map library failures onto the exit-code table."""
    try:
        yield
    except LogosError as e:
        console.print(f"[red]❌ {type(e).__name__}: {e}[/red]")
        raise typer.Exit(e.exit_code)
    except (ValidationError, json.JSONDecodeError, FileNotFoundError) as e:
        console.print(f"[red]❌ Parse error: {e}[/red]")
        raise typer.Exit(1)
    except ValueError as e:
        console.print(f"[red]❌ Invalid value: {e}[/red]")
        raise typer.Exit(2)


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")
        console.print(f"[green]✅ Wrote {out}[/green]")


def _emit_model(model: BaseModel, out: Optional[Path]) -> None:
    _emit(codec.dumps(model), out)


def _recipe_graph(
    seed_basis: str, unitaries: List[str], depth: int, dim: int, tol: float
) -> PowerGraph:
    try:
        basis = NAMED_BASES[seed_basis](dim)
    except KeyError:
        raise UnknownName(
            f"unknown basis {seed_basis!r}; available: {', '.join(NAMED_BASES)}"
        ) from None
    gates = []
    for name in unitaries:
        try:
            gates.append(NAMED_UNITARIES[name](dim))
        except KeyError:
            raise UnknownName(
                f"unknown unitary {name!r}; available: {', '.join(NAMED_UNITARIES)}"
            ) from None
    return generate_graph(basis, gates, depth, tol)


@app.command("build-graph")
def build_graph_cmd(
    vectors: Optional[Path] = typer.Option(None, "--vectors", help="Vector-set JSON file"),
    fixture: Optional[str] = typer.Option(None, "--fixture", "-f", help="Bundled fixture name"),
    seed_basis: Optional[str] = typer.Option(None, "--seed-basis", help="Named seed basis"),
    unitary: List[str] = typer.Option([], "--unitary", "-u", help="Named unitary (repeatable)"),
    depth: int = typer.Option(1, "--depth", min=0, help="Generation depth"),
    dim: int = typer.Option(2, "--dim", min=1, help="Dimension for named bases and gates"),
    tol: Optional[float] = typer.Option(None, "--tol", help="Commutation tolerance"),
    out: Optional[Path] = OUT_OPTION,
):
    """
    🧱 Build a power graph from vectors, a fixture, or a generation recipe.

    Example:
        logos build-graph --seed-basis z --unitary hadamard --depth 1
    """
    sources = [s for s in (vectors, fixture, seed_basis) if s is not None]
    if len(sources) != 1:
        console.print("[red]❌ Choose exactly one of --vectors, --fixture, --seed-basis[/red]")
        raise typer.Exit(1)

    with _guard():
        if vectors is not None:
            payload = codec.read(vectors, VectorSetPayload)
            g = codec.graph_from_vector_set(payload)
        elif fixture is not None:
            g = load_fixture(fixture).graph
        else:
            g = _recipe_graph(seed_basis, unitary, depth, dim, tol or settings.commute_tol)
        if tol is not None and tol != g.tol:
            g = build_graph(list(g.nodes), tol)
        console.print(f"[cyan]🔷 {len(g.nodes)} nodes, {len(g.edges())} edges[/cyan]")
        _emit_model(codec.graph_to_payload(g), out)


@app.command()
def contexts(
    graph: Path = typer.Option(..., "--graph", "-g", help="Graph JSON file"),
    out: Optional[Path] = OUT_OPTION,
):
    """🔗 List the maximal contexts of a graph."""
    with _guard():
        g = Workspace(graph).load_graph()
        found = maximal_contexts(g)
        console.print(f"[cyan]🔗 {len(found)} maximal contexts[/cyan]")
        _emit_model(codec.contexts_to_payload(graph_fingerprint(g), found), out)


@app.command()
def valuate(
    rho: Path = typer.Option(..., "--rho", "-r", help="Density matrix JSON file"),
    graph: Path = typer.Option(..., "--graph", "-g", help="Graph JSON file"),
    out: Optional[Path] = OUT_OPTION,
):
    """
    📐 Evaluate the PSA of a density matrix over a graph.

    Example:
        logos valuate --rho upx.json --graph xy.json
    """
    with _guard():
        g = Workspace(graph).load_graph()
        density = codec.density_from_payload(codec.read(rho, DensityPayload))
        _emit_model(codec.psa_to_payload(evaluate_psa(density, g)), out)


@app.command()
def tomography(
    records: Path = typer.Option(..., "--records", help="Measurement records JSON file"),
    graph: Path = typer.Option(..., "--graph", "-g", help="Graph JSON file"),
    vector: bool = typer.Option(False, "--vector", help="Emit the recovered pure state vector instead"),
    out: Optional[Path] = OUT_OPTION,
):
    """🔬 Reconstruct the density matrix from recorded Born statistics."""
    with _guard():
        workspace = Workspace(graph, records_path=records)
        g = workspace.load_graph()
        rho_hat = reconstruct(workspace.load_records(g), g)
        if vector:
            _emit_model(codec.vector_to_payload(recover_vector(rho_hat).entries), out)
        else:
            _emit_model(codec.density_to_payload(rho_hat, source="tomography"), out)


@app.command("ks-check")
def ks_check(
    graph: Path = typer.Option(..., "--graph", "-g", help="Graph JSON file"),
    qs: Optional[Path] = typer.Option(
        None, "--qs", help="Restrict the search to contexts reachable from this superposition"
    ),
    budget: int = typer.Option(settings.ks_budget, "--budget", min=1, help="Node-visit budget"),
    out: Optional[Path] = OUT_OPTION,
):
    """
    🧩 Search for a global binary valuation.

    Exits 0 when one is found, 10 when none exists, 11 when the budget runs out.
    """
    with _guard():
        g = Workspace(graph).load_graph()
        if qs is None:
            verdict = find_binary_valuation(g, budget)
        else:
            situation = codec.situation_from_payload(codec.read(qs, QuantumSituationPayload))
            verdict = ks_for_superposition(situation, g, budget)
        _emit_model(codec.verdict_to_payload(verdict), out)

    style = "green" if verdict.found else "yellow"
    console.print(
        f"[{style}]🧩 {verdict.outcome.value} after {verdict.nodes_searched} visits[/{style}]"
    )
    raise typer.Exit(KS_EXIT_CODES[verdict.outcome])


@app.command("classify")
def classify_cmd(
    graph: Path = typer.Option(..., "--graph", "-g", help="Graph JSON file"),
    psa: Path = typer.Option(..., "--psa", help="PSA JSON file"),
    pair: Tuple[int, int] = typer.Option(..., "--pair", help="Two node ids"),
    out: Optional[Path] = OUT_OPTION,
):
    """⚖️  Classify two outcome propositions on the square of opposition."""
    with _guard():
        workspace = Workspace(graph, psa_path=psa)
        g = workspace.load_graph()
        values = workspace.load_psa(g)
        g.check_ids(pair)
        a, b = (proposition(i, g, values) for i in pair)
        verdict = classify(a, b, g)
        potential = None
        if verdict.kind is OppositionKind.CONTRADICTORY:
            potential = is_potential_contradiction(a, b, values, g)
        _emit_model(
            OppositionPayload(
                pair=pair,
                classification=verdict.kind.value,
                note=verdict.note,
                potentiae={str(i): values.values[i] for i in pair},
                potential_contradiction=potential,
            ),
            out,
        )


@app.command()
def sample(
    qs: Path = typer.Option(..., "--qs", help="Quantum situation JSON file"),
    n: int = typer.Option(settings.trials, "-n", "--trials", min=1, help="Number of trials"),
    seed: int = typer.Option(settings.seed, "--seed", help="Generator seed (env LOGOS_SEED)"),
    out: Optional[Path] = OUT_OPTION,
):
    """🎲 Draw actual effectuations from a quantum situation."""
    with _guard():
        situation = codec.situation_from_payload(codec.read(qs, QuantumSituationPayload))
        log = run_trials(situation, n, seed)
        _emit_model(codec.log_to_payload(log), out)


@app.command("export-dot")
def export_dot(
    graph: Path = typer.Option(..., "--graph", "-g", help="Graph JSON file"),
    psa: Optional[Path] = typer.Option(None, "--psa", help="Annotate nodes with PSA values"),
    clusters: bool = typer.Option(False, "--clusters", help="Draw maximal contexts as clusters"),
    out: Optional[Path] = OUT_OPTION,
):
    """🖼️  Export a graph as Graphviz DOT."""
    with _guard():
        workspace = Workspace(graph, psa_path=psa)
        g = workspace.load_graph()
        values = workspace.load_psa(g) if psa is not None else None
        found = maximal_contexts(g) if clusters else None
        _emit(graph_to_dot(g, psa=values, contexts=found), out)


def print_report(report: ExampleReport) -> None:
    """Print a check report as a rich table on stdout."""
    table = Table(title=report.title, show_header=True, header_style="bold")
    table.add_column("Check")
    table.add_column("Expected", justify="right")
    table.add_column("Observed", justify="right")
    table.add_column("Status")
    for row in report.rows:
        passed = row.status is CheckStatus.PASS
        status = "[green]✅ pass[/green]" if passed else "[red]❌ fail[/red]"
        table.add_row(row.name, row.expected, row.observed, status)
    Console().print(table)


@app.command()
def reproduce(
    fmt: str = typer.Option("table", "--format", help="table or json"),
    seed: int = typer.Option(settings.seed, "--seed", help="Generator seed"),
    trials: int = typer.Option(settings.trials, "--trials", min=1, help="Sampled trials"),
    out: Optional[Path] = OUT_OPTION,
):
    """▶️  Run the Stern-Gerlach worked example and check every stated value."""
    if fmt not in ("table", "json"):
        console.print(f"[red]❌ Unknown format {fmt!r}; use table or json[/red]")
        raise typer.Exit(1)

    with _guard():
        report = reproduce_examples(seed=seed, trials=trials)

    if fmt == "json":
        _emit_model(report, out)
    else:
        print_report(report)

    if report.passed:
        console.print(f"[green]✅ {len(report.rows)} checks passed[/green]")
    else:
        names = ", ".join(r.name for r in report.failures)
        console.print(f"[yellow]⚠️  {len(report.failures)} checks failed: {names}[/yellow]")


@app.command()
def fixtures():
    """📋 List bundled fixtures."""
    table = Table(show_header=True, header_style="bold")
    table.add_column("Name", style="green")
    table.add_column("Dim", justify="right")
    table.add_column("Nodes", justify="right")
    table.add_column("Contexts", justify="right")
    table.add_column("Source")
    with _guard():
        for name in fixture_names():
            fx = load_fixture(name)
            table.add_row(
                name,
                str(fx.graph.dim),
                str(len(fx.graph.nodes)),
                str(len(fx.contexts)),
                fx.source,
            )
    Console().print(table)


@app.command()
def version():
    """Show version information."""
    console.print(f"\n[cyan]Logos[/cyan] version [bold]{__version__}[/bold]\n")


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log at debug level"),
):
    """
    🔷 Logos - graphs of immanent powers

    Build commutation graphs of projectors, valuate them with the Born rule,
    reconstruct states, search for binary valuations and sample outcomes.
    """
    if verbose:
        logging.getLogger("logos").setLevel(logging.DEBUG)


if __name__ == "__main__":
    app()
