"""Graphviz DOT export of a power graph."""

from __future__ import annotations

from collections.abc import Sequence

from logos.core.powergraph import Context, PowerGraph
from logos.core.psa import PSA


def _label(node_id: int, psa: PSA | None) -> str:
    if psa is None:
        return f"P{node_id}"
    return f"P{node_id} ({psa.values[node_id]:.4g})"


def graph_to_dot(
    g: PowerGraph,
    psa: PSA | None = None,
    contexts: Sequence[Context] | None = None,
    name: str = "G",
) -> str:
    """Undirected DOT text; self-loops are implied and never written."""
    lines = [f"graph {name} {{"]
    if contexts:
        for k, ctx in enumerate(contexts):
            lines.append(f"   subgraph cluster_{k} {{")
            lines.append(f'      label = "C{k}";')
            lines.extend(f"      P{i};" for i in ctx.sorted_ids())
            lines.append("   }")
    for i in range(len(g.nodes)):
        lines.append(f'   P{i} [ label = "{_label(i, psa)}" ];')
    for i, j in g.edges():
        lines.append(f"   P{i} -- P{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
