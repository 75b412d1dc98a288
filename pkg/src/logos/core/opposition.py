"""Square of opposition over outcome propositions.

An outcome proposition says "this power actualizes in a given trial". Two
orthogonal outcomes cannot both be true; they also cannot both be false
exactly when their projectors sum to the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from logos.core.errors import NotContradictoryPair, UnknownNode
from logos.core.hilbert import TOL_NORM, TOL_PROJ, commutes
from logos.core.powergraph import Context, PowerGraph, contexts_containing
from logos.core.psa import PSA

SUBCONTRARY_NOTE = (
    "subcontrariety needs two outcomes that can both be true but not both false; "
    "rank-1 projective outcomes never satisfy this"
)


class OppositionKind(str, Enum):
    CONTRADICTORY = "contradictory"
    CONTRARY = "contrary"
    SUBCONTRARY = "subcontrary"
    SUBALTERN = "subaltern"
    UNRELATED = "unrelated"


@dataclass(frozen=True)
class OutcomeProposition:
    node_id: int
    context: Context
    potentia: float

    def __post_init__(self) -> None:
        if self.node_id not in self.context.node_ids:
            raise UnknownNode(f"node {self.node_id} is not a member of its context")


@dataclass(frozen=True)
class OppositionClass:
    kind: OppositionKind
    note: str | None = None


def proposition(node_id: int, g: PowerGraph, psa: PSA) -> OutcomeProposition:
    """Outcome proposition for a node, placed in its first full context if any."""
    contexts = contexts_containing(g, node_id)
    full = [c for c in contexts if len(c) == g.dim]
    ctx = (full or contexts)[0]
    return OutcomeProposition(node_id, ctx, psa.values[node_id])


def classify(a: OutcomeProposition, b: OutcomeProposition, g: PowerGraph) -> OppositionClass:
    g.check_ids([a.node_id, b.node_id])
    if a.node_id == b.node_id:
        return OppositionClass(OppositionKind.SUBALTERN)

    p, q = g.nodes[a.node_id], g.nodes[b.node_id]
    if not commutes(p, q, g.tol):
        return OppositionClass(OppositionKind.UNRELATED, SUBCONTRARY_NOTE)

    # Distinct commuting rank-1 projectors are orthogonal: never both true.
    total = p.entries + q.entries
    if np.linalg.norm(total - np.eye(g.dim), "fro") <= 2 * TOL_PROJ:
        return OppositionClass(OppositionKind.CONTRADICTORY)
    return OppositionClass(OppositionKind.CONTRARY)


def is_potential_contradiction(
    a: OutcomeProposition, b: OutcomeProposition, psa: PSA, g: PowerGraph
) -> bool:
    """Contradictory in the actual realm while both carry nonzero potentia."""
    verdict = classify(a, b, g)
    if verdict.kind is not OppositionKind.CONTRADICTORY:
        raise NotContradictoryPair(
            f"nodes {a.node_id} and {b.node_id} are {verdict.kind.value}, not contradictory"
        )
    return psa.values[a.node_id] > TOL_NORM and psa.values[b.node_id] > TOL_NORM
