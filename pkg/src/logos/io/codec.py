"""Conversion between core values and their JSON wire models."""

from __future__ import annotations

import json
from pathlib import Path
from typing import TypeVar

import numpy as np
from pydantic import BaseModel

from logos.core.errors import InvariantViolation
from logos.core.hilbert import DensityMatrix, Projector, StateVector
from logos.core.ksvaluation import ValuationVerdict
from logos.core.powergraph import Context, PowerGraph, build_graph, full_contexts, maximal_contexts
from logos.core.psa import PSA, QuantumSituation
from logos.core.sampler import TrialLog
from logos.core.tomography import MeasurementRecord
from logos.models import (
    ContextPayload,
    ContextsPayload,
    DensityPayload,
    GraphPayload,
    MatrixPayload,
    PSAPayload,
    QuantumSituationPayload,
    RecordPayload,
    TrialLogPayload,
    VectorPayload,
    VectorSetPayload,
    VerdictPayload,
)

M = TypeVar("M", bound=BaseModel)

# Raw outcomes kept in a trial log for replay audits.
LOG_HEAD = 100


def dumps(model: BaseModel) -> str:
    """Deterministic JSON: sorted keys, shortest round-trip floats."""
    return json.dumps(model.model_dump(mode="json"), indent=2, sort_keys=True) + "\n"


def write(model: BaseModel, path: Path) -> None:
    path.write_text(dumps(model), encoding="utf-8")


def read(path: Path, model: type[M]) -> M:
    return model.model_validate_json(Path(path).read_text(encoding="utf-8"))


def _plain(x: float) -> float:
    return float(x) + 0.0


# ============================================
# Matrices and vectors
# ============================================

def matrix_to_payload(m: np.ndarray) -> MatrixPayload:
    return MatrixPayload(
        dim=m.shape[0],
        re=[[_plain(x) for x in row] for row in m.real],
        im=[[_plain(x) for x in row] for row in m.imag],
    )


def matrix_from_payload(payload: MatrixPayload) -> np.ndarray:
    return np.array(payload.re, dtype=float) + 1j * np.array(payload.im, dtype=float)


def vector_to_payload(v: np.ndarray) -> VectorPayload:
    return VectorPayload(dim=len(v), re=[_plain(x) for x in v.real], im=[_plain(x) for x in v.imag])


def vector_from_payload(payload: VectorPayload) -> np.ndarray:
    re = np.array(payload.re, dtype=float)
    im = np.zeros_like(re) if payload.im is None else np.array(payload.im, dtype=float)
    return re + 1j * im


def density_to_payload(rho: DensityMatrix, source: str | None = None) -> DensityPayload:
    base = matrix_to_payload(rho.entries)
    return DensityPayload(**base.model_dump(), source=source)


def density_from_payload(payload: MatrixPayload) -> DensityMatrix:
    return DensityMatrix(matrix_from_payload(payload))


# ============================================
# Graphs and contexts
# ============================================

def graph_to_payload(g: PowerGraph) -> GraphPayload:
    return GraphPayload(
        dim=g.dim,
        tol=g.tol,
        nodes=[matrix_to_payload(p.entries) for p in g.nodes],
        edges=g.edges(),
    )


def graph_from_payload(payload: GraphPayload) -> PowerGraph:
    projectors = [Projector(matrix_from_payload(n)) for n in payload.nodes]
    g = build_graph(projectors, payload.tol)
    if len(g.nodes) != len(projectors):
        raise InvariantViolation("graph file holds duplicate nodes")
    if g.dim != payload.dim:
        raise InvariantViolation(f"graph file declares dim {payload.dim}, nodes have dim {g.dim}")
    declared = sorted((min(i, j), max(i, j)) for i, j in payload.edges)
    if declared != g.edges():
        raise InvariantViolation("graph file edges disagree with the commutation relation")
    return g


def contexts_to_payload(graph_ref: str, contexts: list[Context]) -> ContextsPayload:
    return ContextsPayload(
        graph=graph_ref,
        contexts=[ContextPayload(nodes=c.sorted_ids(), maximal=c.is_maximal) for c in contexts],
    )


def graph_from_vector_set(payload: VectorSetPayload) -> PowerGraph:
    """Graph of the normalized vectors of a fixture; ids follow vector order."""
    projectors = []
    for vp in payload.vectors:
        if vp.dim != payload.dim:
            raise InvariantViolation(f"vector of dim {vp.dim} in a dim {payload.dim} set")
        v = StateVector.normalized(vector_from_payload(vp))
        projectors.append(Projector(np.outer(v.entries, v.entries.conj())))
    g = build_graph(projectors, payload.tol)
    if len(g.nodes) != len(projectors):
        raise InvariantViolation(f"vector set {payload.name!r} repeats a ray")
    return g


def vector_set_contexts(payload: VectorSetPayload, g: PowerGraph) -> list[Context]:
    """Declared contexts of a fixture, or its full contexts when none are declared."""
    if not payload.contexts:
        return full_contexts(g)
    found = {c.node_ids: c for c in maximal_contexts(g)}
    result = []
    for ids in payload.contexts:
        key = frozenset(ids)
        result.append(found.get(key, Context(key, is_maximal=False)))
    return result


# ============================================
# PSAs, records, situations, logs, verdicts
# ============================================

def psa_to_payload(psa: PSA, graph: str | None = None) -> PSAPayload:
    return PSAPayload(
        graph=graph or psa.graph_ref,
        values={str(k): v for k, v in psa.values.items()},
    )


def psa_from_payload(payload: PSAPayload) -> PSA:
    return PSA(graph_ref=payload.graph, values={int(k): v for k, v in payload.values.items()})


def record_to_payload(record: MeasurementRecord) -> RecordPayload:
    return RecordPayload(
        context=record.context.sorted_ids(),
        probabilities={str(k): v for k, v in record.probabilities.items()},
        shots=record.shots,
    )


def record_from_payload(payload: RecordPayload) -> MeasurementRecord:
    return MeasurementRecord(
        context=Context(frozenset(payload.context)),
        probabilities={int(k): v for k, v in payload.probabilities.items()},
        shots=payload.shots,
    )


def situation_to_payload(qs: QuantumSituation, source: str | None = None) -> QuantumSituationPayload:
    ids = qs.node_ids()
    return QuantumSituationPayload(
        dim=qs.dim,
        context=ids,
        basis=[vector_to_payload(qs.basis_vectors[i].entries) for i in ids],
        coefficients=vector_to_payload(np.array([qs.coefficients[i] for i in ids])),
        source=source,
    )


def situation_from_payload(payload: QuantumSituationPayload) -> QuantumSituation:
    if len(payload.basis) != len(payload.context) or payload.coefficients.dim != len(payload.context):
        raise InvariantViolation("situation context, basis and coefficients differ in length")
    coefficients = vector_from_payload(payload.coefficients)
    return QuantumSituation(
        context=Context(frozenset(payload.context), is_maximal=True),
        coefficients={i: complex(c) for i, c in zip(payload.context, coefficients)},
        basis_vectors={
            i: StateVector(vector_from_payload(b)) for i, b in zip(payload.context, payload.basis)
        },
    )


def log_to_payload(log: TrialLog) -> TrialLogPayload:
    return TrialLogPayload(
        seed=log.seed,
        generator=log.generator,
        trials=log.trials,
        counts={str(k): v for k, v in log.counts.items()},
        outcomes_head=list(log.outcomes[:LOG_HEAD]),
    )


def verdict_to_payload(verdict: ValuationVerdict) -> VerdictPayload:
    val = verdict.valuation
    return VerdictPayload(
        outcome=verdict.outcome.value,
        nodes_searched=verdict.nodes_searched,
        valuation=None if val is None else {str(k): v for k, v in val.values.items()},
        true_nodes=[] if val is None else val.true_nodes(),
    )
