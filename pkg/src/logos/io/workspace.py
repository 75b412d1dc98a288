"""A set of related files checked together on load."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from pydantic import TypeAdapter

from logos.core.errors import NonNormalizedPSA, UnknownNode
from logos.core.hilbert import TOL_NORM
from logos.core.powergraph import PowerGraph, graph_fingerprint
from logos.core.psa import PSA, context_totals
from logos.core.tomography import MeasurementRecord
from logos.io import codec
from logos.models import GraphPayload, PSAPayload, RecordPayload

_RECORDS = TypeAdapter(list[RecordPayload])


@dataclass
class Workspace:
    """Paths to graph, PSA and record files; node ids must resolve in the graph.

    Bundled fixtures are resolved through ``logos.io.fixtures`` instead.
    """

    graph_path: Path
    psa_path: Path | None = None
    records_path: Path | None = None

    def load_graph(self) -> PowerGraph:
        return codec.graph_from_payload(codec.read(self.graph_path, GraphPayload))

    def load_psa(self, g: PowerGraph) -> PSA:
        """Read the PSA file and check it belongs to g and is normalized per context."""
        if self.psa_path is None:
            raise ValueError("workspace has no PSA file")
        psa = codec.psa_from_payload(codec.read(self.psa_path, PSAPayload))
        fingerprint = graph_fingerprint(g)
        if psa.graph_ref != fingerprint:
            raise UnknownNode(f"PSA was computed on {psa.graph_ref}, not on {fingerprint}")
        unknown = sorted(set(psa.values) - set(range(len(g.nodes))))
        if unknown:
            raise UnknownNode(f"PSA values reference unknown nodes {unknown}")
        if len(psa.values) != len(g.nodes):
            raise UnknownNode("PSA does not value every node of the graph")
        for ids, total in context_totals(psa, g).items():
            if abs(total - 1.0) > g.dim * TOL_NORM:
                raise NonNormalizedPSA(f"potentiae over context {list(ids)} sum to {total!r}")
        return psa

    def load_records(self, g: PowerGraph) -> list[MeasurementRecord]:
        if self.records_path is None:
            raise ValueError("workspace has no records file")
        payloads = _RECORDS.validate_json(self.records_path.read_text(encoding="utf-8"))
        records = [codec.record_from_payload(p) for p in payloads]
        for record in records:
            g.check_ids(record.context.node_ids)
        return records
