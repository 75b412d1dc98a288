"""Registry of bundled fixtures."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from logos.core.errors import UnknownName
from logos.core.hilbert import DensityMatrix
from logos.core.powergraph import Context, PowerGraph
from logos.io.codec import density_from_payload, graph_from_vector_set, vector_set_contexts
from logos.models import DensityPayload, VectorSetPayload

FIXTURE_FILES = {
    "stern-gerlach": "stern_gerlach.json",
    "two-contexts": "two_contexts.json",
    "cabello-18": "cabello_18.json",
    "peres-33": "peres_33.json",
}

STATE_FILES = {
    "up-x": "up_x.json",
}


@dataclass(frozen=True, eq=False)
class Fixture:
    name: str
    source: str
    description: str | None
    graph: PowerGraph
    contexts: tuple[Context, ...]


def _read(filename: str) -> str:
    return resources.files("logos.fixtures").joinpath(filename).read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def load_fixture(name: str) -> Fixture:
    try:
        filename = FIXTURE_FILES[name]
    except KeyError:
        raise UnknownName(f"unknown fixture {name!r}; available: {', '.join(FIXTURE_FILES)}") from None
    payload = VectorSetPayload.model_validate_json(_read(filename))
    graph = graph_from_vector_set(payload)
    return Fixture(
        name=payload.name,
        source=payload.source,
        description=payload.description,
        graph=graph,
        contexts=tuple(vector_set_contexts(payload, graph)),
    )


def load_state(name: str) -> tuple[DensityMatrix, str | None]:
    try:
        filename = STATE_FILES[name]
    except KeyError:
        raise UnknownName(f"unknown state {name!r}; available: {', '.join(STATE_FILES)}") from None
    payload = DensityPayload.model_validate_json(_read(filename))
    return density_from_payload(payload), payload.source


def fixture_names() -> list[str]:
    return list(FIXTURE_FILES)
