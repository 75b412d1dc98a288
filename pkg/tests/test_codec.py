import json

import pytest

from logos.core.errors import InvariantViolation, UnknownName
from logos.core.hilbert import computational_basis
from logos.core.powergraph import Context, graph_from_bases
from logos.core.psa import evaluate_psa, superposition_from
from logos.io import codec, graph_to_dot, load_fixture, load_state
from logos.models import GraphPayload, VectorPayload, VectorSetPayload


def test_dumps_sorts_keys(stern_gerlach, up_x):
    text = codec.dumps(codec.psa_to_payload(evaluate_psa(up_x, stern_gerlach.graph)))
    data = json.loads(text)
    assert list(data) == ["graph", "values"]
    assert list(data["values"]) == ["0", "1", "2", "3", "4", "5"]
    assert text.endswith("\n")


def test_graph_payload_reloads(cabello):
    payload = codec.graph_to_payload(cabello.graph)
    again = codec.graph_from_payload(GraphPayload.model_validate_json(codec.dumps(payload)))
    assert again.edges() == cabello.graph.edges()
    assert codec.dumps(codec.graph_to_payload(again)) == codec.dumps(payload)


def test_graph_edges_must_match_commutation(stern_gerlach):
    payload = codec.graph_to_payload(stern_gerlach.graph)
    payload.edges.append((0, 2))
    with pytest.raises(InvariantViolation):
        codec.graph_from_payload(payload)


def test_graph_dim_must_match(stern_gerlach):
    payload = codec.graph_to_payload(stern_gerlach.graph)
    payload.dim = 3
    with pytest.raises(InvariantViolation):
        codec.graph_from_payload(payload)


def test_vector_set_normalizes_and_rejects_repeats():
    payload = VectorSetPayload(
        name="repeat",
        dim=2,
        source="test",
        vectors=[VectorPayload(dim=2, re=[2, 0]), VectorPayload(dim=2, re=[1, 0])],
    )
    with pytest.raises(InvariantViolation):
        codec.graph_from_vector_set(payload)


def test_situation_payload_keeps_coefficients(stern_gerlach, up_x):
    qs = superposition_from(up_x, Context(frozenset({2, 3})), stern_gerlach.graph)
    again = codec.situation_from_payload(codec.situation_to_payload(qs))
    assert again.node_ids() == [2, 3]
    for i in (2, 3):
        assert again.coefficients[i] == pytest.approx(qs.coefficients[i])


def test_dot_for_single_d4_context():
    g = graph_from_bases([computational_basis(4)])
    dot = graph_to_dot(g)
    assert dot.startswith("graph G {")
    assert dot.count(" -- ") == 6
    assert dot.count("[ label =") == 4
    assert "P0 -- P0" not in dot


def test_dot_with_values_and_clusters(stern_gerlach, up_x):
    g = stern_gerlach.graph
    dot = graph_to_dot(g, psa=evaluate_psa(up_x, g), contexts=stern_gerlach.contexts)
    assert dot.count("subgraph cluster_") == 3
    assert 'label = "P2 (0.5)"' in dot


def test_unknown_fixture_and_state_names():
    with pytest.raises(UnknownName):
        load_fixture("nope")
    with pytest.raises(UnknownName):
        load_state("nope")
    assert UnknownName.exit_code == 1
