import numpy as np
import pytest

from logos.core.errors import NotContradictoryPair, UnknownNode
from logos.core.hilbert import StateVector, computational_basis, density_from_vector
from logos.core.opposition import (
    SUBCONTRARY_NOTE,
    OppositionKind,
    OutcomeProposition,
    classify,
    is_potential_contradiction,
    proposition,
)
from logos.core.powergraph import Context, graph_from_bases
from logos.core.psa import evaluate_psa, superposition_from
from logos.core.sampler import run_trials

UP_X, DOWN_X, UP_Y, DOWN_Y, UP_Z, DOWN_Z = range(6)


@pytest.fixture
def sg_psa(stern_gerlach, up_x):
    return evaluate_psa(up_x, stern_gerlach.graph)


def _pair(g, psa, i, j):
    return proposition(i, g, psa), proposition(j, g, psa)


class TestClassify:
    def test_spin_pair_is_contradictory(self, stern_gerlach, sg_psa):
        g = stern_gerlach.graph
        verdict = classify(*_pair(g, sg_psa, UP_Y, DOWN_Y), g)
        assert verdict.kind is OppositionKind.CONTRADICTORY
        assert verdict.note is None

    def test_d3_basis_pairs_are_contrary(self):
        g = graph_from_bases([computational_basis(3)])
        psa = evaluate_psa(density_from_vector(computational_basis(3)[0]), g)
        for i, j in [(0, 1), (0, 2), (1, 2)]:
            assert classify(*_pair(g, psa, i, j), g).kind is OppositionKind.CONTRARY

    def test_incompatible_outcomes_are_unrelated(self, stern_gerlach, sg_psa):
        g = stern_gerlach.graph
        verdict = classify(*_pair(g, sg_psa, UP_X, UP_Z), g)
        assert verdict.kind is OppositionKind.UNRELATED
        assert verdict.note == SUBCONTRARY_NOTE

    def test_same_outcome_is_subaltern(self, stern_gerlach, sg_psa):
        g = stern_gerlach.graph
        a = proposition(UP_Y, g, sg_psa)
        assert classify(a, a, g).kind is OppositionKind.SUBALTERN

    def test_subcontrary_never_produced(self, cabello):
        g = cabello.graph
        psa = evaluate_psa(density_from_vector(computational_basis(4)[0]), g)
        props = [proposition(i, g, psa) for i in range(len(g))]
        kinds = {classify(a, b, g).kind for a in props for b in props}
        assert OppositionKind.SUBCONTRARY not in kinds


class TestPropositions:
    def test_proposition_carries_potentia(self, stern_gerlach, sg_psa):
        p = proposition(UP_Y, stern_gerlach.graph, sg_psa)
        assert p.context.sorted_ids() == [UP_Y, DOWN_Y]
        assert p.potentia == pytest.approx(0.5)

    def test_node_outside_context(self):
        with pytest.raises(UnknownNode):
            OutcomeProposition(0, Context(frozenset({1, 2})), 0.5)


class TestPotentialContradiction:
    def test_both_possible(self, stern_gerlach, sg_psa):
        g = stern_gerlach.graph
        assert is_potential_contradiction(*_pair(g, sg_psa, UP_Y, DOWN_Y), sg_psa, g)

    def test_certain_outcome_is_not_potential(self, stern_gerlach, sg_psa):
        g = stern_gerlach.graph
        assert not is_potential_contradiction(*_pair(g, sg_psa, UP_X, DOWN_X), sg_psa, g)

    def test_requires_contradictory_pair(self, stern_gerlach, sg_psa):
        g = stern_gerlach.graph
        with pytest.raises(NotContradictoryPair):
            is_potential_contradiction(*_pair(g, sg_psa, UP_X, UP_Y), sg_psa, g)


def test_exactly_one_of_the_pair_actualizes(stern_gerlach, up_x):
    g = stern_gerlach.graph
    qs = superposition_from(up_x, Context(frozenset({UP_Y, DOWN_Y})), g)
    log = run_trials(qs, 100_000, seed=1)
    violations = sum(1 for o in log.outcomes if o not in (UP_Y, DOWN_Y))
    assert violations == 0
    assert log.counts[UP_Y] + log.counts[DOWN_Y] == 100_000


def test_contrary_pair_can_both_be_false():
    basis = computational_basis(3)
    g = graph_from_bases([basis])
    uniform = StateVector(np.ones(3) / np.sqrt(3))
    psa = evaluate_psa(density_from_vector(uniform), g)
    a, b = _pair(g, psa, 0, 1)
    assert classify(a, b, g).kind is OppositionKind.CONTRARY
    log = run_trials(superposition_from(uniform, Context(frozenset({0, 1, 2})), g), 1000, seed=3)
    assert log.counts[2] > 0


@pytest.mark.parametrize("i, j", [(UP_Y, DOWN_Y), (UP_X, UP_Z), (DOWN_X, UP_Y), (UP_Z, UP_Z)])
def test_classify_is_symmetric(stern_gerlach, sg_psa, i, j):
    g = stern_gerlach.graph
    a, b = _pair(g, sg_psa, i, j)
    assert classify(a, b, g).kind is classify(b, a, g).kind
