import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from logos.core.errors import DimensionMismatch, EmptyInput, NonOrthonormalBasis, UnknownNode
from logos.core.hilbert import (
    NAMED_BASES,
    NAMED_UNITARIES,
    StateVector,
    basis_projectors,
    computational_basis,
    fourier_unitary,
    hadamard,
    identity,
    pauli_x,
    projector_from_vector,
    random_unitary,
    spin_basis,
)
from logos.core.powergraph import (
    Context,
    add_projectors,
    build_graph,
    context_from_basis,
    context_of,
    contexts_containing,
    epistemically_incompatible,
    full_contexts,
    generate_graph,
    graph_fingerprint,
    graph_from_bases,
    is_context,
    maximal_contexts,
)
from oracles import are_exact_maximal_cliques, is_transitive, subset_cliques


def _ids(contexts):
    return [tuple(c.sorted_ids()) for c in contexts]


class TestBuildGraph:
    def test_stern_gerlach_edges(self, stern_gerlach):
        g = stern_gerlach.graph
        assert len(g) == 6
        assert g.edges() == [(0, 1), (2, 3), (4, 5)]

    def test_adjacency_reflexive_and_symmetric(self, cabello):
        adj = cabello.graph.adjacency
        assert adj.diagonal().all()
        assert (adj == adj.T).all()

    def test_adjacency_is_read_only(self, stern_gerlach):
        with pytest.raises(ValueError):
            stern_gerlach.graph.adjacency[0, 2] = True

    def test_phase_duplicates_collapse(self):
        v = StateVector([0.6, 0.8])
        g = build_graph([
            projector_from_vector(v),
            projector_from_vector(StateVector(1j * v.entries)),
        ])
        assert len(g) == 1

    def test_empty_input(self):
        with pytest.raises(EmptyInput):
            build_graph([])

    def test_mixed_dimensions(self):
        with pytest.raises(DimensionMismatch):
            build_graph([
                projector_from_vector(StateVector([1, 0])),
                projector_from_vector(StateVector([1, 0, 0])),
            ])

    def test_single_context_d4_is_complete(self):
        g = graph_from_bases([computational_basis(4)])
        assert len(g.edges()) == 6
        assert _ids(maximal_contexts(g)) == [(0, 1, 2, 3)]

    def test_commutation_is_not_transitive_in_d3(self):
        s = 1 / np.sqrt(2)
        a, b, c = StateVector([1, 0, 0]), StateVector([0, 1, 0]), StateVector([s, 0, s])
        g = build_graph([projector_from_vector(v) for v in (a, b, c)])
        assert g.adjacency[0, 1] and g.adjacency[1, 2]
        assert not g.adjacency[0, 2]
        assert not is_transitive(g)

    def test_single_basis_is_transitive(self):
        assert is_transitive(graph_from_bases([computational_basis(3)]))


class TestContexts:
    def test_is_context(self, stern_gerlach):
        g = stern_gerlach.graph
        assert is_context(g, {0})
        assert is_context(g, {2, 3})
        assert not is_context(g, {0, 2})

    def test_unknown_node(self, stern_gerlach):
        with pytest.raises(UnknownNode):
            is_context(stern_gerlach.graph, {0, 99})

    def test_maximal_contexts_sorted(self, stern_gerlach):
        found = maximal_contexts(stern_gerlach.graph)
        assert _ids(found) == [(0, 1), (2, 3), (4, 5)]
        assert all(c.is_maximal for c in found)

    def test_contexts_containing(self, stern_gerlach):
        assert _ids(contexts_containing(stern_gerlach.graph, 3)) == [(2, 3)]

    def test_cabello_declared_contexts_are_full(self, cabello):
        g = cabello.graph
        full = set(_ids(full_contexts(g)))
        declared = _ids(cabello.contexts)
        assert len(declared) == 9
        assert set(declared) <= full
        counts = np.zeros(len(g), dtype=int)
        for ctx in declared:
            counts[list(ctx)] += 1
        assert (counts == 2).all()

    def test_peres_has_sixteen_triads(self, peres):
        assert len(peres.graph) == 33
        assert len(full_contexts(peres.graph)) == 16
        assert len(peres.contexts) == 16

    @pytest.mark.parametrize("name", ["stern_gerlach", "two_contexts", "cabello", "peres"])
    def test_full_contexts_resolve_the_identity(self, name, request):
        g = request.getfixturevalue(name).graph
        for ctx in full_contexts(g):
            total = sum(g.nodes[i].entries for i in ctx.sorted_ids())
            assert np.allclose(total, np.eye(g.dim), atol=1e-9)

    def test_spin_contexts_are_epistemically_incompatible(self, stern_gerlach):
        x, y, z = stern_gerlach.contexts
        assert epistemically_incompatible(stern_gerlach.graph, x, y)
        assert epistemically_incompatible(stern_gerlach.graph, y, z)
        assert not epistemically_incompatible(stern_gerlach.graph, x, x)

    def test_overlapping_d3_contexts_are_epistemically_incompatible(self, chained_d3):
        a, b = [c for c in full_contexts(chained_d3) if 0 in c.node_ids]
        assert epistemically_incompatible(chained_d3, a, b)
        assert not epistemically_incompatible(chained_d3, a, Context(frozenset({0})))


class TestCliqueParity:
    @pytest.mark.parametrize("name", ["stern_gerlach", "two_contexts"])
    def test_subset_enumeration_on_fixtures(self, name, request):
        g = request.getfixturevalue(name).graph
        assert _ids(maximal_contexts(g)) == subset_cliques(g)

    def test_subset_enumeration_on_chained_bases(self, chained_d3):
        assert len(chained_d3) == 7
        assert _ids(maximal_contexts(chained_d3)) == subset_cliques(chained_d3)

    @pytest.mark.parametrize("name", ["stern_gerlach", "two_contexts", "cabello", "peres"])
    def test_cliques_are_maximal_and_cover_every_edge(self, name, request):
        g = request.getfixturevalue(name).graph
        found = maximal_contexts(g)
        assert are_exact_maximal_cliques(g, _ids(found))
        assert all(is_context(g, c.node_ids) for c in found)

    @given(seed=st.integers(min_value=0, max_value=10**6), dim=st.integers(2, 3))
    @settings(max_examples=25, deadline=None)
    def test_random_bases_with_shared_rays(self, seed, dim):
        u = random_unitary(dim, seed).entries
        rotated = [StateVector(u[:, k]) for k in range(dim)]
        g = graph_from_bases([computational_basis(dim), rotated, computational_basis(dim)])
        assert _ids(maximal_contexts(g)) == subset_cliques(g)


class TestContextFromBasis:
    def test_existing_basis(self, stern_gerlach):
        g, ctx = context_from_basis(stern_gerlach.graph, spin_basis("z"))
        assert g is stern_gerlach.graph
        assert ctx.sorted_ids() == [4, 5]
        assert ctx.is_maximal

    def test_new_basis_extends_graph(self, stern_gerlach):
        c, s = np.cos(0.3), np.sin(0.3)
        basis = [StateVector([c, s]), StateVector([-s, c])]
        g, ctx = context_from_basis(stern_gerlach.graph, basis)
        assert len(g) == 8
        assert ctx.sorted_ids() == [6, 7]
        assert graph_fingerprint(add_projectors(stern_gerlach.graph, basis_projectors(basis))) == (
            graph_fingerprint(g)
        )

    def test_non_orthonormal(self, stern_gerlach):
        s = 1 / np.sqrt(2)
        with pytest.raises(NonOrthonormalBasis):
            context_from_basis(stern_gerlach.graph, [StateVector([1, 0]), StateVector([s, s])])

    def test_context_of_known_projectors(self, stern_gerlach):
        ctx = context_of(stern_gerlach.graph, basis_projectors(spin_basis("y")))
        assert ctx.sorted_ids() == [2, 3]


class TestGenerateGraph:
    def test_hadamard_closes_after_one_step(self):
        g = generate_graph(spin_basis("z"), [hadamard()], depth=3)
        assert len(g) == 4
        assert _ids(maximal_contexts(g)) == [(0, 1), (2, 3)]

    def test_identity_adds_nothing(self):
        g = generate_graph(computational_basis(3), [identity(3)], depth=2)
        assert len(g) == 3

    def test_fourier_orbit_in_d3(self):
        g = generate_graph(computational_basis(3), [fourier_unitary(3)], depth=2)
        assert len(g) == 6
        assert len(full_contexts(g)) == 2

    def test_needs_unitaries(self):
        with pytest.raises(EmptyInput):
            generate_graph(spin_basis("z"), [], depth=1)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            generate_graph(spin_basis("z"), [identity(3)], depth=1)

    def test_depth_zero_is_the_seed_context(self):
        g = generate_graph(computational_basis(3), [fourier_unitary(3)], depth=0)
        assert len(g) == 3
        assert _ids(maximal_contexts(g)) == [(0, 1, 2)]

    def test_pauli_x_permutes_the_seed(self):
        assert len(generate_graph(spin_basis("z"), [pauli_x()], depth=4)) == 2

    def test_nodes_grow_monotonically_with_depth(self):
        gates = [random_unitary(3, 11), fourier_unitary(3)]
        previous = set()
        for depth in range(4):
            g = generate_graph(computational_basis(3), gates, depth)
            keys = {p.canonical_key for p in g.nodes}
            assert previous <= keys
            previous = keys


class TestNamedRecipes:
    @pytest.mark.parametrize("name", ["x", "y"])
    def test_spin_bases_are_qubit_only(self, name):
        assert len(NAMED_BASES[name](2)) == 2
        with pytest.raises(DimensionMismatch):
            NAMED_BASES[name](3)

    @pytest.mark.parametrize("name", ["hadamard", "pauli-x"])
    def test_qubit_gates_are_qubit_only(self, name):
        assert NAMED_UNITARIES[name](2).dim == 2
        with pytest.raises(DimensionMismatch):
            NAMED_UNITARIES[name](4)


def test_fingerprint_depends_on_node_order(stern_gerlach):
    g = stern_gerlach.graph
    same = build_graph(list(g.nodes), g.tol)
    reversed_ = build_graph(list(reversed(g.nodes)), g.tol)
    assert graph_fingerprint(same) == graph_fingerprint(g)
    assert graph_fingerprint(reversed_) != graph_fingerprint(g)
