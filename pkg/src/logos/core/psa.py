"""Potential States of Affairs and quantum situations.

A PSA assigns every node of a graph its potentia Tr[rho P]. A quantum
situation is the expansion of a pure state in the basis of one context;
any one of them determines the PSA over the whole graph.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from types import MappingProxyType

import numpy as np

from logos.core.errors import (
    DimensionMismatch,
    EmptyInput,
    IncompleteContext,
    MixedStateNotExpandable,
    NonUnitVector,
    UnknownNode,
)
from logos.core.hilbert import (
    KEY_DECIMALS,
    TOL_NORM,
    TOL_PROJ,
    DensityMatrix,
    StateVector,
    born_value,
    density_from_vector,
    is_orthonormal,
    projector_from_vector,
)
from logos.core.powergraph import Context, PowerGraph, full_contexts, graph_fingerprint

# Largest eigenvalue a density matrix needs to count as pure.
PURE_THRESHOLD = 1 - 1e-7


@dataclass(frozen=True, eq=False)
class PSA:
    graph_ref: str
    values: Mapping[int, float]
    source: DensityMatrix | None = None

    def __post_init__(self) -> None:
        for node_id, v in self.values.items():
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"potentia of node {node_id} is {v!r}, outside [0, 1]")
        ordered = {int(k): float(self.values[k]) for k in sorted(self.values)}
        object.__setattr__(self, "values", MappingProxyType(ordered))

    def __getitem__(self, node_id: int) -> float:
        return self.values[node_id]

    def agrees_with(self, other: PSA, tol: float = TOL_NORM) -> bool:
        if set(self.values) != set(other.values):
            return False
        return all(abs(self.values[k] - other.values[k]) <= tol for k in self.values)


@dataclass(frozen=True, eq=False)
class QuantumSituation:
    context: Context
    coefficients: Mapping[int, complex]
    basis_vectors: Mapping[int, StateVector]

    def __post_init__(self) -> None:
        if set(self.coefficients) != set(self.context.node_ids) or set(self.basis_vectors) != set(
            self.context.node_ids
        ):
            raise IncompleteContext("coefficients and basis vectors must cover the context exactly")
        ids = self.context.sorted_ids()
        norm = sum(abs(self.coefficients[i]) ** 2 for i in ids)
        if abs(norm - 1.0) > TOL_NORM:
            raise NonUnitVector(f"sum of |c_i|^2 is {norm!r}, expected 1")
        if not is_orthonormal([self.basis_vectors[i] for i in ids]):
            raise IncompleteContext("basis vectors of a quantum situation must be orthonormal")
        object.__setattr__(self, "coefficients", MappingProxyType({i: complex(self.coefficients[i]) for i in ids}))
        object.__setattr__(self, "basis_vectors", MappingProxyType({i: self.basis_vectors[i] for i in ids}))

    @property
    def dim(self) -> int:
        return next(iter(self.basis_vectors.values())).dim

    def node_ids(self) -> list[int]:
        return self.context.sorted_ids()

    def potentiae(self) -> dict[int, float]:
        return {i: abs(c) ** 2 for i, c in self.coefficients.items()}

    def vector(self) -> StateVector:
        """v = sum_i c_i |a_i>."""
        total = sum(self.coefficients[i] * self.basis_vectors[i].entries for i in self.node_ids())
        return StateVector(total)


@dataclass(frozen=True, eq=False)
class BasisDensity:
    context: Context
    coeff_matrix: Mapping[tuple[int, int], complex]
    basis_vectors: Mapping[int, StateVector]

    def matrix(self) -> np.ndarray:
        ids = self.context.sorted_ids()
        return np.array([[self.coeff_matrix[(i, j)] for j in ids] for i in ids])

    def global_matrix(self) -> np.ndarray:
        """sum_ij c_i conj(c_j) |a_i><a_j| in the standard basis."""
        ids = self.context.sorted_ids()
        basis = np.array([self.basis_vectors[i].entries for i in ids]).T
        return basis @ self.matrix() @ basis.conj().T


# ============================================
# Operations
# ============================================

def evaluate_psa(rho: DensityMatrix, g: PowerGraph) -> PSA:
    """Born-rule potentia for every node of g."""
    if rho.dim != g.dim:
        raise DimensionMismatch(f"density has dim {rho.dim}, graph has dim {g.dim}")
    values = {i: born_value(rho, p) for i, p in enumerate(g.nodes)}
    return PSA(graph_ref=graph_fingerprint(g), values=values, source=rho)


def context_totals(psa: PSA, g: PowerGraph) -> dict[tuple[int, ...], float]:
    """Sum of potentiae over each full orthonormal context of g."""
    totals = {}
    for ctx in full_contexts(g):
        ids = tuple(ctx.sorted_ids())
        totals[ids] = sum(psa.values[i] for i in ids)
    return totals


def _context_vectors(ctx: Context, g: PowerGraph) -> dict[int, StateVector]:
    g.check_ids(ctx.node_ids)
    if len(ctx) != g.dim:
        raise IncompleteContext(f"context has {len(ctx)} nodes, a full context needs {g.dim}")
    ids = ctx.sorted_ids()
    total = sum(g.nodes[i].entries for i in ids)
    if np.linalg.norm(total - np.eye(g.dim), "fro") > g.dim * TOL_PROJ:
        raise IncompleteContext("context projectors do not resolve the identity")
    return {i: g.nodes[i].vector() for i in ids}


def _pure_vector(state: StateVector | DensityMatrix) -> StateVector:
    if isinstance(state, StateVector):
        return state
    eigenvalues, eigenvectors = state.eigh()
    if eigenvalues[-1] < PURE_THRESHOLD:
        raise MixedStateNotExpandable(
            f"largest eigenvalue {eigenvalues[-1]!r} is below the purity threshold"
        )
    return StateVector.normalized(eigenvectors[:, -1])


def superposition_from(
    state: StateVector | DensityMatrix, ctx: Context, g: PowerGraph
) -> QuantumSituation:
    """Expand a pure state in the basis of a full context: c_i = <a_i|v>.

    The global phase is fixed so the first nonzero coefficient, in node order,
    is real and positive.
    """
    v = _pure_vector(state)
    if v.dim != g.dim:
        raise DimensionMismatch(f"state has dim {v.dim}, graph has dim {g.dim}")
    vectors = _context_vectors(ctx, g)
    coefficients = {i: vectors[i].inner(v) for i in ctx.sorted_ids()}
    for i in ctx.sorted_ids():
        c = coefficients[i]
        if abs(c) > TOL_NORM:
            phase = abs(c) / c
            coefficients = {k: val * phase for k, val in coefficients.items()}
            break
    return QuantumSituation(context=ctx, coefficients=coefficients, basis_vectors=vectors)


def density_in_basis(qs: QuantumSituation) -> BasisDensity:
    """rho_{Psi,C}[i][j] = c_i conj(c_j)."""
    ids = qs.node_ids()
    matrix = {(i, j): qs.coefficients[i] * qs.coefficients[j].conjugate() for i in ids for j in ids}
    return BasisDensity(context=qs.context, coeff_matrix=matrix, basis_vectors=qs.basis_vectors)


def check_situation(qs: QuantumSituation, g: PowerGraph) -> None:
    """Raise unless qs expands over a context of g, node for node.

    Each basis vector must project onto the graph node carrying its id.
    """
    if qs.dim != g.dim:
        raise DimensionMismatch(f"superposition has dim {qs.dim}, graph has dim {g.dim}")
    g.check_ids(qs.context.node_ids)
    for i in qs.node_ids():
        p = projector_from_vector(qs.basis_vectors[i])
        if np.linalg.norm(p.entries - g.nodes[i].entries, "fro") > 10.0**-KEY_DECIMALS:
            raise UnknownNode(f"basis vector {i} does not project onto node {i} of the graph")


def psa_from_superposition(qs: QuantumSituation, g: PowerGraph) -> PSA:
    """The unique PSA whose superposition over qs.context is qs."""
    check_situation(qs, g)
    return evaluate_psa(density_from_vector(qs.vector()), g)


def rebase(qs: QuantumSituation, ctx: Context, g: PowerGraph) -> QuantumSituation:
    """The superposition of the same PSA over another context."""
    check_situation(qs, g)
    return superposition_from(qs.vector(), ctx, g)


def ontically_compatible(
    state: StateVector | DensityMatrix, contexts: Sequence[Context], g: PowerGraph
) -> bool:
    """True iff expanding state over each context yields one and the same PSA.

    A node shared by several contexts must receive the same potentia from
    every expansion, whether or not the contexts can be measured together.
    """
    if not contexts:
        raise EmptyInput("ontically_compatible needs at least one context")
    situations = [superposition_from(state, ctx, g) for ctx in contexts]
    seen: dict[int, float] = {}
    for qs in situations:
        for i, p in qs.potentiae().items():
            if abs(seen.setdefault(i, p) - p) > TOL_NORM:
                return False
    first, *rest = (psa_from_superposition(qs, g) for qs in situations)
    return all(first.agrees_with(other) for other in rest)
