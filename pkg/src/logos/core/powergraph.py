"""The graph of immanent powers.

Nodes are rank-1 projectors, deduplicated by canonical key and numbered in
first-seen order. Two nodes are adjacent iff they commute; the relation is
reflexive and symmetric but not transitive. Contexts are complete
subgraphs, and maximal contexts are maximal cliques.
"""

from __future__ import annotations

import hashlib
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import networkx as nx
import numpy as np
from numpy.typing import NDArray

from logos.core.errors import DimensionMismatch, EmptyInput, NonOrthonormalBasis, UnknownNode
from logos.core.hilbert import (
    TOL_PROJ,
    Projector,
    StateVector,
    Unitary,
    basis_projectors,
    commutes,
    conjugate_by,
    is_orthonormal,
)
from logos.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class PowerGraph:
    dim: int
    nodes: tuple[Projector, ...]
    adjacency: NDArray[np.bool_]
    tol: float = TOL_PROJ

    def __len__(self) -> int:
        return len(self.nodes)

    def neighbors(self, node_id: int) -> frozenset[int]:
        """Adjacent nodes, excluding the implicit self-loop."""
        row = self.adjacency[node_id]
        return frozenset(int(j) for j in np.flatnonzero(row) if j != node_id)

    def edges(self) -> list[tuple[int, int]]:
        """Non-loop edges as (i, j) with i < j."""
        upper = np.triu(self.adjacency, k=1)
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(upper))]

    def index_of(self, p: Projector) -> int | None:
        for i, node in enumerate(self.nodes):
            if node.canonical_key == p.canonical_key:
                return i
        return None

    def check_ids(self, node_ids: Iterable[int]) -> None:
        for i in node_ids:
            if not 0 <= i < len(self.nodes):
                raise UnknownNode(f"node {i} is not in the graph ({len(self.nodes)} nodes)")


@dataclass(frozen=True)
class Context:
    node_ids: frozenset[int]
    is_maximal: bool = False

    def sorted_ids(self) -> list[int]:
        return sorted(self.node_ids)

    def __len__(self) -> int:
        return len(self.node_ids)


# ============================================
# Construction
# ============================================

def build_graph(projectors: Sequence[Projector], tol: float = TOL_PROJ) -> PowerGraph:
    """Deduplicate projectors and derive the commutation adjacency."""
    if not projectors:
        raise EmptyInput("build_graph needs at least one projector")
    dims = {p.dim for p in projectors}
    if len(dims) != 1:
        raise DimensionMismatch(f"projectors have mixed dimensions {sorted(dims)}")

    seen: dict[str, int] = {}
    nodes: list[Projector] = []
    for p in projectors:
        if p.canonical_key not in seen:
            seen[p.canonical_key] = len(nodes)
            nodes.append(p)

    n = len(nodes)
    adjacency = np.eye(n, dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            if commutes(nodes[i], nodes[j], tol):
                adjacency[i, j] = adjacency[j, i] = True
    adjacency.setflags(write=False)

    logger.debug("built graph: %d nodes, %d edges", n, int(np.triu(adjacency, 1).sum()))
    return PowerGraph(dim=dims.pop(), nodes=tuple(nodes), adjacency=adjacency, tol=tol)


def add_projectors(g: PowerGraph, projectors: Sequence[Projector]) -> PowerGraph:
    """A new graph with extra nodes appended; existing ids are kept."""
    return build_graph([*g.nodes, *projectors], g.tol)


def graph_fingerprint(g: PowerGraph) -> str:
    """Stable identifier of a graph: hash of its ordered node keys."""
    text = f"{g.dim}|{g.tol!r}|" + ",".join(p.canonical_key for p in g.nodes)
    return "graph:" + hashlib.sha256(text.encode()).hexdigest()[:16]


# ============================================
# Contexts
# ============================================

def is_context(g: PowerGraph, node_ids: Iterable[int]) -> bool:
    """True iff the induced subgraph on node_ids is complete."""
    ids = sorted(set(node_ids))
    g.check_ids(ids)
    sub = g.adjacency[np.ix_(ids, ids)]
    return bool(sub.all())


def _is_maximal(g: PowerGraph, ids: frozenset[int]) -> bool:
    if not ids:
        return False
    members = sorted(ids)
    common = g.adjacency[:, members].all(axis=1)
    return not any(common[k] and k not in ids for k in range(len(g.nodes)))


def commutation_graph(g: PowerGraph) -> nx.Graph:
    """The adjacency as a networkx graph, without the reflexive self-loops."""
    a = g.adjacency.astype(np.int8)
    np.fill_diagonal(a, 0)
    return nx.from_numpy_array(a)


def maximal_contexts(g: PowerGraph) -> list[Context]:
    """All maximal cliques, sorted lexicographically by their sorted node ids.

    Enumerated with networkx's pivoting Bron-Kerbosch; sorting the result makes
    the order independent of the traversal.
    """
    found = sorted(tuple(sorted(c)) for c in nx.find_cliques(commutation_graph(g)))
    logger.debug("maximal contexts: %d cliques over %d nodes", len(found), len(g.nodes))
    return [Context(frozenset(c), is_maximal=True) for c in found]


def full_contexts(g: PowerGraph) -> list[Context]:
    """Maximal contexts of size dim, i.e. resolutions of the identity."""
    return [c for c in maximal_contexts(g) if len(c) == g.dim]


def contexts_containing(g: PowerGraph, node_id: int) -> list[Context]:
    g.check_ids([node_id])
    return [c for c in maximal_contexts(g) if node_id in c.node_ids]


def epistemically_incompatible(g: PowerGraph, a: Context, b: Context) -> bool:
    """True iff the two contexts cannot be measured together.

    That is the case as soon as one node of a fails to commute with one node of b.
    """
    g.check_ids(a.node_ids | b.node_ids)
    sub = g.adjacency[np.ix_(a.sorted_ids(), b.sorted_ids())]
    return not bool(sub.all())


def context_from_basis(g: PowerGraph, basis: Sequence[StateVector]) -> tuple[PowerGraph, Context]:
    """Insert the projectors of an orthonormal basis and return their context."""
    if not is_orthonormal(basis):
        raise NonOrthonormalBasis("basis vectors are not orthonormal")
    if basis[0].dim != g.dim:
        raise DimensionMismatch(f"basis has dim {basis[0].dim}, graph has dim {g.dim}")

    projectors = basis_projectors(basis)
    missing = [p for p in projectors if g.index_of(p) is None]
    updated = add_projectors(g, missing) if missing else g
    ids = frozenset(updated.index_of(p) for p in projectors)  # type: ignore[misc]
    return updated, Context(ids, is_maximal=_is_maximal(updated, ids))


def graph_from_bases(bases: Sequence[Sequence[StateVector]], tol: float = TOL_PROJ) -> PowerGraph:
    """Graph holding every projector of the given orthonormal bases."""
    if not bases:
        raise EmptyInput("graph_from_bases needs at least one basis")
    projectors: list[Projector] = []
    for basis in bases:
        if not is_orthonormal(basis):
            raise NonOrthonormalBasis("basis vectors are not orthonormal")
        projectors.extend(basis_projectors(basis))
    return build_graph(projectors, tol)


def context_of(g: PowerGraph, projectors: Iterable[Projector]) -> Context:
    """Context formed by projectors already present in g."""
    ids = []
    for p in projectors:
        i = g.index_of(p)
        if i is None:
            raise UnknownNode("projector is not a node of the graph")
        ids.append(i)
    frozen = frozenset(ids)
    return Context(frozen, is_maximal=_is_maximal(g, frozen))


def generate_graph(
    seed_basis: Sequence[StateVector],
    unitaries: Sequence[Unitary],
    depth: int,
    tol: float = TOL_PROJ,
) -> PowerGraph:
    """Close a seed context under conjugation by the unitaries, depth times."""
    if not unitaries and depth > 0:
        raise EmptyInput("generate_graph needs at least one unitary")
    if not is_orthonormal(seed_basis):
        raise NonOrthonormalBasis("seed basis is not orthonormal")
    dim = seed_basis[0].dim
    for u in unitaries:
        if u.dim != dim:
            raise DimensionMismatch(f"unitary has dim {u.dim}, seed basis has dim {dim}")

    seed = basis_projectors(seed_basis)
    projectors = list(seed)
    seen = {frozenset(p.canonical_key for p in seed)}
    frontier = [seed]
    for level in range(depth):
        next_frontier = []
        for context in frontier:
            for u in unitaries:
                rotated = [conjugate_by(u, p) for p in context]
                key = frozenset(p.canonical_key for p in rotated)
                if key in seen:
                    continue
                seen.add(key)
                projectors.extend(rotated)
                next_frontier.append(rotated)
        logger.debug("generation level %d: %d new contexts", level + 1, len(next_frontier))
        if not next_frontier:
            break
        frontier = next_frontier
    return build_graph(projectors, tol)
