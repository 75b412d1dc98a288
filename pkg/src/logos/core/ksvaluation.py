"""Global binary valuations and the Kochen-Specker obstruction.

A global binary valuation assigns 0 or 1 to every node, once, independent of
context. Every full context (a resolution of the identity) must hold exactly
one 1, and two orthogonal nodes can never both be 1. The search either
returns a witness, proves that none exists, or stops at its budget.
"""

from __future__ import annotations

import time
from collections import deque
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType

from logos.core.errors import InvalidValuation, MissingNodeValue, UnknownNode
from logos.core.powergraph import Context, PowerGraph, full_contexts, is_context
from logos.core.psa import QuantumSituation, check_situation
from logos.utils.logging import get_logger

logger = get_logger(__name__)

DEFAULT_BUDGET = 10**8
_UNSET = -1


class Outcome(str, Enum):
    FOUND = "found"
    IMPOSSIBLE = "impossible"
    EXHAUSTED = "exhausted"


@dataclass(frozen=True, eq=False)
class BinaryValuation:
    values: Mapping[int, int]

    def __post_init__(self) -> None:
        bad = {k: v for k, v in self.values.items() if v not in (0, 1)}
        if bad:
            raise InvalidValuation(f"binary valuation has non-binary values {bad}")
        ordered = {int(k): int(self.values[k]) for k in sorted(self.values)}
        object.__setattr__(self, "values", MappingProxyType(ordered))

    def true_nodes(self) -> list[int]:
        return [k for k, v in self.values.items() if v == 1]


@dataclass(frozen=True)
class ValuationVerdict:
    outcome: Outcome
    valuation: BinaryValuation | None = None
    nodes_searched: int = 0
    elapsed: float = field(default=0.0, compare=False)

    @property
    def found(self) -> bool:
        return self.outcome is Outcome.FOUND


def verify_valuation(g: PowerGraph, val: BinaryValuation, contexts: Sequence[Context]) -> bool:
    """True iff every supplied full-size context holds exactly one 1."""
    missing = [i for i in range(len(g.nodes)) if i not in val.values]
    if missing:
        raise MissingNodeValue(f"valuation has no value for nodes {missing}")
    for ctx in contexts:
        g.check_ids(ctx.node_ids)
        if len(ctx) == g.dim and sum(val.values[i] for i in ctx.node_ids) != 1:
            return False
    return True


class _BudgetExhausted(Exception):
    pass


class _Search:
    """Backtracking with unit propagation over a fixed node subset."""

    def __init__(self, g: PowerGraph, nodes: Iterable[int], budget: int) -> None:
        self.nodes = sorted(set(nodes))
        members = set(self.nodes)
        self.contexts = [
            tuple(c.sorted_ids()) for c in full_contexts(g) if c.node_ids <= members
        ]
        self.orthogonal = {i: sorted(g.neighbors(i) & members) for i in self.nodes}
        self.contexts_of: dict[int, list[int]] = {i: [] for i in self.nodes}
        for k, ctx in enumerate(self.contexts):
            for i in ctx:
                self.contexts_of[i].append(k)
        self.assign = {i: _UNSET for i in self.nodes}
        self.budget = budget
        self.visits = 0

    def _propagate(self, node: int, value: int, trail: list[int]) -> bool:
        queue = deque([(node, value)])
        while queue:
            n, v = queue.popleft()
            current = self.assign[n]
            if current == v:
                continue
            if current != _UNSET:
                return False
            self.assign[n] = v
            trail.append(n)
            if v == 1:
                queue.extend((m, 0) for m in self.orthogonal[n])
            for k in self.contexts_of[n]:
                ctx = self.contexts[k]
                ones = sum(1 for i in ctx if self.assign[i] == 1)
                free = [i for i in ctx if self.assign[i] == _UNSET]
                if ones > 1 or (ones == 0 and not free):
                    return False
                if ones == 0 and len(free) == 1:
                    queue.append((free[0], 1))
        return True

    def _undo(self, trail: list[int], mark: int) -> None:
        while len(trail) > mark:
            self.assign[trail.pop()] = _UNSET

    def _choose(self) -> int | None:
        """First free node of the open context with fewest free members."""
        best: tuple[int, int] | None = None
        for k, ctx in enumerate(self.contexts):
            if any(self.assign[i] == 1 for i in ctx):
                continue
            free = [i for i in ctx if self.assign[i] == _UNSET]
            if best is None or len(free) < best[0]:
                best = (len(free), free[0])
        return None if best is None else best[1]

    def _solve(self, trail: list[int]) -> bool:
        node = self._choose()
        if node is None:
            return True
        for value in (1, 0):
            self.visits += 1
            if self.visits > self.budget:
                raise _BudgetExhausted
            mark = len(trail)
            if self._propagate(node, value, trail) and self._solve(trail):
                return True
            self._undo(trail, mark)
        return False

    def run(self) -> Outcome:
        try:
            if not self._solve([]):
                return Outcome.IMPOSSIBLE
        except _BudgetExhausted:
            return Outcome.EXHAUSTED
        # Nodes outside every open context stay free; 0 never breaks a constraint.
        for i in self.nodes:
            if self.assign[i] == _UNSET:
                self.assign[i] = 0
        return Outcome.FOUND


def _search(g: PowerGraph, nodes: Iterable[int], budget: int) -> ValuationVerdict:
    start = time.perf_counter()
    search = _Search(g, nodes, budget)
    outcome = search.run()
    elapsed = time.perf_counter() - start
    valuation = BinaryValuation(dict(search.assign)) if outcome is Outcome.FOUND else None
    logger.info(
        "KS search over %d nodes, %d full contexts: %s after %d visits (%.3fs)",
        len(search.nodes),
        len(search.contexts),
        outcome.value,
        search.visits,
        elapsed,
    )
    return ValuationVerdict(outcome, valuation, search.visits, elapsed)


def find_binary_valuation(g: PowerGraph, budget: int = DEFAULT_BUDGET) -> ValuationVerdict:
    """Search for a global binary valuation of the whole graph."""
    return _search(g, range(len(g.nodes)), budget)


def reachable_nodes(g: PowerGraph, start: Context) -> set[int]:
    """Nodes of the full contexts linked to start through shared nodes."""
    contexts = [c.node_ids for c in full_contexts(g)]
    reached = set(start.node_ids)
    frontier = True
    while frontier:
        frontier = False
        for ctx in contexts:
            if ctx & reached and not ctx <= reached:
                reached |= ctx
                frontier = True
    return reached


def ks_for_superposition(
    qs: QuantumSituation, g: PowerGraph, budget: int = DEFAULT_BUDGET
) -> ValuationVerdict:
    """Binary-valuation search restricted to contexts reachable from qs.context.

    An IMPOSSIBLE verdict means the terms of this superposition cannot be read
    as definite-valued properties of a system.
    """
    check_situation(qs, g)
    if not is_context(g, qs.context.node_ids):
        raise UnknownNode("superposition context is not a context of the graph")
    return _search(g, reachable_nodes(g, qs.context), budget)
