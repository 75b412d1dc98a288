"""Actual effectuations drawn from a quantum situation.

Each trial actualizes exactly one power of the context, node i with
probability |c_i|^2. Sampling reads the situation and never changes it.
Draws use numpy's PCG64 generator through inverse-CDF lookup, so a seed
replays the same log.
"""

from __future__ import annotations

import hashlib
from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass
from types import MappingProxyType

import numpy as np

from logos.core.psa import QuantumSituation

GENERATOR = "PCG64"


@dataclass(frozen=True, eq=False)
class TrialLog:
    qs_ref: QuantumSituation
    seed: int
    outcomes: tuple[int, ...]
    counts: Mapping[int, int]
    generator: str = GENERATOR

    @property
    def trials(self) -> int:
        return len(self.outcomes)

    def frequencies(self) -> dict[int, float]:
        return {i: c / self.trials for i, c in self.counts.items()}


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _cumulative(qs: QuantumSituation) -> tuple[list[int], np.ndarray, int]:
    ids = qs.node_ids()
    weights = np.array([abs(qs.coefficients[i]) ** 2 for i in ids])
    cdf = np.cumsum(weights)
    # The last bucket with positive weight absorbs rounding slack at the top.
    last = int(np.flatnonzero(weights > 0)[-1])
    return ids, cdf, last


def _lookup(cdf: np.ndarray, last: int, u: np.ndarray) -> np.ndarray:
    idx = np.searchsorted(cdf, u, side="right")
    return np.minimum(idx, last)


def sample_actualization(qs: QuantumSituation, rng: np.random.Generator) -> int:
    """One actual effectuation: the node id that actualizes."""
    ids, cdf, last = _cumulative(qs)
    return ids[int(_lookup(cdf, last, np.array([rng.random()]))[0])]


def run_trials(qs: QuantumSituation, n: int, seed: int) -> TrialLog:
    """n independent actualizations; identical seeds give identical logs."""
    if n < 1:
        raise ValueError("run_trials needs n >= 1")
    ids, cdf, last = _cumulative(qs)
    draws = _lookup(cdf, last, make_rng(seed).random(n))
    outcomes = tuple(ids[k] for k in draws.tolist())
    tally = Counter(outcomes)
    counts = MappingProxyType({i: tally.get(i, 0) for i in ids})
    return TrialLog(qs_ref=qs, seed=seed, outcomes=outcomes, counts=counts)


def situation_digest(qs: QuantumSituation) -> str:
    """Hash of the byte serialization of a situation and its potentiae."""
    h = hashlib.sha256()
    for i in qs.node_ids():
        h.update(str(i).encode())
        h.update(np.complex128(qs.coefficients[i]).tobytes())
        h.update(qs.basis_vectors[i].entries.tobytes())
        h.update(np.float64(abs(qs.coefficients[i]) ** 2).tobytes())
    return h.hexdigest()


def immanence_check(qs: QuantumSituation, log: TrialLog) -> bool:
    """Replaying a log leaves the situation byte-identical and reproduces it."""
    before = situation_digest(qs)
    members = set(qs.node_ids())
    if any(o not in members for o in log.outcomes):
        return False
    if sum(log.counts.values()) != log.trials:
        return False
    replay = run_trials(qs, log.trials, log.seed)
    return situation_digest(qs) == before and replay.outcomes == log.outcomes
