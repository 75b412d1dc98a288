from logos.core.hilbert import DensityMatrix, Projector, StateVector, Unitary
from logos.core.ksvaluation import Outcome, find_binary_valuation, ks_for_superposition
from logos.core.powergraph import Context, PowerGraph, build_graph, maximal_contexts
from logos.core.psa import PSA, QuantumSituation, evaluate_psa, superposition_from

__all__ = [
    "DensityMatrix",
    "Projector",
    "StateVector",
    "Unitary",
    "Outcome",
    "find_binary_valuation",
    "ks_for_superposition",
    "Context",
    "PowerGraph",
    "build_graph",
    "maximal_contexts",
    "PSA",
    "QuantumSituation",
    "evaluate_psa",
    "superposition_from",
]
