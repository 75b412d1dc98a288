__version__ = "0.1.0"
from logos.core import (
    PSA,
    Context,
    DensityMatrix,
    PowerGraph,
    Projector,
    QuantumSituation,
    StateVector,
    build_graph,
    evaluate_psa,
    find_binary_valuation,
)
__all__ = [
    "PSA",
    "Context",
    "DensityMatrix",
    "PowerGraph",
    "Projector",
    "QuantumSituation",
    "StateVector",
    "build_graph",
    "evaluate_psa",
    "find_binary_valuation",
    "__version__",
]
