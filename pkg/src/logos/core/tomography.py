"""Recovering the density matrix from Born statistics over several contexts.

Linear inversion on a real Hermitian parameterization, followed by
projection onto the positive semi-definite cone.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from types import MappingProxyType

import numpy as np
from numpy.typing import NDArray

from logos.core.errors import (
    DimensionMismatch,
    EmptyInput,
    InconsistentRecords,
    IncompleteContext,
    NotPure,
    Underdetermined,
)
from logos.core.hilbert import (
    TOL_NORM,
    DensityMatrix,
    StateVector,
    fix_phase,
    born_value,
    mutually_unbiased_bases,
    random_unitary,
)
from logos.core.powergraph import Context, PowerGraph
from logos.core.psa import PURE_THRESHOLD
from logos.utils.logging import get_logger

logger = get_logger(__name__)

# Largest residual accepted for exact (shot-free) records.
EXACT_RESIDUAL_TOL = 1e-6
# Residual allowance per record row in units of 1/sqrt(shots).
SHOT_RESIDUAL_SIGMAS = 5.0


@dataclass(frozen=True, eq=False)
class MeasurementRecord:
    context: Context
    probabilities: Mapping[int, float]
    shots: int | None = None

    def __post_init__(self) -> None:
        if set(self.probabilities) != set(self.context.node_ids):
            raise IncompleteContext("record probabilities must cover the context exactly")
        if self.shots is not None and self.shots < 1:
            raise ValueError("shots must be positive")
        for node_id, p in self.probabilities.items():
            if not 0.0 <= p <= 1.0:
                raise InconsistentRecords(f"probability of node {node_id} is {p!r}, outside [0, 1]")
        total = sum(self.probabilities.values())
        if abs(total - 1.0) > self.sum_tolerance:
            raise InconsistentRecords(f"record probabilities sum to {total!r}")
        ordered = {int(k): float(self.probabilities[k]) for k in sorted(self.probabilities)}
        object.__setattr__(self, "probabilities", MappingProxyType(ordered))

    @property
    def sum_tolerance(self) -> float:
        if self.shots is None:
            return len(self.context) * TOL_NORM
        return 4.0 / np.sqrt(self.shots)


def _parameter_row(p: NDArray[np.complex128]) -> NDArray[np.float64]:
    """Coefficients of Tr[rho P] in the real parameters of a Hermitian rho.

    Parameters are the d real diagonal entries, then (Re, Im) of rho[j, k]
    for j < k in row-major order.
    """
    d = p.shape[0]
    row = [p[j, j].real for j in range(d)]
    for j in range(d):
        for k in range(j + 1, d):
            row.append(2.0 * p[j, k].real)
            row.append(2.0 * p[j, k].imag)
    return np.array(row)


def _density_from_parameters(theta: NDArray[np.float64], d: int) -> NDArray[np.complex128]:
    rho = np.zeros((d, d), dtype=np.complex128)
    rho[np.diag_indices(d)] = theta[:d]
    pos = d
    for j in range(d):
        for k in range(j + 1, d):
            rho[j, k] = theta[pos] + 1j * theta[pos + 1]
            rho[k, j] = np.conj(rho[j, k])
            pos += 2
    return rho


def _design(
    records: Sequence[MeasurementRecord], g: PowerGraph
) -> tuple[NDArray[np.float64], NDArray[np.float64], NDArray[np.float64]]:
    """Design matrix, targets and per-row residual tolerances (trace row last)."""
    rows, targets, tolerances = [], [], []
    for record in records:
        g.check_ids(record.context.node_ids)
        row_tol = (
            EXACT_RESIDUAL_TOL
            if record.shots is None
            else SHOT_RESIDUAL_SIGMAS / np.sqrt(record.shots)
        )
        for node_id, p in record.probabilities.items():
            rows.append(_parameter_row(g.nodes[node_id].entries))
            targets.append(p)
            tolerances.append(row_tol)
    trace_row = np.concatenate([np.ones(g.dim), np.zeros(g.dim * (g.dim - 1))])
    rows.append(trace_row)
    targets.append(1.0)
    tolerances.append(EXACT_RESIDUAL_TOL)
    return np.array(rows), np.array(targets), np.array(tolerances)


def is_informationally_complete(records: Sequence[MeasurementRecord], g: PowerGraph) -> bool:
    """True iff the Born map over the recorded projectors fixes rho."""
    if not records:
        return False
    a, _, _ = _design(records, g)
    return int(np.linalg.matrix_rank(a)) == g.dim**2


def project_psd(rho: NDArray[np.complex128]) -> NDArray[np.complex128]:
    """Clip negative eigenvalues to zero and renormalize the trace."""
    hermitian = (rho + rho.conj().T) / 2
    eigenvalues, eigenvectors = np.linalg.eigh(hermitian)
    clipped = np.clip(eigenvalues, 0.0, None)
    if clipped.sum() <= 0:
        raise InconsistentRecords("records do not describe any positive state")
    clipped /= clipped.sum()
    return (eigenvectors * clipped) @ eigenvectors.conj().T


def reconstruct(records: Sequence[MeasurementRecord], g: PowerGraph) -> DensityMatrix:
    """Least-squares inversion of Tr[rho P_k] = p_k, then PSD projection."""
    if not records:
        raise EmptyInput("reconstruct needs at least one record")
    a, b, tolerances = _design(records, g)
    rank = int(np.linalg.matrix_rank(a))
    if rank < g.dim**2:
        raise Underdetermined(f"records fix {rank} of {g.dim**2} real parameters")

    theta, *_ = np.linalg.lstsq(a, b, rcond=None)
    residuals = np.abs(a @ theta - b)
    worst = int(np.argmax(residuals - tolerances))
    if residuals[worst] > tolerances[worst]:
        raise InconsistentRecords(
            f"residual {residuals[worst]:.3g} exceeds the noise allowance {tolerances[worst]:.3g}"
        )
    logger.debug("tomography: %d rows, max residual %.3g", len(b), float(residuals.max()))
    return DensityMatrix(project_psd(_density_from_parameters(theta, g.dim)))


def recover_vector(rho_hat: DensityMatrix) -> StateVector:
    """Dominant eigenvector of a pure density matrix."""
    eigenvalues, eigenvectors = rho_hat.eigh()
    if eigenvalues[-1] < PURE_THRESHOLD:
        raise NotPure(f"largest eigenvalue {eigenvalues[-1]!r} is below the purity threshold")
    return StateVector.normalized(fix_phase(eigenvectors[:, -1]))


def measure_contexts(
    rho: DensityMatrix,
    g: PowerGraph,
    contexts: Sequence[Context],
    shots: int | None = None,
    seed: int | None = None,
) -> list[MeasurementRecord]:
    """Exact Born statistics, or multinomial frequencies when shots is given."""
    if rho.dim != g.dim:
        raise DimensionMismatch(f"density has dim {rho.dim}, graph has dim {g.dim}")
    rng = np.random.default_rng(seed)
    records = []
    for ctx in contexts:
        ids = ctx.sorted_ids()
        g.check_ids(ids)
        probs = np.array([born_value(rho, g.nodes[i]) for i in ids])
        if shots is not None:
            counts = rng.multinomial(shots, probs / probs.sum())
            probs = counts / shots
        records.append(MeasurementRecord(ctx, dict(zip(ids, probs.tolist())), shots))
    return records


def tomographic_bases(dim: int, seed: int = 0) -> list[list[StateVector]]:
    """A fixed informationally complete family of orthonormal bases.

    Mutually unbiased bases where a construction is available, otherwise the
    computational basis plus dim + 2 Haar-random bases.
    """
    try:
        return mutually_unbiased_bases(dim)
    except DimensionMismatch:
        pass
    bases = [[StateVector(row) for row in np.eye(dim)]]
    for k in range(dim + 2):
        u = random_unitary(dim, seed + k).entries
        bases.append([StateVector(u[:, j]) for j in range(dim)])
    return bases
