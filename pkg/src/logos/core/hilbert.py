"""Finite-dimensional complex linear algebra substrate.

State vectors, density matrices, rank-1 projectors and unitaries are small
immutable wrappers around numpy arrays. Each type validates its invariants
at construction, so anything that exists is valid.
"""

from __future__ import annotations

import hashlib
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from typing import TypeVar

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.stats import unitary_group

from logos.core.errors import (
    DimensionMismatch,
    InvalidDensity,
    InvalidProjector,
    NonUnitary,
    NonUnitVector,
    RankNotSupported,
)

TOL_NORM = 1e-9
TOL_HERM = 1e-9
TOL_PROJ = 1e-9
TOL_UNIT = 1e-9
TOL_PSD = 1e-9

# Digits kept per real/imaginary entry when hashing projectors.
KEY_DECIMALS = 8

T = TypeVar("T")

ComplexArray = NDArray[np.complex128]


def _frozen(data: ArrayLike, ndim: int) -> ComplexArray:
    arr = np.array(data, dtype=np.complex128)
    if arr.ndim != ndim:
        raise DimensionMismatch(f"expected a {ndim}-d array, got shape {arr.shape}")
    if ndim == 2 and arr.shape[0] != arr.shape[1]:
        raise DimensionMismatch(f"matrix must be square, got shape {arr.shape}")
    if arr.size == 0:
        raise DimensionMismatch("empty array")
    arr.setflags(write=False)
    return arr


def _fro(m: ArrayLike) -> float:
    return float(np.linalg.norm(m, "fro"))


def fix_phase(v: ComplexArray, tol: float = TOL_NORM) -> ComplexArray:
    """Rotate v so that its first entry with modulus above tol is real-positive."""
    for entry in v:
        if abs(entry) > tol:
            return v * (abs(entry) / entry)
    return v


@dataclass(frozen=True, eq=False)
class StateVector:
    entries: ComplexArray

    def __post_init__(self) -> None:
        arr = _frozen(self.entries, 1)
        object.__setattr__(self, "entries", arr)
        norm = float(np.linalg.norm(arr))
        if abs(norm - 1.0) > TOL_NORM:
            raise NonUnitVector(f"vector norm is {norm!r}, expected 1")

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    @classmethod
    def normalized(cls, entries: ArrayLike) -> StateVector:
        arr = np.asarray(entries, dtype=np.complex128)
        norm = np.linalg.norm(arr)
        if norm == 0:
            raise NonUnitVector("cannot normalize the zero vector")
        return cls(arr / norm)

    def inner(self, other: StateVector) -> complex:
        """<self|other>."""
        _same_dim(self.dim, other.dim)
        return complex(np.vdot(self.entries, other.entries))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StateVector):
            return NotImplemented
        return self.dim == other.dim and bool(np.allclose(self.entries, other.entries, atol=TOL_NORM))


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    entries: ComplexArray

    def __post_init__(self) -> None:
        rho = _frozen(self.entries, 2)
        object.__setattr__(self, "entries", rho)
        if _fro(rho - rho.conj().T) > TOL_HERM:
            raise InvalidDensity("density matrix is not Hermitian")
        trace = complex(np.trace(rho))
        if abs(trace - 1.0) > TOL_NORM:
            raise InvalidDensity(f"density matrix trace is {trace!r}, expected 1")
        lowest = float(np.linalg.eigvalsh(rho).min())
        if lowest < -TOL_PSD:
            raise InvalidDensity(f"density matrix has negative eigenvalue {lowest!r}")

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    def eigh(self) -> tuple[NDArray[np.float64], ComplexArray]:
        return np.linalg.eigh(self.entries)

    def purity(self) -> float:
        return float(np.real(np.trace(self.entries @ self.entries)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DensityMatrix):
            return NotImplemented
        return self.dim == other.dim and _fro(self.entries - other.entries) <= TOL_NORM


@dataclass(frozen=True, eq=False)
class Projector:
    """Rank-1 orthogonal projector |a><a|, an immanent power."""

    entries: ComplexArray
    rank: int = 1
    canonical_key: str = field(init=False, default="")

    def __post_init__(self) -> None:
        p = _frozen(self.entries, 2)
        object.__setattr__(self, "entries", p)
        if self.rank != 1:
            raise RankNotSupported(f"only rank-1 projectors are supported, got rank {self.rank}")
        if _fro(p - p.conj().T) > TOL_HERM:
            raise InvalidProjector("projector is not Hermitian")
        if _fro(p @ p - p) > TOL_PROJ:
            raise InvalidProjector("projector is not idempotent")
        trace = float(np.real(np.trace(p)))
        if abs(trace - self.rank) > TOL_NORM:
            if trace > 1.5:
                raise RankNotSupported(f"projector has rank {round(trace)}; only rank 1 is supported")
            raise InvalidProjector(f"projector trace is {trace!r}, expected {self.rank}")
        object.__setattr__(self, "canonical_key", _canonical_key(p))

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    def vector(self) -> StateVector:
        """Unit vector spanning the range, first nonzero entry real-positive."""
        _, vecs = np.linalg.eigh(self.entries)
        return StateVector(fix_phase(vecs[:, -1]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Projector):
            return NotImplemented
        return self.canonical_key == other.canonical_key

    def __hash__(self) -> int:
        return hash(self.canonical_key)


@dataclass(frozen=True, eq=False)
class Unitary:
    entries: ComplexArray

    def __post_init__(self) -> None:
        u = _frozen(self.entries, 2)
        object.__setattr__(self, "entries", u)
        if _fro(u.conj().T @ u - np.eye(u.shape[0])) > TOL_UNIT:
            raise NonUnitary("matrix is not unitary")

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    def apply(self, v: StateVector) -> StateVector:
        _same_dim(self.dim, v.dim)
        return StateVector(self.entries @ v.entries)


def _canonical_key(p: ComplexArray) -> str:
    # Adding 0.0 folds -0.0 into 0.0 so that keys do not depend on signed zeros.
    re = np.round(p.real, KEY_DECIMALS) + 0.0
    im = np.round(p.imag, KEY_DECIMALS) + 0.0
    text = ";".join(f"{a:.{KEY_DECIMALS}f},{b:.{KEY_DECIMALS}f}" for a, b in zip(re.ravel(), im.ravel()))
    digest = hashlib.sha256(f"{p.shape[0]}|{text}".encode()).hexdigest()
    return digest[:20]


def _same_dim(a: int, b: int) -> None:
    if a != b:
        raise DimensionMismatch(f"dimension mismatch: {a} vs {b}")


# ============================================
# Operations
# ============================================

def projector_from_vector(v: StateVector) -> Projector:
    """|v><v| for a unit vector v."""
    if abs(float(np.linalg.norm(v.entries)) - 1.0) > TOL_NORM:
        raise NonUnitVector("projector_from_vector needs a unit vector")
    return Projector(np.outer(v.entries, v.entries.conj()))


def commutes(p: Projector, q: Projector, tol: float = TOL_PROJ) -> bool:
    """True iff ||PQ - QP||_F <= tol."""
    _same_dim(p.dim, q.dim)
    a, b = p.entries, q.entries
    return _fro(a @ b - b @ a) <= tol


def born_value(rho: DensityMatrix, p: Projector) -> float:
    """Potentia Tr[rho P], clamped into [0, 1] after a sanity band check."""
    _same_dim(rho.dim, p.dim)
    raw = complex(np.trace(rho.entries @ p.entries))
    if abs(raw.imag) > TOL_HERM:
        raise InvalidDensity(f"Tr[rho P] has imaginary part {raw.imag!r}")
    value = raw.real
    if value < -TOL_NORM or value > 1.0 + TOL_NORM:
        raise InvalidDensity(f"Tr[rho P] = {value!r} lies outside [0, 1]")
    return min(1.0, max(0.0, value))


def conjugate_by(u: Unitary, p: Projector) -> Projector:
    """U P U^dagger."""
    _same_dim(u.dim, p.dim)
    m = u.entries
    return Projector(m @ p.entries @ m.conj().T)


def conjugate_density(u: Unitary, rho: DensityMatrix) -> DensityMatrix:
    _same_dim(u.dim, rho.dim)
    m = u.entries
    return DensityMatrix(m @ rho.entries @ m.conj().T)


def density_from_vector(v: StateVector) -> DensityMatrix:
    return DensityMatrix(np.outer(v.entries, v.entries.conj()))


def maximally_mixed(dim: int) -> DensityMatrix:
    return DensityMatrix(np.eye(dim) / dim)


def trace_distance(a: DensityMatrix, b: DensityMatrix) -> float:
    _same_dim(a.dim, b.dim)
    return 0.5 * float(np.abs(np.linalg.eigvalsh(a.entries - b.entries)).sum())


def random_density(dim: int, seed: int) -> DensityMatrix:
    """Full-rank random state rho = G G^dagger / Tr, G complex Ginibre."""
    if dim < 2:
        raise DimensionMismatch("random_density needs dim >= 2")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = g @ g.conj().T
    rho = (rho + rho.conj().T) / 2
    return DensityMatrix(rho / np.trace(rho).real)


def random_unitary(dim: int, seed: int) -> Unitary:
    """Haar-random unitary (QR of a complex Ginibre matrix, via scipy)."""
    if dim < 2:
        raise DimensionMismatch("random_unitary needs dim >= 2")
    return Unitary(unitary_group.rvs(dim, random_state=np.random.default_rng(seed)))


def random_state(dim: int, seed: int) -> StateVector:
    if dim < 2:
        raise DimensionMismatch("random_state needs dim >= 2")
    rng = np.random.default_rng(seed)
    return StateVector.normalized(rng.standard_normal(dim) + 1j * rng.standard_normal(dim))


# ============================================
# Named bases and gates
# ============================================

def computational_basis(dim: int) -> list[StateVector]:
    return [StateVector(row) for row in np.eye(dim)]


def fourier_basis(dim: int) -> list[StateVector]:
    """Columns of the discrete Fourier transform, unbiased to the computational basis."""
    f = fourier_unitary(dim).entries
    return [StateVector(f[:, k]) for k in range(dim)]


def spin_basis(axis: str) -> list[StateVector]:
    """Spin-1/2 eigenbasis along x, y or z, ordered (up, down)."""
    s = 1 / np.sqrt(2)
    bases = {
        "z": [[1, 0], [0, 1]],
        "x": [[s, s], [s, -s]],
        "y": [[s, 1j * s], [s, -1j * s]],
    }
    try:
        rows = bases[axis.lower()]
    except KeyError:
        raise ValueError(f"unknown spin axis {axis!r}; use x, y or z") from None
    return [StateVector(r) for r in rows]


def mutually_unbiased_bases(dim: int) -> list[list[StateVector]]:
    """A complete set of dim + 1 MUBs for dim = 2 or an odd prime."""
    if dim == 2:
        return [spin_basis("z"), spin_basis("x"), spin_basis("y")]
    if dim < 3 or any(dim % k == 0 for k in range(2, int(dim**0.5) + 1)):
        raise DimensionMismatch(f"MUB construction needs dim = 2 or an odd prime, got {dim}")
    omega = np.exp(2j * np.pi / dim)
    j = np.arange(dim)
    bases = [computational_basis(dim)]
    for k in range(dim):
        bases.append([
            StateVector(omega ** ((k * j * j + m * j) % dim) / np.sqrt(dim)) for m in range(dim)
        ])
    return bases


def hadamard() -> Unitary:
    return Unitary(np.array([[1, 1], [1, -1]]) / np.sqrt(2))


def pauli_x() -> Unitary:
    return Unitary(np.array([[0, 1], [1, 0]]))


def fourier_unitary(dim: int) -> Unitary:
    j = np.arange(dim)
    return Unitary(np.exp(2j * np.pi * np.outer(j, j) / dim) / np.sqrt(dim))


def identity(dim: int) -> Unitary:
    return Unitary(np.eye(dim))


def basis_projectors(basis: Sequence[StateVector]) -> list[Projector]:
    return [projector_from_vector(v) for v in basis]


def is_orthonormal(basis: Sequence[StateVector], tol: float = TOL_NORM) -> bool:
    """Pairwise inner products within tol of the Kronecker delta."""
    if not basis:
        return False
    dims = {v.dim for v in basis}
    if len(dims) != 1:
        raise DimensionMismatch(f"basis vectors have mixed dimensions {sorted(dims)}")
    m = np.array([v.entries for v in basis])
    gram = m.conj() @ m.T
    return bool(np.abs(gram - np.eye(len(basis))).max() <= tol)


def _qubit_only(name: str, make: Callable[[], T]) -> Callable[[int], T]:
    def build(dim: int) -> T:
        if dim != 2:
            raise DimensionMismatch(f"{name!r} is only defined for dim 2, got {dim}")
        return make()

    return build


NAMED_BASES = {
    "z": lambda dim: spin_basis("z") if dim == 2 else computational_basis(dim),
    "x": _qubit_only("x", lambda: spin_basis("x")),
    "y": _qubit_only("y", lambda: spin_basis("y")),
    "computational": computational_basis,
    "fourier": fourier_basis,
}

NAMED_UNITARIES = {
    "hadamard": _qubit_only("hadamard", hadamard),
    "pauli-x": _qubit_only("pauli-x", pauli_x),
    "fourier": fourier_unitary,
    "identity": identity,
}
