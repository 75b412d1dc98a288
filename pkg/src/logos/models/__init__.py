"""JSON wire formats.

Matrices and vectors are stored as separate real and imaginary parts,
row-major. Node ids are the graph's insertion indices and are written as
strings wherever they key a JSON object.
"""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field, model_validator


class MatrixPayload(BaseModel):
    dim: int = Field(..., gt=0)
    re: list[list[float]]
    im: list[list[float]]

    @model_validator(mode="after")
    def _check_shape(self) -> "MatrixPayload":
        for part in (self.re, self.im):
            if len(part) != self.dim or any(len(row) != self.dim for row in part):
                raise ValueError(f"matrix parts must be {self.dim}x{self.dim}")
        return self


class VectorPayload(BaseModel):
    dim: int = Field(..., gt=0)
    re: list[float]
    im: Optional[list[float]] = None

    @model_validator(mode="after")
    def _check_shape(self) -> "VectorPayload":
        if len(self.re) != self.dim or (self.im is not None and len(self.im) != self.dim):
            raise ValueError(f"vector parts must have length {self.dim}")
        return self


class DensityPayload(MatrixPayload):
    source: Optional[str] = None


class GraphPayload(BaseModel):
    dim: int = Field(..., gt=0)
    tol: float = Field(..., gt=0)
    nodes: list[MatrixPayload]
    edges: list[tuple[int, int]] = []


class ContextPayload(BaseModel):
    nodes: list[int]
    maximal: bool = True


class ContextsPayload(BaseModel):
    graph: str
    contexts: list[ContextPayload]


class PSAPayload(BaseModel):
    graph: str
    values: dict[str, float]


class RecordPayload(BaseModel):
    context: list[int]
    probabilities: dict[str, float]
    shots: Optional[int] = None


class QuantumSituationPayload(BaseModel):
    """A superposition, self-contained: basis vectors travel with it."""

    dim: int = Field(..., gt=0)
    context: list[int]
    basis: list[VectorPayload]
    coefficients: VectorPayload
    source: Optional[str] = None


class TrialLogPayload(BaseModel):
    seed: int
    generator: str
    trials: int
    counts: dict[str, int]
    outcomes_head: list[int]


class VerdictPayload(BaseModel):
    outcome: str
    nodes_searched: int
    valuation: Optional[dict[str, int]] = None
    true_nodes: list[int] = []


class OppositionPayload(BaseModel):
    pair: tuple[int, int]
    classification: str
    note: Optional[str] = None
    potentiae: dict[str, float]
    potential_contradiction: Optional[bool] = None


class VectorSetPayload(BaseModel):
    """Fixture format: a named family of (possibly unnormalized) vectors."""

    name: str
    dim: int = Field(..., gt=0)
    source: str
    description: Optional[str] = None
    vectors: list[VectorPayload]
    contexts: list[list[int]] = []
    tol: float = 1e-9


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"


class CheckRow(BaseModel):
    name: str
    expected: str
    observed: str
    status: CheckStatus


class ExampleReport(BaseModel):
    title: str
    seed: int
    trials: int
    rows: list[CheckRow] = []

    def add(self, name: str, expected: str, observed: str, passed: bool) -> None:
        self.rows.append(CheckRow(
            name=name,
            expected=expected,
            observed=observed,
            status=CheckStatus.PASS if passed else CheckStatus.FAIL,
        ))

    @property
    def passed(self) -> bool:
        return all(r.status is CheckStatus.PASS for r in self.rows)

    @property
    def failures(self) -> list[CheckRow]:
        return [r for r in self.rows if r.status is CheckStatus.FAIL]
