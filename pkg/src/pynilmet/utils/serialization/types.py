from __future__ import annotations

import logging
from typing import Any, Literal, TypedDict

logger = logging.getLogger(__name__)

StructureKindName = Literal["none", "symplectic", "complex", "hypercomplex"]
Matrix = list[list[float]]


class SerializedStructure(TypedDict):
    kind: StructureKindName
    j_maps: Literal["standard"] | list[Matrix]


class _BracketDocumentBase(TypedDict):
    dim: int
    brackets: list[list[int | float]]
    """Entries `[i, j, k, value]` meaning `mu(X_i, X_j) += value X_k`, 1-based."""


class BracketDocument(_BracketDocumentBase, total=False):
    basis_labels: list[str]
    structure: SerializedStructure
    metadata: dict[str, Any]


class SerializedCertificate(TypedDict):
    verdict: Literal["minimal", "not_minimal", "abelian_trivial"]
    c: float
    derivation: Matrix
    residual: float
    tol: float


class SerializedCriticalType(TypedDict):
    type: str
    ks: list[int]
    ds: list[int]
    scale: float


class SerializedInvariants(TypedDict):
    scal: float
    ricci_spectrum: list[float]
    center_spectrum: list[float]
    f_value: float


class SerializedDistinction(TypedDict):
    verdict: Literal["distinct", "inconclusive"]
    invariant: str | None
    difference: float


class ValidationReport(TypedDict):
    dim: int
    jacobi_residual: float
    nilpotency_index: int | None
    structure: StructureKindName
    integrability_residual: float
    valid: bool


class RicciReport(TypedDict):
    scal: float
    f_value: float | None
    ricci: Matrix
    invariant_ricci: Matrix


class FlowReport(TypedDict):
    steps: int
    converged: bool
    halvings: int
    final_f: float
    final_grad_norm: float
    max_constraint_residual: float
    certificate: SerializedCertificate | None
    final: BracketDocument


class DistinguishReport(TypedDict):
    normalization: Literal["scal", "unit"]
    distinction: SerializedDistinction
    invariants: list[SerializedInvariants]
