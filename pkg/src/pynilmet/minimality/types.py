"""Types `(k_1 < ... < k_r; d_1, ..., d_r)` of critical points.

At a critical point the derivation `D` of the certificate has, after a positive
rescaling, coprime integer eigenvalues `k_i` with multiplicities `d_i`.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, NamedTuple

import numpy as np

from pynilmet.config import NumericsConfig
from pynilmet.exceptions import (
    DocumentError,
    NotMinimalError,
    RationalizationFailedError,
)
from pynilmet.minimality.certificate import Verdict
from pynilmet.structures.projection import project_invariant
from pynilmet.structures.structure import StructureKind

if TYPE_CHECKING:
    from pynilmet.algebra.bracket import Array, BracketTensor
    from pynilmet.minimality.certificate import SolitonCertificate
    from pynilmet.structures.structure import GeomStructure

logger = logging.getLogger(__name__)

RATIONALIZATION_TOL = 1e-6
STRATUM_TOL = 1e-9


@dataclass(frozen=True)
class CriticalType:
    """Coprime integers `ks` (strictly increasing) with multiplicities `ds`.

    `scale` is the positive factor with `scale * D` having eigenvalues `ks`; it is
    1.0 for types that were parsed rather than extracted.
    """

    ks: tuple[int, ...]
    ds: tuple[int, ...]
    scale: float = 1.0

    def __post_init__(self) -> None:
        if len(self.ks) != len(self.ds) or not self.ks:
            raise ValueError("A type needs as many multiplicities as eigenvalues.")
        if any(a >= b for a, b in itertools.pairwise(self.ks)):
            raise ValueError(f"Eigenvalues {self.ks} are not strictly increasing.")
        if any(d <= 0 for d in self.ds):
            raise ValueError(f"Multiplicities {self.ds} must be positive.")
        if math.gcd(*self.ks) not in (0, 1):
            raise ValueError(f"Eigenvalues {self.ks} are not coprime.")

    @property
    def dim(self) -> int:
        return sum(self.ds)

    def eigenvalues(self) -> Array:
        """The diagonal of `D_alpha`, sorted ascending with multiplicities."""
        return np.repeat(np.array(self.ks, dtype=float), self.ds)

    def __str__(self) -> str:
        return f"{'<'.join(map(str, self.ks))};{','.join(map(str, self.ds))}"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CriticalType):
            return NotImplemented
        return self.ks == other.ks and self.ds == other.ds

    def __hash__(self) -> int:
        return hash((self.ks, self.ds))

    @classmethod
    def parse(cls, text: str) -> CriticalType:
        """Parses the notation `"3<4<6<7;1,1,1,1"` (parentheses are optional).

        Raises:
            DocumentError: malformed text.
        """
        body = text.strip().removeprefix("(").removesuffix(")")
        try:
            eigen_part, multiplicity_part = body.split(";")
            ks = tuple(int(k) for k in eigen_part.split("<"))
            ds = tuple(int(d) for d in multiplicity_part.split(","))
            return cls(ks, ds)
        except ValueError as e:
            raise DocumentError(f"Invalid type {text!r}: {e}", field="type") from e


def _clusters(values: Array, gap: float) -> list[Array]:
    breaks = np.flatnonzero(np.diff(values) > gap) + 1
    return np.split(values, breaks)


def _rationalize(ratio: float, max_denominator: int, tol: float) -> Fraction:
    fraction = Fraction(ratio).limit_denominator(max_denominator)
    if abs(float(fraction) - ratio) > tol * max(1.0, abs(ratio)):
        raise RationalizationFailedError(
            f"No fraction with denominator <= {max_denominator} within {tol:.1e} "
            f"of {ratio!r}."
        )
    return fraction


def critical_type(
    cert: SolitonCertificate,
    tol: float = RATIONALIZATION_TOL,
    cluster_gap: float = NumericsConfig().cluster_gap,
    max_denominator: int = NumericsConfig().max_denominator,
) -> CriticalType:
    """Extracts the type of a certified critical point from the spectrum of `D`.

    Eigenvalues closer than `cluster_gap` times the spectral radius are merged,
    the cluster values are divided by the one of smallest non-zero modulus and
    rationalized by continued fractions, then cleared of denominators and common
    factors. `D = 0` gives the type `(0; n)`.

    Raises:
        NotMinimalError: the certificate is not `MINIMAL`.
        RationalizationFailedError: a ratio has no good rational approximation.
    """
    if cert.verdict is not Verdict.MINIMAL:
        raise NotMinimalError(
            f"Types are defined for minimal certificates, got {cert.verdict.value}."
        )
    derivation = cert.derivation
    values = np.sort(np.linalg.eigvalsh(0.5 * (derivation + derivation.T)))
    radius = float(np.abs(values).max(initial=0.0))
    if radius <= NumericsConfig().tol:
        return CriticalType((0,), (len(values),))
    clusters = _clusters(values, cluster_gap * radius)
    centers = np.array([cluster.mean() for cluster in clusters])
    nonzero = np.abs(centers) > cluster_gap * radius
    reference = float(np.abs(centers[nonzero]).min())
    fractions = [
        _rationalize(float(v) / reference, max_denominator, tol) for v in centers
    ]
    common = math.lcm(*(f.denominator for f in fractions))
    integers = [int(f * common) for f in fractions]
    divisor = math.gcd(*integers)
    ks = tuple(k // divisor for k in integers)
    ds = tuple(len(cluster) for cluster in clusters)
    scale = common / (divisor * reference)
    logger.debug("Spectrum %s has type %s.", values, ks)
    return CriticalType(ks, ds, scale)


class NormalForm(NamedTuple):
    c: float
    s: float
    matrix: Array
    """`c I + s D_alpha`, the value of `8 Ric^gamma` at a unit-norm critical point."""


def type_normal_form(t: CriticalType, gamma: GeomStructure) -> NormalForm:
    """The matrix `A_alpha = c I + s D_alpha` of a unit-norm critical point of type `t`.

    It is fixed by `tr A_alpha = 0` (symplectic) or `tr A_alpha = -2` (otherwise)
    together with `|A_alpha|^2 = -2 c`.
    """
    n = t.dim
    d_alpha = t.eigenvalues()
    tau = float(d_alpha.sum())
    sigma = float(d_alpha @ d_alpha)
    denominator = n * sigma - tau**2
    trace = 0.0 if gamma.kind is StructureKind.SYMPLECTIC else -2.0
    if abs(denominator) <= NumericsConfig().tol * max(1.0, n * sigma):
        s, c = 0.0, trace / n
    else:
        s = 2 * tau / denominator
        c = -s * tau / n if gamma.kind is StructureKind.SYMPLECTIC else -s * sigma / tau
    return NormalForm(c=c, s=s, matrix=c * np.eye(n) + s * np.diag(d_alpha))


def _diagonal_derivation_system(mu: BracketTensor) -> Array:
    """Rows `e_i + e_j - e_k` for every non-zero `mu(X_i, X_j)` component along `X_k`.

    `diag(d)` is a derivation iff the system annihilates `d`.
    """
    n = mu.dim
    rows = []
    for i, j, k in zip(*np.nonzero(mu.coeffs), strict=True):
        if i < j:
            row = np.zeros(n)
            row[i] += 1
            row[j] += 1
            row[k] -= 1
            rows.append(row)
    return np.array(rows).reshape(-1, n)


def _is_compatible(d: Array, gamma: GeomStructure) -> bool:
    a = np.diag(d)
    if gamma.kind is StructureKind.SYMPLECTIC:
        a = a - d.mean() * np.eye(len(d))
    return bool(np.abs(project_invariant(a, gamma) - a).max() <= STRATUM_TOL)


def stratum_check(mu: BracketTensor, t: CriticalType, gamma: GeomStructure) -> bool:
    """Whether some diagonal derivation of `mu` in the fixed basis has the
    eigenvalues of `D_alpha`, compatible with `gamma` the way `Ric^gamma - c I` is.

    Compatibility means commuting with every `J` for complex and hypercomplex
    structures, and `D - (tr D / n) I` anticommuting with `J` for symplectic ones.
    """
    if t.dim != mu.dim:
        return False
    system = _diagonal_derivation_system(mu)
    candidates = np.array(sorted(set(itertools.permutations(t.eigenvalues()))))
    scale = max(1.0, float(np.abs(t.eigenvalues()).max()))
    if system.size:
        defects = np.abs(candidates @ system.T).max(axis=1)
        candidates = candidates[defects <= STRATUM_TOL * scale]
    return any(_is_compatible(d, gamma) for d in candidates)
