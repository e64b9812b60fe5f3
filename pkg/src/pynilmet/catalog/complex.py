"""Brackets of `W = Lambda^2 (R^4)^* x R^2` paired with the block complex structure.

Vectors are pairs `A = (a_1, a_2)` meaning `mu(X_1, X_2) = a_1 Z_1 + a_2 Z_2`, and
`JA = (-a_2, a_1)`. Scale is normalized by `|v_1|^2 + |v_2|^2 = 2`, which is
`scal = -1`.
"""

from __future__ import annotations

import logging
import math
from typing import TYPE_CHECKING, NamedTuple

import numpy as np

from pynilmet.algebra.bracket import Array
from pynilmet.catalog.model import as_vectors, pair_model, warn_off_domain

if TYPE_CHECKING:
    import numpy.typing as npt

    from pynilmet.algebra.bracket import BracketTensor

logger = logging.getLogger(__name__)

N2 = 2
_J = np.array([[0.0, -1.0], [1.0, 0.0]])


class W6Relations(NamedTuple):
    """Defect vectors of the linear conditions on `(A, ..., F)`; each vanishes iff
    the condition holds."""

    integrable: Array
    """`E - B - JD - JC`."""
    biinvariant: Array
    """`(A, F, C - JB, D - JB, E + B)`."""
    abelian: Array
    """`(E - B, D + C)`."""


def complex_w6(  # noqa: PLR0913
    a: npt.ArrayLike,
    b: npt.ArrayLike,
    c: npt.ArrayLike,
    d: npt.ArrayLike,
    e: npt.ArrayLike,
    f: npt.ArrayLike,
) -> BracketTensor:
    """The element of `W` with pair vectors `A, ..., F` on the basis
    `X_1, ..., X_4, Z_1, Z_2`."""
    relations = w6_relations(a, b, c, d, e, f)
    warn_off_domain(
        "complex_w6",
        "integrability E = B + JD + JC",
        float(np.abs(relations.integrable).max()),
    )
    return pair_model((a, b, c, d, e, f), N2)


def w6_relations(  # noqa: PLR0913
    a: npt.ArrayLike,
    b: npt.ArrayLike,
    c: npt.ArrayLike,
    d: npt.ArrayLike,
    e: npt.ArrayLike,
    f: npt.ArrayLike,
) -> W6Relations:
    va, vb, vc, vd, ve, vf = as_vectors((a, b, c, d, e, f), N2)
    return W6Relations(
        integrable=ve - vb - _J @ vd - _J @ vc,
        biinvariant=np.concatenate([va, vf, vc - _J @ vb, vd - _J @ vb, ve + vb]),
        abelian=np.concatenate([ve - vb, vd + vc]),
    )


def complex_abelian_curve(s: float, t: float) -> BracketTensor:
    """`A = (s, t)`, `F = (-s, t)`; abelian with `Ric|n2 = diag(s^2, t^2)` when
    `s^2 + t^2 = 1`."""
    warn_off_domain("complex_abelian_curve", "s^2 + t^2 = 1", s * s + t * t - 1.0)
    zero = (0.0, 0.0)
    return pair_model(((s, t), zero, zero, zero, zero, (-s, t)), N2)


def complex_iwasawa_curve(s: float, t: float) -> BracketTensor:
    """`A = (s, t)`, `F = (-s, t)`, `B = C = -D = E = (1/2, 0)`.

    Abelian complex structures on the Iwasawa manifold for `t != 0`, with
    `Ric|n2 = diag(s^2 + 1/2, t^2)` when `s^2 + t^2 = 1/2`. Not modified H-type.
    """
    warn_off_domain("complex_iwasawa_curve", "s^2 + t^2 = 1/2", s * s + t * t - 0.5)
    half = (0.5, 0.0)
    return pair_model(((s, t), half, half, (-0.5, 0.0), half, (-s, t)), N2)


def complex_htype_curve(s: float, t: float) -> BracketTensor:
    """`A = (s, 0) = -F`, `B = (0, t) = E`; modified H-type abelian structures."""
    warn_off_domain("complex_htype_curve", "s^2 + t^2 = 1", s * s + t * t - 1.0)
    zero = (0.0, 0.0)
    return pair_model(((s, 0.0), (0.0, t), zero, zero, (0.0, t), (-s, 0.0)), N2)


def complex_nonabelian_curve(t: float, normalize: bool = False) -> BracketTensor:
    """Non-abelian complex structures with `C = D = (s, 0)`, `B = -tJC`,
    `E = (2 - t)JC` and `s = sqrt(2 + t^2 + (2 - t)^2)`.

    The bi-invariant structure sits at `t = 1`. As written the curve has
    `Ric|n2 = 1/2 diag(2 s^2, s^2 (t^2 + (2 - t)^2))`, so its scale grows with `t`;
    `normalize=True` rescales to `scal = -1`.
    """
    s = math.sqrt(2.0 + t * t + (2.0 - t) ** 2)
    zero = (0.0, 0.0)
    mu = pair_model(
        (zero, (0.0, -t * s), (s, 0.0), (s, 0.0), (0.0, (2.0 - t) * s), zero), N2
    )
    if normalize:
        return (2.0 / mu.norm) * mu
    return mu
