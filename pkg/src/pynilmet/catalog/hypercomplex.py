"""Brackets of `W = Lambda^2 (R^4)^* x R^4` paired with the standard hypercomplex
structure acting on `n1 = <X_1, ..., X_4>` and `n2 = <Z_1, ..., Z_4>`.

Every such bracket is minimal: `Ric^gamma` is a multiple of the identity on each of
`n1` and `n2`. The structure is integrable iff `D = -C + T`, `E = B + J_1 T` and
`F = -A + J_2 T` for `T = C + D`, and abelian iff moreover `T = 0`. Modified H-type
metrics, tested on the fixed center `n2`, occur exactly for `T = 0`.
"""

from __future__ import annotations

import logging
import math
from typing import TYPE_CHECKING, NamedTuple

import numpy as np

from pynilmet.algebra.bracket import Array
from pynilmet.catalog.model import as_vectors, pair_model, warn_off_domain
from pynilmet.curvature.two_step import CenterSplitting
from pynilmet.structures.structure import standard_hypercomplex

if TYPE_CHECKING:
    import numpy.typing as npt

    from pynilmet.algebra.bracket import BracketTensor

logger = logging.getLogger(__name__)

N2 = 4
HALF = 0.5
_J1, _J2, _J3 = standard_hypercomplex(4).j_maps


class W8Relations(NamedTuple):
    integrable: Array
    """`(E - B - J_1 T, F + A - J_2 T)` with `T = C + D`."""
    abelian: Array
    """`T = C + D`."""


def w8_center_splitting() -> CenterSplitting:
    """The fixed splitting `n1 + n2` of the model, `n2 = <Z_1, ..., Z_4>`."""
    return CenterSplitting.coordinates(8, [4, 5, 6, 7])


def w8_bracket(  # noqa: PLR0913
    a: npt.ArrayLike,
    b: npt.ArrayLike,
    c: npt.ArrayLike,
    d: npt.ArrayLike,
    e: npt.ArrayLike,
    f: npt.ArrayLike,
) -> BracketTensor:
    """The general element of `W` with pair vectors `A, ..., F` in `R^4`."""
    return pair_model((a, b, c, d, e, f), N2)


def w8_relations(  # noqa: PLR0913
    a: npt.ArrayLike,
    b: npt.ArrayLike,
    c: npt.ArrayLike,
    d: npt.ArrayLike,
    e: npt.ArrayLike,
    f: npt.ArrayLike,
) -> W8Relations:
    va, vb, vc, vd, ve, vf = as_vectors((a, b, c, d, e, f), N2)
    t = vc + vd
    return W8Relations(
        integrable=np.concatenate([ve - vb - _J1 @ t, vf + va - _J2 @ t]),
        abelian=t,
    )


def hypercomplex_w8(
    a: npt.ArrayLike, b: npt.ArrayLike, c: npt.ArrayLike, t: npt.ArrayLike
) -> BracketTensor:
    """The integrable bracket with `D = -C + T`, `E = B + J_1 T`, `F = -A + J_2 T`."""
    va, vb, vc, vt = as_vectors((a, b, c, t), N2)
    return pair_model((va, vb, vc, vt - vc, vb + _J1 @ vt, _J2 @ vt - va), N2)


def hypercomplex_abelian_rst(r: float, s: float, t: float) -> BracketTensor:
    """`T = 0`, `A = (0, r, 0, 0)`, `B = (0, 0, s, 0)`, `C = (0, 0, 0, t)`.

    `Ric|n2 = diag(0, r^2, s^2, t^2)`, so `scal = -1` reads `r^2 + s^2 + t^2 = 1`.
    """
    warn_off_domain(
        "hypercomplex_abelian_rst", "r^2 + s^2 + t^2 = 1", r * r + s * s + t * t - 1.0
    )
    return hypercomplex_w8((0, r, 0, 0), (0, 0, s, 0), (0, 0, 0, t), (0, 0, 0, 0))


def hypercomplex_rst(r: float, s: float, t: float) -> BracketTensor:
    """Non-abelian structures with `T = (0, 0, 0, 1)`:

    `mu(X_1, X_2) = r Z_2`, `mu(X_1, X_3) = s Z_3`, `mu(X_1, X_4) = t Z_4`,
    `mu(X_2, X_3) = (1 - t) Z_4`, `mu(X_2, X_4) = -(1 - s) Z_3`,
    `mu(X_3, X_4) = (1 - r) Z_2`, meant for `1/2 <= r <= s <= t` and
    `r^2 + s^2 + t^2 - r - s - t = -1/2`.
    """
    warn_off_domain(
        "hypercomplex_rst",
        "r^2 + s^2 + t^2 - r - s - t = -1/2",
        r * r + s * s + t * t - r - s - t + HALF,
    )
    if not HALF <= r <= s <= t:
        logger.warning("hypercomplex_rst: expected 1/2 <= r <= s <= t.")
    return hypercomplex_w8((0, r, 0, 0), (0, 0, s, 0), (0, 0, 0, t), (0, 0, 0, 1))


def hypercomplex_curve(t: float) -> BracketTensor:
    """Non-abelian structures with `T = (0, 0, 0, 2t)`, `0 <= t <= 1/sqrt(3)`:

    `A = (q, t, 0, 0)`, `B = (0, 0, t, 0)`, `C = (0, 0, 0, t)` with
    `q = sqrt(1 - 3 t^2)`, so that `Ric|n2 = diag(1 - 3t^2, t^2, t^2, t^2)`.
    """
    q2 = 1.0 - 3.0 * t * t
    if q2 < 0 or t < 0:
        logger.warning("hypercomplex_curve: expected 0 <= t <= 1/sqrt(3), got %s.", t)
    q = math.sqrt(max(q2, 0.0))
    return hypercomplex_w8((q, t, 0, 0), (0, 0, t, 0), (0, 0, 0, t), (0, 0, 0, 2 * t))
