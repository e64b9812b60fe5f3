"""Symplectic examples paired with the standard form `omega(u, v) = u^t J v`."""

from __future__ import annotations

import logging
import math

from pynilmet.algebra.bracket import BracketTensor
from pynilmet.catalog.model import DOMAIN_TOL, warn_off_domain
from pynilmet.exceptions import StructureError

logger = logging.getLogger(__name__)

M26_ARC_LIMIT = math.sqrt(37.0) - 5.0
"""Largest `e^2` for which the m26 arc has a real point."""


def heisenberg(n: int) -> BracketTensor:
    """`h_3 + R^(n-3)`: the only non-zero bracket is `mu(X_1, X_2) = X_3`.

    With the standard form `omega` is closed only for `n = 4`; for `n >= 6` the
    cyclic sum on `(X_1, X_2, X_{n-2})` is `-1`.

    Raises:
        StructureError: `n` is odd or smaller than 4.
    """
    if n < 4 or n % 2:  # noqa: PLR2004
        raise StructureError(
            f"The symplectic Heisenberg example needs even n >= 4, got {n}."
        )
    if n > 4:  # noqa: PLR2004
        logger.warning("heisenberg: the standard form is not closed for n = %d.", n)
    return BracketTensor.from_triples(n, [(1, 2, 3, 1.0)])


def filiform4() -> BracketTensor:
    return BracketTensor.from_triples(4, [(1, 2, 3, 1.0), (1, 3, 4, 1.0)])


def abc_family(a: float, b: float, c: float) -> BracketTensor:
    """`mu(X_1, X_2) = a X_4`, `mu(X_1, X_3) = b X_5`, `mu(X_2, X_3) = c X_6`.

    The symplectic form is closed iff `a - b + c = 0`; every closed member is
    minimal with `D` proportional to `diag(1, 1, 1, 2, 2, 2)`.
    """
    warn_off_domain("abc_family", "a - b + c = 0", a - b + c)
    return BracketTensor.from_triples(6, [(1, 2, 4, a), (1, 3, 5, b), (2, 3, 6, c)])


def m26_tensor(  # noqa: PLR0913
    a: float, b: float, c: float, d: float, e: float, f: float
) -> BracketTensor:
    """The six-parameter tensor

    `mu(X_1, X_2) = a X_3`, `mu(X_1, X_3) = b X_4`, `mu(X_1, X_4) = c X_5`,
    `mu(X_1, X_5) = d X_6`, `mu(X_2, X_3) = e X_5`, `mu(X_2, X_4) = f X_6`.

    It satisfies Jacobi iff `b f = d e` and `omega` is closed iff `a - f + c = 0`.
    The tensor is returned in any case.
    """
    warn_off_domain("m26_tensor", "the Jacobi identity b f = d e", b * f - d * e)
    warn_off_domain("m26_tensor", "closedness a - f + c = 0", a - f + c)
    return BracketTensor.from_triples(
        6,
        [
            (1, 2, 3, a),
            (1, 3, 4, b),
            (1, 4, 5, c),
            (1, 5, 6, d),
            (2, 3, 5, e),
            (2, 4, 6, f),
        ],
    )


def m26_family(x: float, y: float) -> BracketTensor:
    """The tensor `m26_tensor(x, 1, x + y, 1, 1, y)`, meant for `x^2 + xy + y^2 = 1`.

    On the ellipse `Ric^ac = -1/4 diag(5, 3, 1, -1, -3, -5)`, but Jacobi holds only
    for `y = 1` and closedness only for `x = 0`. Use `m26_arc` for a curve of closed
    Lie brackets with the same `Ric^ac`.
    """
    warn_off_domain("m26_family", "x^2 + xy + y^2 = 1", x * x + x * y + y * y - 1.0)
    return m26_tensor(x, 1.0, x + y, 1.0, 1.0, y)


def m26_arc(e: float, branch: int = -1) -> BracketTensor:
    """Closed Lie brackets of the m26 tensor with `Ric^ac = -1/4 diag(5, 3, ..., -5)`.

    Solves `d = e`, `b f = d e`, `a - f + c = 0` and the curvature conditions:
    `b = sqrt(2 - e^2)`, `f = e^2 / b`, `a = (f + branch sqrt(2R - f^2)) / 2` with
    `R = 3 - e^2 - f^2`, and `c = f - a`. All points have `|mu|^2 = 10`, and
    `e = 1`, `branch = -1` gives `m26_tensor(0, 1, 1, 1, 1, 1)`.

    Args:
        e:
            Curve parameter with `0 < e^2 <= sqrt(37) - 5`.
        branch:
            Sign of the square root, `1` or `-1`.

    Raises:
        ValueError: `branch` is not a sign or the arc has no point at `e`.
    """
    if branch not in (-1, 1):
        raise ValueError(f"branch must be 1 or -1, got {branch}.")
    e2 = e * e
    if e2 > M26_ARC_LIMIT + DOMAIN_TOL:
        raise ValueError(f"The m26 arc needs e^2 <= sqrt(37) - 5, got e^2 = {e2!r}.")
    if e2 == 0:
        logger.warning("m26_arc: e = 0 lies outside the arc 0 < e^2 <= sqrt(37) - 5.")
    b = math.sqrt(2.0 - e2)
    f = e2 / b
    r = 3.0 - e2 - f * f
    a = (f + branch * math.sqrt(max(2.0 * r - f * f, 0.0))) / 2.0
    return m26_tensor(a, b, f - a, e, e, f)
