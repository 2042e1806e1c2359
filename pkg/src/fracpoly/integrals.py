"""Fractional integrals of recurrence bases: stable recurrence vs Horner.

Two routes compute the order-alpha integrals I_alpha[P_j](c):

* ``compute_psi_integrals`` / ``psi_integral_table`` run the triangular
  recurrence seeded with c**(alpha+k)/(alpha+k), keeping three rolling
  column vectors; work O(s^2), memory O(s).  The kernels carry it in
  compensated arithmetic (see ``_core_py``), so results stay accurate at
  every point of [0, 1].
* ``canonical_expansion_*`` + ``horner_eval`` go through the canonical
  monomial expansion sum_i p_i c**(i+alpha).  This baseline cancels
  catastrophically as the degree grows; nothing here mitigates that, since
  its error growth is exactly what the recurrence route is measured
  against.

Naming convention used throughout: the evaluation point is ``c`` and the
recurrence coefficients are (a, b, d); d_1 = 0 makes the first step the
uniform recurrence formula.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from ._core_py import PsiState  # noqa: F401  (public rolling-state type)
from .basis import (
    KIND_CHEBYSHEV,
    KIND_CHEBYSHEV_ORTHONORMAL,
    KIND_LEGENDRE,
    RecurrenceBasis,
)
from .quadrature import QuadratureRule

BACKEND_RECURRENCE = "recurrence"
BACKEND_HORNER = "horner"


def _validate_point(alpha: float, c) -> None:
    if not alpha > 0.0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    if np.any(np.asarray(c) < 0.0):
        raise ValueError("evaluation points must be >= 0 (c**alpha is real only there)")


def psi_integral_table(basis: RecurrenceBasis, alpha: float, cs, max_degree: int) -> np.ndarray:
    """I_alpha[P_j](c) for j = 0..max_degree at each point of ``cs``.

    Entries for c = 0 are exactly zero.  Rows are independent (the table is
    evaluated pointwise), so the result does not depend on how callers might
    split ``cs`` into batches.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    _validate_point(alpha, cs)
    s = max_degree + 1
    a, b, d = basis.coefficient_arrays(s)
    return _kernels.psi_matrix(a, b, d, alpha, np.atleast_1d(np.asarray(cs, dtype=float)), s)


def compute_psi_integrals(basis: RecurrenceBasis, alpha: float, c: float, max_degree: int) -> np.ndarray:
    """Vector of I_alpha[P_j](c), j = 0..max_degree, at a single point."""
    return psi_integral_table(basis, alpha, c, max_degree)[0]


# ---------------------------------------------------------------------------
# canonical-basis baseline
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CanonicalExpansion:
    """Coefficients p_0..p_degree of I_alpha[P_degree](c) = sum p_i c**(i+alpha).

    Coefficients alternate in sign and grow like 4**degree; for large
    degrees they overflow to inf, which is the documented behaviour of this
    baseline rather than an error.
    """

    degree: int
    alpha: float
    coeffs: np.ndarray


def canonical_expansion_legendre(j: int, alpha: float) -> CanonicalExpansion:
    """Monomial expansion coefficients for the orthonormal Legendre family.

    Accumulated multiplicatively (p_i from p_{i-1}); no factorial or gamma
    value beyond gamma(alpha + 1) is ever formed, so the construction only
    overflows when the coefficients themselves do.
    """
    if j < 0:
        raise ValueError("degree must be >= 0")
    if not alpha > 0.0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    p = np.empty(j + 1)
    p[0] = math.sqrt(2 * j + 1) * (-1.0) ** j / math.gamma(alpha + 1)
    for i in range(1, j + 1):
        p[i] = p[i - 1] * (-(j + i) * (j - i + 1)) / (i * (alpha + i))
    return CanonicalExpansion(j, alpha, p)


def canonical_expansion_chebyshev(j: int, alpha: float) -> CanonicalExpansion:
    """Monomial expansion coefficients for the orthonormal Chebyshev family."""
    if j < 0:
        raise ValueError("degree must be >= 0")
    if not alpha > 0.0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    if j == 0:
        return CanonicalExpansion(0, alpha, np.array([1.0 / math.gamma(alpha + 1)]))
    p = np.empty(j + 1)
    p[0] = math.sqrt(2.0) * (-1.0) ** j / math.gamma(alpha + 1)
    for i in range(1, j + 1):
        p[i] = p[i - 1] * (-2.0 * (j + i - 1) * (j - i + 1)) / ((2 * i - 1) * (alpha + i))
    return CanonicalExpansion(j, alpha, p)


def horner_eval(expansion: CanonicalExpansion, c) -> float | np.ndarray:
    """rho_0 * c**alpha with rho accumulated high-to-low, one scalar carry."""
    if np.any(np.asarray(c) < 0.0):
        raise ValueError("evaluation points must be >= 0")
    cs = np.atleast_1d(np.asarray(c, dtype=float))
    vals = _kernels.horner_values(expansion.coeffs, expansion.alpha, cs)
    if np.isscalar(c) or np.ndim(c) == 0:
        return float(vals[0])
    return vals


_CANONICAL = {
    KIND_LEGENDRE: canonical_expansion_legendre,
    KIND_CHEBYSHEV_ORTHONORMAL: canonical_expansion_chebyshev,
    KIND_CHEBYSHEV: canonical_expansion_chebyshev,
}


def canonical_expansion_for(basis: RecurrenceBasis, j: int, alpha: float) -> CanonicalExpansion:
    """Canonical expansion scaled consistently with the given family.

    The closed-form Chebyshev expansion is written for the unit-norm family;
    for the plain first-kind scaling (nu_j = 1/2, j >= 1) the coefficients
    are divided by sqrt(2).
    """
    try:
        expansion = _CANONICAL[basis.kind](j, alpha)
    except KeyError:
        raise ValueError(
            f"canonical-basis route needs a built-in family, got kind {basis.kind!r}"
        ) from None
    if basis.kind == KIND_CHEBYSHEV and j >= 1:
        expansion = CanonicalExpansion(j, alpha, expansion.coeffs / math.sqrt(2.0))
    return expansion


# ---------------------------------------------------------------------------
# node matrices for the collocation system
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FractionalIntegralMatrix:
    """Entries (i, j) = I_alpha[P_j](c_i) over a rule's nodes."""

    values: np.ndarray
    alpha: float
    nodes: np.ndarray
    basis_kind: str
    backend: str


def integral_matrix(
    basis: RecurrenceBasis,
    alpha: float,
    rule: QuadratureRule,
    s: int,
    backend: str = BACKEND_RECURRENCE,
) -> FractionalIntegralMatrix:
    """The s x s matrix I_alpha[P_j](c_i) with a selectable backend."""
    if rule.size != s:
        raise ValueError(f"rule has {rule.size} nodes, expected {s}")
    values = integral_values(basis, alpha, rule.nodes, s, backend)
    return FractionalIntegralMatrix(values, alpha, rule.nodes.copy(), basis.kind, backend)


def integral_values(basis: RecurrenceBasis, alpha: float, cs, s: int, backend: str) -> np.ndarray:
    """(m, s) array of I_alpha[P_j] at arbitrary points, by either backend."""
    cs = np.atleast_1d(np.asarray(cs, dtype=float))
    if backend == BACKEND_RECURRENCE:
        return psi_integral_table(basis, alpha, cs, s - 1)
    if backend == BACKEND_HORNER:
        _validate_point(alpha, cs)
        out = np.empty((cs.size, s))
        for j in range(s):
            out[:, j] = _kernels.horner_values(
                canonical_expansion_for(basis, j, alpha).coeffs, alpha, cs
            )
        return out
    raise ValueError(f"unknown backend {backend!r}; use 'recurrence' or 'horner'")
