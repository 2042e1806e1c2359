"""Gauss rules on (0, 1) whose abscissae are the zeros of P_s.

Both rules are normalized to unit total weight, matching weight functions
that integrate to 1 over [0, 1].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .basis import (
    KIND_CHEBYSHEV,
    KIND_CHEBYSHEV_ORTHONORMAL,
    KIND_LEGENDRE,
    RecurrenceBasis,
    legendre_basis,
)

_NEWTON_MAX_ITER = 50
_NEWTON_TOL = 1e-15


class RuleConstructionError(RuntimeError):
    """Node computation failed to converge; carries diagnostics in the message."""


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes strictly increasing in (0, 1) and positive weights summing to 1."""

    nodes: np.ndarray
    weights: np.ndarray
    kind: str

    @property
    def size(self) -> int:
        return self.nodes.size


def _chebyshev_nodes(s: int) -> np.ndarray:
    i = np.arange(1, s + 1)
    return (1.0 + np.cos((2 * (s - i) + 1) * math.pi / (2 * s))) / 2.0


def chebyshev_rule(s: int) -> QuadratureRule:
    """Closed-form Gauss rule for the weight 1/(pi sqrt(c(1-c)))."""
    if s < 1:
        raise ValueError("rule size must be >= 1")
    return QuadratureRule(_chebyshev_nodes(s), np.full(s, 1.0 / s), KIND_CHEBYSHEV)


def _eval_with_derivative(basis: RecurrenceBasis, s: int, x: np.ndarray):
    """P_s(x) and P_s'(x) by differentiating the recurrence."""
    a, b, d = basis.coefficient_arrays(s + 1)
    p_prev = np.ones_like(x)
    dp_prev = np.zeros_like(x)
    p = a[1] * x - b[1]
    dp = np.full_like(x, a[1])
    for j in range(2, s + 1):
        p_new = (a[j] * x - b[j]) * p - d[j] * p_prev
        dp_new = a[j] * p + (a[j] * x - b[j]) * dp - d[j] * dp_prev
        p_prev, p = p, p_new
        dp_prev, dp = dp, dp_new
    return p, dp


def legendre_rule(s: int) -> QuadratureRule:
    """Gauss rule for the unit weight on [0, 1].

    Nodes by Newton iteration on the orthonormal recurrence seeded with the
    closed-form Chebyshev nodes; weights from the Christoffel sums
    1 / sum_j P_j(c_i)^2 of the orthonormal family.
    """
    if s < 1:
        raise ValueError("rule size must be >= 1")
    basis = legendre_basis()
    if s == 1:
        return QuadratureRule(np.array([0.5]), np.array([1.0]), KIND_LEGENDRE)

    x = _chebyshev_nodes(s)
    for _ in range(_NEWTON_MAX_ITER):
        p, dp = _eval_with_derivative(basis, s, x)
        step = p / dp
        x = x - step
        if np.max(np.abs(step)) < _NEWTON_TOL:
            break
    else:
        raise RuleConstructionError(
            f"legendre nodes (s={s}) did not converge in {_NEWTON_MAX_ITER} Newton "
            f"iterations; last max step {np.max(np.abs(step)):.3e}"
        )
    # one polishing step; then validate instead of trusting the iteration
    p, dp = _eval_with_derivative(basis, s, x)
    x = x - p / dp
    if not (np.all(np.diff(x) > 0) and x[0] > 0.0 and x[-1] < 1.0):
        raise RuleConstructionError(f"legendre nodes (s={s}) are not sorted inside (0, 1)")

    a, b, d = basis.coefficient_arrays(s)
    from . import _kernels

    table = _kernels.poly_table(a, b, d, x, s)
    w = 1.0 / np.sum(table * table, axis=1)
    return QuadratureRule(x, w, KIND_LEGENDRE)


def rule_for_basis(basis: RecurrenceBasis, s: int) -> QuadratureRule:
    """The Gauss rule matching a built-in family's weight function."""
    if basis.kind == KIND_LEGENDRE:
        return legendre_rule(s)
    if basis.kind in (KIND_CHEBYSHEV, KIND_CHEBYSHEV_ORTHONORMAL):
        return chebyshev_rule(s)
    raise ValueError(f"no built-in rule for basis kind {basis.kind!r}")
