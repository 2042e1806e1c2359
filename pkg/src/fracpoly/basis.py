"""Orthogonal polynomial families on [0, 1] defined by 3-term recurrences.

A family is described by coefficient callables: starting from P_0 = 1,

    P_1(c) = (a_1 c - b_1) P_0(c)
    P_j(c) = (a_j c - b_j) P_{j-1}(c) - d_j P_{j-2}(c),   j >= 2,

together with the squared norms nu_j of each member under the family's
weight.  Carrying nu_j explicitly lets projections stay correct for
families that are orthogonal but not orthonormal (the first-kind Chebyshev
recurrence below produces shifted T_j with nu_j = 1/2 for j >= 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import _kernels

KIND_CHEBYSHEV = "chebyshev"
KIND_CHEBYSHEV_ORTHONORMAL = "chebyshev-orthonormal"
KIND_LEGENDRE = "legendre"
KIND_CUSTOM = "custom"


@dataclass(frozen=True)
class RecurrenceBasis:
    """Coefficient sequences (a_j, b_j, d_j) plus squared norms nu_j.

    ``coeff_a``/``coeff_b`` are defined for j >= 1, ``coeff_d`` for j >= 2
    (d_1 is taken as 0 so the j = 1 step is the uniform recurrence formula).
    """

    kind: str
    coeff_a: Callable[[int], float]
    coeff_b: Callable[[int], float]
    coeff_d: Callable[[int], float]
    sq_norm: Callable[[int], float]

    def coefficient_arrays(self, s: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Coefficients for degrees < s as arrays indexed by j (entry 0 unused)."""
        a = np.zeros(s)
        b = np.zeros(s)
        d = np.zeros(s)
        for j in range(1, s):
            a[j] = self.coeff_a(j)
            b[j] = self.coeff_b(j)
            if a[j] <= 0.0:
                raise ValueError(f"recurrence requires a_j > 0, got a_{j} = {a[j]}")
            if j >= 2:
                d[j] = self.coeff_d(j)
        return a, b, d

    def sq_norms(self, s: int) -> np.ndarray:
        return np.array([self.sq_norm(j) for j in range(s)])


def legendre_basis() -> RecurrenceBasis:
    """Shifted Legendre family, orthonormal for the unit weight on [0, 1]."""
    def b(j: int) -> float:
        return math.sqrt(4.0 - 1.0 / (j * j))

    return RecurrenceBasis(
        kind=KIND_LEGENDRE,
        coeff_a=lambda j: 2.0 * b(j),
        coeff_b=b,
        coeff_d=lambda j: (j - 1) / j * math.sqrt((2 * j + 1) / (2 * j - 3)),
        sq_norm=lambda j: 1.0,
    )


def chebyshev_basis() -> RecurrenceBasis:
    """Shifted first-kind Chebyshev family (weight 1/(pi sqrt(c(1-c)))).

    This recurrence produces the classical T_j remapped to [0, 1]; these are
    orthogonal but not orthonormal (nu_0 = 1, nu_j = 1/2 for j >= 1).  Use
    :func:`chebyshev_orthonormal_basis` for the unit-norm scaling.
    """
    return RecurrenceBasis(
        kind=KIND_CHEBYSHEV,
        coeff_a=lambda j: 2.0 if j == 1 else 4.0,
        coeff_b=lambda j: 1.0 if j == 1 else 2.0,
        coeff_d=lambda j: 1.0,
        sq_norm=lambda j: 1.0 if j == 0 else 0.5,
    )


def chebyshev_orthonormal_basis() -> RecurrenceBasis:
    """Shifted first-kind Chebyshev family rescaled to unit norm."""
    _SQRT2 = math.sqrt(2.0)
    return RecurrenceBasis(
        kind=KIND_CHEBYSHEV_ORTHONORMAL,
        coeff_a=lambda j: 2.0 * _SQRT2 if j == 1 else 4.0,
        coeff_b=lambda j: _SQRT2 if j == 1 else 2.0,
        coeff_d=lambda j: _SQRT2 if j == 2 else 1.0,
        sq_norm=lambda j: 1.0,
    )


def custom_basis(coeff_a, coeff_b, coeff_d, sq_norm) -> RecurrenceBasis:
    """Family from user-supplied callables.

    No orthogonality of the resulting polynomials is verified; the caller is
    responsible for supplying coefficients of an actual orthogonal family
    with matching squared norms.
    """
    return RecurrenceBasis(KIND_CUSTOM, coeff_a, coeff_b, coeff_d, sq_norm)


_BUILTIN = {
    KIND_LEGENDRE: legendre_basis,
    KIND_CHEBYSHEV: chebyshev_basis,
    KIND_CHEBYSHEV_ORTHONORMAL: chebyshev_orthonormal_basis,
}


def basis_by_kind(kind: str) -> RecurrenceBasis:
    try:
        return _BUILTIN[kind]()
    except KeyError:
        raise ValueError(f"unknown basis kind {kind!r}; choose from {sorted(_BUILTIN)}") from None


def eval_all(basis: RecurrenceBasis, max_degree: int, c) -> np.ndarray:
    """P_0(c)..P_max_degree(c) in one recurrence pass.

    ``c`` may be a scalar or an array; the degree axis is last.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    s = max_degree + 1
    a, b, d = basis.coefficient_arrays(s)
    cs = np.atleast_1d(np.asarray(c, dtype=float))
    table = _kernels.poly_table(a, b, d, cs, s)
    if np.isscalar(c) or np.ndim(c) == 0:
        return table[0]
    return table


def eval_poly(basis: RecurrenceBasis, j: int, c) -> float | np.ndarray:
    """P_j(c) by forward recurrence from P_0 = 1."""
    if j < 0:
        raise ValueError("degree must be >= 0")
    vals = eval_all(basis, j, c)
    return vals[..., j]
