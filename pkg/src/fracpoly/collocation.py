"""Single-interval spectral collocation for scalar Caputo initial value problems.

The order-alpha problem y^(alpha) = f(t, y), y(0) = y0 on [0, T] is solved
by expanding the vector field in an orthogonal family on [0, 1] and
truncating after s terms.  The resulting solution ansatz is the
quasi-polynomial

    sigma(c T) = y0 + T**alpha * sum_j gamma_j I_alpha[P_j](c),

and the coefficients satisfy the fixed-point system

    gamma_j = (1 / nu_j) sum_i b_i P_j(c_i) f(c_i T, sigma(c_i T)),

discretized with the s-node Gauss rule of the family's weight.  The 1/nu_j
factor keeps the projection correct for families that are orthogonal but
not orthonormal; for unit-norm families it is 1.

The system is solved by plain fixed-point sweeps from gamma = 0.  Each
sweep evaluates f against the previous iterate's coefficients, so results
do not depend on node ordering.  One interval only: T is both the horizon
and the step length of the single "step".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .basis import RecurrenceBasis, eval_all
from .integrals import (
    BACKEND_RECURRENCE,
    integral_matrix,
    integral_values,
)
from .quadrature import rule_for_basis

ERROR_GRID_POINTS = 1001  # the max-abs error norm below is defined on this grid


@dataclass(frozen=True)
class FractionalIVP:
    """Scalar Caputo problem y^(alpha) = f(t, y), y(0) = y0 on [0, T]."""

    alpha: float
    T: float
    y0: float
    f: Callable[[float, float], float]

    def __post_init__(self) -> None:
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError(f"alpha must lie in (0, 1], got {self.alpha}")
        if not self.T > 0.0:
            raise ValueError(f"horizon must be positive, got {self.T}")


@dataclass(frozen=True)
class SolverConfig:
    s: int
    max_iterations: int = 200
    tolerance: float = 1e-14
    backend: str = BACKEND_RECURRENCE

    def __post_init__(self) -> None:
        if self.s < 1:
            raise ValueError("number of expansion terms must be >= 1")
        if not self.tolerance > 0.0:
            raise ValueError("tolerance must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")


@dataclass(frozen=True)
class IterationReport:
    iterations: int
    residual: float
    converged: bool


@dataclass(frozen=True)
class QuasiPolynomialSolution:
    """Evaluable truncated solution; sigma(0) == y0 exactly."""

    gamma: np.ndarray
    basis: RecurrenceBasis
    backend: str
    alpha: float
    T: float
    y0: float

    @property
    def h(self) -> float:
        """Step length of the single interval (== T)."""
        return self.T

    def evaluate(self, t) -> float | np.ndarray:
        """sigma(t) for t in [0, T]; no extrapolation outside the interval."""
        ts = np.atleast_1d(np.asarray(t, dtype=float))
        if np.any(ts < 0.0) or np.any(ts > self.T):
            raise ValueError(f"evaluation points must lie in [0, {self.T}]")
        table = integral_values(
            self.basis, self.alpha, ts / self.T, self.gamma.size, self.backend
        )
        vals = self.y0 + self.T**self.alpha * table @ self.gamma
        if np.isscalar(t) or np.ndim(t) == 0:
            return float(vals[0])
        return vals


class ConvergenceError(RuntimeError):
    """Fixed-point sweeps failed; carries the last iterate and report."""

    def __init__(self, message: str, solution: QuasiPolynomialSolution, report: IterationReport):
        super().__init__(message)
        self.solution = solution
        self.report = report


def solve(
    ivp: FractionalIVP,
    basis: RecurrenceBasis,
    config: SolverConfig,
) -> tuple[QuasiPolynomialSolution, IterationReport]:
    """Fixed-point solution of the truncated collocation system.

    Raises :class:`ConvergenceError` (carrying the last iterate) if the
    max-norm coefficient change does not reach the tolerance within the
    iteration budget, or if f returns a non-finite value.
    """
    s = config.s
    rule = rule_for_basis(basis, s)
    p_table = eval_all(basis, s - 1, rule.nodes)  # (s, s): P_j(c_i)
    imat = integral_matrix(basis, ivp.alpha, rule, s, config.backend)
    nu = basis.sq_norms(s)
    ha = ivp.T**ivp.alpha
    projector = (p_table * rule.weights[:, None]).T / nu[:, None]  # (s, s)

    gamma = np.zeros(s)
    residual = np.inf
    for iteration in range(1, config.max_iterations + 1):
        sigma_nodes = ivp.y0 + ha * imat.values @ gamma
        f_nodes = np.array(
            [ivp.f(c * ivp.T, sigma_nodes[i]) for i, c in enumerate(rule.nodes)]
        )
        if not np.all(np.isfinite(f_nodes)):
            bad = rule.nodes[~np.isfinite(f_nodes)]
            report = IterationReport(iteration, float("nan"), False)
            raise ConvergenceError(
                f"f returned a non-finite value at node(s) {bad}; iteration {iteration}",
                _make_solution(gamma, basis, config, ivp),
                report,
            )
        new_gamma = projector @ f_nodes
        residual = float(np.max(np.abs(new_gamma - gamma)))
        gamma = new_gamma
        if residual <= config.tolerance:
            report = IterationReport(iteration, residual, True)
            return _make_solution(gamma, basis, config, ivp), report

    report = IterationReport(config.max_iterations, residual, False)
    raise ConvergenceError(
        f"no convergence in {config.max_iterations} sweeps; last residual {residual:.3e}",
        _make_solution(gamma, basis, config, ivp),
        report,
    )


def _make_solution(gamma, basis, config, ivp) -> QuasiPolynomialSolution:
    return QuasiPolynomialSolution(
        gamma=gamma.copy(),
        basis=basis,
        backend=config.backend,
        alpha=ivp.alpha,
        T=ivp.T,
        y0=ivp.y0,
    )


@dataclass(frozen=True)
class ErrorCurveRow:
    s: int
    error: float
    iterations: int
    converged: bool


def error_curve(
    ivp: FractionalIVP,
    exact: Callable[[float], float],
    basis: RecurrenceBasis,
    backend: str,
    s_range: Iterable[int],
    tolerance: float = 1e-14,
    max_iterations: int = 200,
) -> list[ErrorCurveRow]:
    """Max-abs error on a uniform 1001-point grid of [0, T], per term count.

    Non-convergence for one s is recorded in that row (using the last
    iterate's solution for the error value) and does not abort the sweep.
    """
    s_values = list(s_range)
    if not s_values or any(b <= a for a, b in zip(s_values, s_values[1:])):
        raise ValueError("s_range must be nonempty and strictly ascending")
    grid = np.linspace(0.0, ivp.T, ERROR_GRID_POINTS)
    exact_vals = np.array([exact(t) for t in grid])
    rows = []
    for s in s_values:
        config = SolverConfig(
            s=s, backend=backend, tolerance=tolerance, max_iterations=max_iterations
        )
        try:
            solution, report = solve(ivp, basis, config)
        except ConvergenceError as failure:
            solution, report = failure.solution, failure.report
        err = float(np.max(np.abs(exact_vals - solution.evaluate(grid))))
        rows.append(ErrorCurveRow(s, err, report.iterations, report.converged))
    return rows
