"""Stable fractional integrals of orthogonal polynomials, and a collocation
solver for scalar Caputo initial value problems built on them.

The hot kernels have a compiled core with a pure-python fallback selected at
import time; :func:`fracpoly.kernel_backend` reports which one is active.
"""

from ._kernels import backend_name as kernel_backend
from .basis import (
    RecurrenceBasis,
    basis_by_kind,
    chebyshev_basis,
    chebyshev_orthonormal_basis,
    custom_basis,
    eval_all,
    eval_poly,
    legendre_basis,
)
from .collocation import (
    ConvergenceError,
    ErrorCurveRow,
    FractionalIVP,
    IterationReport,
    QuasiPolynomialSolution,
    SolverConfig,
    error_curve,
    solve,
)
from .integrals import (
    BACKEND_HORNER,
    BACKEND_RECURRENCE,
    CanonicalExpansion,
    FractionalIntegralMatrix,
    PsiState,
    canonical_expansion_chebyshev,
    canonical_expansion_for,
    canonical_expansion_legendre,
    compute_psi_integrals,
    horner_eval,
    integral_matrix,
    integral_values,
    psi_integral_table,
)
from .oracle import reference_integral, reference_integral_quadrature
from .problems import (
    BUILTIN_PROBLEMS,
    BenchmarkProblem,
    constant_rhs_problem,
    garrappa_problem,
    load_problem,
)
from .quadrature import (
    QuadratureRule,
    RuleConstructionError,
    chebyshev_rule,
    legendre_rule,
    rule_for_basis,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND_HORNER",
    "BACKEND_RECURRENCE",
    "BUILTIN_PROBLEMS",
    "BenchmarkProblem",
    "CanonicalExpansion",
    "ConvergenceError",
    "ErrorCurveRow",
    "FractionalIVP",
    "FractionalIntegralMatrix",
    "IterationReport",
    "PsiState",
    "QuadratureRule",
    "QuasiPolynomialSolution",
    "RecurrenceBasis",
    "RuleConstructionError",
    "SolverConfig",
    "basis_by_kind",
    "canonical_expansion_chebyshev",
    "canonical_expansion_for",
    "canonical_expansion_legendre",
    "chebyshev_basis",
    "chebyshev_orthonormal_basis",
    "chebyshev_rule",
    "compute_psi_integrals",
    "constant_rhs_problem",
    "custom_basis",
    "error_curve",
    "eval_all",
    "eval_poly",
    "garrappa_problem",
    "horner_eval",
    "integral_matrix",
    "integral_values",
    "kernel_backend",
    "legendre_basis",
    "legendre_rule",
    "load_problem",
    "psi_integral_table",
    "reference_integral",
    "reference_integral_quadrature",
    "rule_for_basis",
    "solve",
    "__version__",
]
