"""Benchmark initial value problems with known exact solutions.

Problems can also be loaded from a flat key-value text file so new cases
don't require code changes::

    name = my-problem
    alpha = 0.5
    T = 1.0
    y0 = 0.0
    rhs = -y + gamma(alpha + 1) + t**alpha     # expression over t, y
    exact = t**alpha                            # optional

Expressions support +, -, *, /, ** (real powers), unary sign, numeric
literals, the variables ``t`` and ``y``, the solved order as ``alpha``, and
``gamma(...)``.  Nothing else — this is deliberately not a general
expression language.
"""

from __future__ import annotations

import ast
import math
from dataclasses import dataclass
from typing import Callable

from .collocation import FractionalIVP


@dataclass(frozen=True)
class BenchmarkProblem:
    ivp: FractionalIVP
    exact: Callable[[float], float] | None
    name: str
    note: str = ""


def garrappa_problem(alpha: float, T: float = 1.0) -> BenchmarkProblem:
    """Nonlinear test problem whose solution has genuinely fractional terms.

    Exact solution t**8 - 3 t**(4 + alpha/2) + (9/4) t**alpha; the right
    side carries a -y**(3/2) term plus the forcing that makes that solution
    exact.  The 3/2 power is evaluated as sign(y)|y|**(3/2): transiently
    negative fixed-point iterates would otherwise produce NaNs, while the
    converged solution is nonnegative on the intervals of interest.
    """
    if not 0.0 < alpha <= 1.0:
        raise ValueError("alpha must lie in (0, 1]")
    c1 = 40320.0 / math.gamma(9.0 - alpha)
    c2 = 3.0 * math.gamma(5.0 + alpha / 2.0) / math.gamma(5.0 - alpha / 2.0)
    c3 = 2.25 * math.gamma(alpha + 1.0)

    def f(t: float, y: float) -> float:
        y_pow = math.copysign(abs(y) ** 1.5, y)
        return (
            -y_pow
            + c1 * t ** (8.0 - alpha)
            - c2 * t ** (4.0 - alpha / 2.0)
            + (1.5 * t ** (alpha / 2.0) - t**4.0) ** 3
            + c3
        )

    def exact(t: float) -> float:
        return t**8.0 - 3.0 * t ** (4.0 + alpha / 2.0) + 2.25 * t**alpha

    return BenchmarkProblem(
        ivp=FractionalIVP(alpha=alpha, T=T, y0=0.0, f=f),
        exact=exact,
        name="garrappa",
        note="nonsmooth benchmark; solution is not an artificially smooth function",
    )


def constant_rhs_problem(alpha: float, T: float = 1.0) -> BenchmarkProblem:
    """f == gamma(alpha + 1), exact solution t**alpha: an exactness smoke test."""
    if not 0.0 < alpha <= 1.0:
        raise ValueError("alpha must lie in (0, 1]")
    g = math.gamma(alpha + 1.0)
    return BenchmarkProblem(
        ivp=FractionalIVP(alpha=alpha, T=T, y0=0.0, f=lambda t, y: g),
        exact=lambda t: t**alpha,
        name="constant",
        note="solver reproduces t**alpha exactly for any s >= 1",
    )


BUILTIN_PROBLEMS = {
    "garrappa": garrappa_problem,
    "constant": constant_rhs_problem,
}


# ---------------------------------------------------------------------------
# config-file loading
# ---------------------------------------------------------------------------

_ALLOWED_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow)
_ALLOWED_UNARY = (ast.UAdd, ast.USub)


def _compile_expression(expr: str, variables: tuple[str, ...]) -> Callable:
    """Compile a restricted arithmetic expression to a callable."""
    tree = ast.parse(expr, mode="eval")
    for node in ast.walk(tree):
        if isinstance(node, (ast.Expression, ast.Load)):
            continue
        if isinstance(node, ast.BinOp) and isinstance(node.op, _ALLOWED_BINOPS):
            continue
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, _ALLOWED_UNARY):
            continue
        if isinstance(node, (ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow, ast.UAdd, ast.USub)):
            continue
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            continue
        if isinstance(node, ast.Name) and node.id in variables + ("gamma", "alpha"):
            continue
        if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id == "gamma":
            continue
        raise ValueError(f"disallowed element {ast.dump(node)} in expression {expr!r}")
    code = compile(tree, "<problem-config>", "eval")

    def evaluate(**kwargs: float) -> float:
        return eval(code, {"__builtins__": {}}, {"gamma": math.gamma, **kwargs})

    return evaluate


def load_problem(path: str) -> BenchmarkProblem:
    """Read a problem description from a flat key-value file."""
    fields: dict[str, str] = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
            key, value = line.split("=", 1)
            fields[key.strip()] = value.strip()

    missing = {"name", "alpha", "T", "y0", "rhs"} - fields.keys()
    if missing:
        raise ValueError(f"{path}: missing required keys: {sorted(missing)}")

    alpha = float(fields["alpha"])
    horizon = float(fields["T"])
    y0 = float(fields["y0"])
    rhs = _compile_expression(fields["rhs"], ("t", "y"))

    exact = None
    if "exact" in fields:
        exact_expr = _compile_expression(fields["exact"], ("t",))
        exact = lambda t: exact_expr(t=t, alpha=alpha)  # noqa: E731

    return BenchmarkProblem(
        ivp=FractionalIVP(
            alpha=alpha,
            T=horizon,
            y0=y0,
            f=lambda t, y: rhs(t=t, y=y, alpha=alpha),
        ),
        exact=exact,
        name=fields["name"],
        note=f"loaded from {path}",
    )
