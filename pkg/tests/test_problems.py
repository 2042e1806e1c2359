import math

import numpy as np
import pytest

from fracpoly.basis import legendre_basis
from fracpoly.collocation import SolverConfig, solve
from fracpoly.problems import (
    BUILTIN_PROBLEMS,
    constant_rhs_problem,
    garrappa_problem,
    load_problem,
)


def caputo_of_power(p: float, alpha: float, t: float) -> float:
    """Termwise rule for t**p with p > 0: gamma(p+1)/gamma(p+1-alpha) t**(p-alpha)."""
    return math.gamma(p + 1.0) / math.gamma(p + 1.0 - alpha) * t ** (p - alpha)


def test_garrappa_initial_value():
    problem = garrappa_problem(0.5)
    assert problem.exact(0.0) == 0.0
    assert problem.ivp.y0 == 0.0


def test_garrappa_exact_at_endpoint():
    problem = garrappa_problem(0.5)
    assert problem.exact(1.0) == pytest.approx(0.25, abs=1e-15)


def test_garrappa_rhs_at_origin():
    problem = garrappa_problem(0.5)
    assert problem.ivp.f(0.0, 0.0) == pytest.approx(2.25 * math.gamma(1.5), abs=1e-15)


@pytest.mark.parametrize("alpha", [0.5, 0.9])
def test_garrappa_transcription_self_consistency(alpha):
    # Caputo derivative of the exact solution must equal f(t, exact(t))
    problem = garrappa_problem(alpha, T=1.0)
    for t in np.linspace(0.02, 1.0, 50):
        lhs = (
            caputo_of_power(8.0, alpha, t)
            - 3.0 * caputo_of_power(4.0 + alpha / 2.0, alpha, t)
            + 2.25 * caputo_of_power(alpha, alpha, t)
        )
        rhs = problem.ivp.f(t, problem.exact(t))
        assert lhs == pytest.approx(rhs, abs=1e-11)


def test_garrappa_negative_iterate_guard():
    problem = garrappa_problem(0.5)
    # sign(y)|y|^{3/2} keeps transiently negative iterates finite
    value = problem.ivp.f(0.0, -1.0)
    assert math.isfinite(value)
    assert value == pytest.approx(1.0 + 2.25 * math.gamma(1.5), abs=1e-15)


def test_constant_problem_values():
    problem = constant_rhs_problem(0.5)
    assert problem.exact(1.0) == 1.0
    assert problem.exact(0.25) == pytest.approx(0.5, abs=1e-16)


@pytest.mark.parametrize("factory", list(BUILTIN_PROBLEMS.values()))
def test_exact_matches_initial_value(factory):
    problem = factory(0.5)
    assert abs(problem.exact(0.0) - problem.ivp.y0) <= 1e-15


def test_alpha_validation():
    with pytest.raises(ValueError):
        garrappa_problem(0.0)
    with pytest.raises(ValueError):
        constant_rhs_problem(1.5)


# ---------------------------------------------------------------------------
# config files
# ---------------------------------------------------------------------------

CONFIG = """\
# order-alpha relaxation with a known solution
name = decaying
alpha = 0.5
T = 1.0
y0 = 0.0
rhs = gamma(alpha + 1) - 0 * y
exact = t**alpha
"""


def test_load_problem_roundtrip(tmp_path):
    path = tmp_path / "decaying.txt"
    path.write_text(CONFIG)
    problem = load_problem(str(path))
    assert problem.name == "decaying"
    assert problem.ivp.alpha == 0.5
    assert problem.exact(0.25) == pytest.approx(0.5, abs=1e-15)
    solution, report = solve(problem.ivp, legendre_basis(), SolverConfig(s=2))
    assert report.converged
    ts = np.linspace(0.0, 1.0, 101)
    assert np.max(np.abs(solution.evaluate(ts) - ts**0.5)) <= 1e-14


def test_load_problem_missing_keys(tmp_path):
    path = tmp_path / "broken.txt"
    path.write_text("name = x\nalpha = 0.5\n")
    with pytest.raises(ValueError, match="missing required"):
        load_problem(str(path))


def test_load_problem_rejects_bad_lines(tmp_path):
    path = tmp_path / "broken.txt"
    path.write_text("name: x\n")
    with pytest.raises(ValueError, match="key = value"):
        load_problem(str(path))


@pytest.mark.parametrize("expr", [
    "__import__('os').system('true')",
    "t.__class__",
    "min(t, y)",
    "lambda: 1",
    "[t for t in (1,)]",
    "'abc'",
])
def test_expression_whitelist(tmp_path, expr):
    path = tmp_path / "evil.txt"
    path.write_text(
        f"name = evil\nalpha = 0.5\nT = 1.0\ny0 = 0.0\nrhs = {expr}\n"
    )
    with pytest.raises((ValueError, SyntaxError)):
        load_problem(str(path))


def test_expression_supports_powers_and_gamma(tmp_path):
    path = tmp_path / "rich.txt"
    path.write_text(
        "name = rich\nalpha = 0.25\nT = 2.0\ny0 = 1.0\n"
        "rhs = -y**2 + t**(8 - alpha) / gamma(3) + (-t)**2\n"
    )
    problem = load_problem(str(path))
    assert problem.exact is None
    assert problem.ivp.f(1.0, 2.0) == pytest.approx(-4.0 + 0.5 + 1.0, abs=1e-15)
