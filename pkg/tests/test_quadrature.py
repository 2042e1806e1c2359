import math

import numpy as np
import pytest

from fracpoly.basis import chebyshev_basis, eval_poly, legendre_basis
from fracpoly.quadrature import chebyshev_rule, legendre_rule


def chebyshev_moment(k: int) -> float:
    """Integral of c^k under the weight 1/(pi sqrt(c(1-c))): binom(2k,k)/4^k."""
    return math.comb(2 * k, k) / 4.0**k


def test_chebyshev_midpoint():
    rule = chebyshev_rule(1)
    np.testing.assert_array_equal(rule.nodes, [0.5])
    np.testing.assert_array_equal(rule.weights, [1.0])


def test_chebyshev_two_points():
    rule = chebyshev_rule(2)
    np.testing.assert_allclose(
        rule.nodes, [(1 - math.sqrt(2) / 2) / 2, (1 + math.sqrt(2) / 2) / 2], atol=1e-15
    )
    np.testing.assert_allclose(rule.weights, [0.5, 0.5])


def test_chebyshev_nodes_symmetric_about_half():
    rule = chebyshev_rule(3)
    assert float(rule.weights @ rule.nodes) == pytest.approx(0.5, abs=1e-15)


def test_legendre_midpoint():
    rule = legendre_rule(1)
    np.testing.assert_array_equal(rule.nodes, [0.5])
    np.testing.assert_array_equal(rule.weights, [1.0])


def test_legendre_two_points():
    rule = legendre_rule(2)
    offset = 1.0 / (2.0 * math.sqrt(3.0))
    np.testing.assert_allclose(rule.nodes, [0.5 - offset, 0.5 + offset], atol=1e-15)
    np.testing.assert_allclose(rule.weights, [0.5, 0.5], atol=1e-15)


def test_legendre_degree_nine_monomial():
    rule = legendre_rule(5)
    assert float(rule.weights @ rule.nodes**9) == pytest.approx(0.1, abs=1e-15)


@pytest.mark.parametrize("s", range(1, 21))
def test_legendre_exactness(s):
    rule = legendre_rule(s)
    for k in range(2 * s):
        approx = float(rule.weights @ rule.nodes**k)
        assert approx == pytest.approx(1.0 / (k + 1), abs=1e-13)


@pytest.mark.parametrize("s", range(1, 21))
def test_chebyshev_exactness(s):
    rule = chebyshev_rule(s)
    for k in range(2 * s):
        approx = float(rule.weights @ rule.nodes**k)
        assert approx == pytest.approx(chebyshev_moment(k), abs=1e-13)


@pytest.mark.parametrize("rule_fn", [legendre_rule, chebyshev_rule])
def test_weights_normalized(rule_fn):
    for s in (1, 5, 12, 20):
        assert abs(rule_fn(s).weights.sum() - 1.0) <= 1e-14


@pytest.mark.parametrize("rule_fn", [legendre_rule, chebyshev_rule])
def test_nodes_inside_open_interval_and_weights_positive(rule_fn):
    for s in (1, 2, 7, 20):
        rule = rule_fn(s)
        assert np.all(rule.nodes > 0.0) and np.all(rule.nodes < 1.0)
        assert np.all(np.diff(rule.nodes) > 0)
        assert np.all(rule.weights > 0.0)


@pytest.mark.parametrize("rule_fn", [legendre_rule, chebyshev_rule])
def test_node_interlacing(rule_fn):
    for s in (2, 5, 11):
        small = rule_fn(s).nodes
        big = rule_fn(s + 1).nodes
        # big[i] < small[i] < big[i+1]
        assert np.all(big[:-1] < small) and np.all(small < big[1:])


@pytest.mark.parametrize("basis,rule_fn", [
    (legendre_basis(), legendre_rule),
    (chebyshev_basis(), chebyshev_rule),
], ids=["legendre", "chebyshev"])
def test_nodes_are_polynomial_zeros(basis, rule_fn):
    for s in (3, 10, 25):
        rule = rule_fn(s)
        residuals = eval_poly(basis, s, rule.nodes)
        assert np.max(np.abs(residuals)) <= 1e-12


@pytest.mark.parametrize("rule_fn", [legendre_rule, chebyshev_rule])
def test_zero_size_rejected(rule_fn):
    with pytest.raises(ValueError):
        rule_fn(0)
