import math
from fractions import Fraction

import numpy as np
import pytest

from fracpoly.basis import (
    chebyshev_basis,
    chebyshev_orthonormal_basis,
    custom_basis,
    legendre_basis,
)
from fracpoly.integrals import (
    BACKEND_HORNER,
    BACKEND_RECURRENCE,
    canonical_expansion_chebyshev,
    canonical_expansion_for,
    canonical_expansion_legendre,
    compute_psi_integrals,
    horner_eval,
    integral_matrix,
    integral_values,
    psi_integral_table,
)
from fracpoly.oracle import gamma_ext, reference_integral
from fracpoly.quadrature import chebyshev_rule, legendre_rule

from _exact import alpha1_integral

TWO_OVER_SQRT_PI = 1.1283791670955126  # = 1/gamma(1.5)
LEG_J1_AT_ONE = 0.6514700158705599  # sqrt(3) (2/gamma(2.5) - 1/gamma(1.5))


def test_degree_zero_at_one():
    vals = compute_psi_integrals(legendre_basis(), 0.5, 1.0, 0)
    assert vals[0] == pytest.approx(TWO_OVER_SQRT_PI, abs=1e-15)


def test_degree_one_alpha_one_vanishes():
    # order-1 integral of the degree-1 member over [0, 1] is zero by orthogonality
    vals = compute_psi_integrals(legendre_basis(), 1.0, 1.0, 1)
    assert abs(vals[1]) <= 1e-15


def test_degree_one_half_order():
    vals = compute_psi_integrals(legendre_basis(), 0.5, 1.0, 1)
    assert vals[1] == pytest.approx(LEG_J1_AT_ONE, abs=1e-14)


@pytest.mark.parametrize("basis", [legendre_basis(), chebyshev_basis()], ids=lambda b: b.kind)
def test_zero_point_is_exactly_zero(basis):
    vals = compute_psi_integrals(basis, 0.7, 0.0, 12)
    assert np.all(vals == 0.0)
    hor = integral_values(basis, 0.7, np.array([0.0]), 5, BACKEND_HORNER)
    assert np.all(hor == 0.0)


def test_domain_errors():
    with pytest.raises(ValueError):
        compute_psi_integrals(legendre_basis(), 0.0, 0.5, 3)
    with pytest.raises(ValueError):
        compute_psi_integrals(legendre_basis(), -0.5, 0.5, 3)
    with pytest.raises(ValueError):
        compute_psi_integrals(legendre_basis(), 0.5, -0.1, 3)
    with pytest.raises(ValueError):
        psi_integral_table(legendre_basis(), 0.5, 0.5, -1)


@pytest.mark.parametrize("alpha", [0.3, 0.5, 1.5])
@pytest.mark.parametrize("k", range(6))
def test_shift_identity_for_monomials(alpha, k):
    # Psi_a[c g] = c Psi_a[g] - Psi_{a+1}[g] with g = c^k, via the closed form
    # Psi_a[c^k](c) = gamma(a) k! / gamma(a+k+1) c^(k+a)
    def psi(a, kk, c):
        return math.gamma(a) * math.factorial(kk) / math.gamma(a + kk + 1) * c ** (kk + a)

    for c in np.linspace(0.05, 1.0, 20):
        lhs = psi(alpha, k + 1, c)
        rhs = c * psi(alpha, k, c) - psi(alpha + 1.0, k, c)
        assert lhs == pytest.approx(rhs, abs=1e-13)


@pytest.mark.parametrize("kind,basis", [
    ("legendre", legendre_basis()),
    ("chebyshev", chebyshev_basis()),
])
def test_alpha_one_matches_exact_antiderivative(kind, basis):
    cs = [Fraction(1, 4), Fraction(2, 3), Fraction(1)]
    for c in cs:
        vals = compute_psi_integrals(basis, 1.0, float(c), 8)
        for j in range(9):
            assert vals[j] == pytest.approx(alpha1_integral(kind, j, c), abs=1e-12)


# ---------------------------------------------------------------------------
# canonical expansions
# ---------------------------------------------------------------------------

def test_legendre_expansion_degree_zero():
    exp = canonical_expansion_legendre(0, 0.5)
    np.testing.assert_allclose(exp.coeffs, [TWO_OVER_SQRT_PI], atol=1e-15)


def test_legendre_expansion_degree_one():
    exp = canonical_expansion_legendre(1, 0.5)
    expected = [-math.sqrt(3) / math.gamma(1.5), 2 * math.sqrt(3) / math.gamma(2.5)]
    np.testing.assert_allclose(exp.coeffs, expected, rtol=1e-15)


def test_chebyshev_expansion_degree_zero():
    exp = canonical_expansion_chebyshev(0, 0.5)
    np.testing.assert_allclose(exp.coeffs, [TWO_OVER_SQRT_PI], atol=1e-15)


def test_chebyshev_expansion_degree_one_antisymmetry():
    # at c = 1 the order-1 integral of the odd member vanishes
    exp = canonical_expansion_chebyshev(1, 1.0)
    assert horner_eval(exp, 1.0) == pytest.approx(0.0, abs=1e-15)


@pytest.mark.parametrize("make,kind", [
    (canonical_expansion_legendre, "legendre"),
    (canonical_expansion_chebyshev, "chebyshev-orthonormal"),
])
def test_expansion_signs_alternate(make, kind):
    for j in (1, 4, 9):
        coeffs = make(j, 0.5).coeffs
        signs = np.sign(coeffs)
        assert np.all(signs == (-1.0) ** (j - np.arange(j + 1)))


def test_expansion_coefficients_match_extended_precision():
    # multiplicative accumulation stays within a few ulps of the exact ratios
    j, alpha = 24, 0.5
    coeffs = canonical_expansion_legendre(j, alpha).coeffs
    for i in (0, 5, 12, 24):
        ratio = math.factorial(j + i) // (math.factorial(j - i) * math.factorial(i))
        exact = (
            (-1.0) ** (j - i)
            * math.sqrt(2 * j + 1)
            * float(ratio)
            / float(gamma_ext(alpha + i + 1))
        )
        assert coeffs[i] == pytest.approx(exact, rel=1e-12)
    # documented growth: the top coefficients reach the 4^j sqrt(2j+1) scale
    assert 1e13 < np.max(np.abs(coeffs)) < 1e17


def test_horner_at_zero():
    exp = canonical_expansion_legendre(3, 0.5)
    assert horner_eval(exp, 0.0) == 0.0


def test_horner_degree_zero_quarter_point():
    exp = canonical_expansion_legendre(0, 0.5)
    assert horner_eval(exp, 0.25) == pytest.approx(0.5 * TWO_OVER_SQRT_PI, abs=1e-15)


def test_horner_matches_recurrence_example():
    exp = canonical_expansion_legendre(1, 0.5)
    assert horner_eval(exp, 1.0) == pytest.approx(LEG_J1_AT_ONE, abs=1e-13)


# ---------------------------------------------------------------------------
# backend comparison
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("basis,rule_fn", [
    (legendre_basis(), legendre_rule),
    (chebyshev_orthonormal_basis(), chebyshev_rule),
], ids=["legendre", "chebyshev-orthonormal"])
def test_backend_agreement_at_interior_nodes(basis, rule_fn):
    # c^i damps the large canonical coefficients here, so the Horner route
    # still holds ~11 digits; toward c = 1 it cannot (see the test below)
    rule = rule_fn(25)
    interior = rule.nodes[rule.nodes <= 0.5]
    for alpha in (0.25, 0.5, 0.75):
        rec = integral_values(basis, alpha, interior, 11, BACKEND_RECURRENCE)
        hor = integral_values(basis, alpha, interior, 11, BACKEND_HORNER)
        assert np.max(np.abs(rec - hor)) <= 1e-11


@pytest.mark.parametrize("basis,rule_fn", [
    (legendre_basis(), legendre_rule),
    (chebyshev_orthonormal_basis(), chebyshev_rule),
], ids=["legendre", "chebyshev-orthonormal"])
def test_backend_agreement_all_nodes_within_horner_floor(basis, rule_fn):
    # near c = 1 the canonical coefficients reach ~1e7 at degree 10, so the
    # Horner route cannot agree beyond ~(sum |p_i|) * eps ~ 1e-9 there; the
    # bound asserted here is that rounding floor, not the interior behaviour
    rule = rule_fn(25)
    for alpha in (0.25, 0.5, 0.75):
        rec = integral_values(basis, alpha, rule.nodes, 11, BACKEND_RECURRENCE)
        hor = integral_values(basis, alpha, rule.nodes, 11, BACKEND_HORNER)
        assert np.max(np.abs(rec - hor)) <= 5e-9


def test_backends_diverge_at_high_degree():
    # by degree 24 the canonical route has lost everything at the top nodes
    rule = legendre_rule(25)
    rec = integral_values(legendre_basis(), 0.5, rule.nodes, 25, BACKEND_RECURRENCE)
    hor = integral_values(legendre_basis(), 0.5, rule.nodes, 25, BACKEND_HORNER)
    gap = np.max(np.abs(rec - hor), axis=0)
    assert np.max(gap[:11]) <= 5e-9
    assert np.max(gap[20:]) >= 1e-6
    assert gap[24] >= 1.0


def test_recurrence_matches_oracle_through_degree_25():
    basis = legendre_basis()
    points = np.concatenate([legendre_rule(26).nodes[::5], [0.01, 1.0]])
    table = psi_integral_table(basis, 0.5, points, 25)
    for i, c in enumerate(points):
        for j in range(26):
            ref = float(reference_integral("legendre", j, 0.5, c))
            assert abs(table[i, j] - ref) <= 1e-11


# ---------------------------------------------------------------------------
# node matrices
# ---------------------------------------------------------------------------

def test_matrix_alpha_one_singleton():
    m = integral_matrix(legendre_basis(), 1.0, legendre_rule(1), 1)
    np.testing.assert_allclose(m.values, [[0.5]], atol=1e-15)


def test_matrix_first_column_closed_form():
    rule = legendre_rule(2)
    m = integral_matrix(legendre_basis(), 0.5, rule, 2)
    np.testing.assert_allclose(
        m.values[:, 0], rule.nodes**0.5 / math.gamma(1.5), atol=1e-15
    )


def test_matrix_backends_jointly():
    rule = legendre_rule(4)
    rec = integral_matrix(legendre_basis(), 0.5, rule, 4, BACKEND_RECURRENCE)
    hor = integral_matrix(legendre_basis(), 0.5, rule, 4, BACKEND_HORNER)
    np.testing.assert_allclose(rec.values, hor.values, atol=1e-13)
    assert rec.backend == BACKEND_RECURRENCE and hor.backend == BACKEND_HORNER


def test_matrix_validation():
    with pytest.raises(ValueError, match="nodes"):
        integral_matrix(legendre_basis(), 0.5, legendre_rule(3), 4)
    with pytest.raises(ValueError, match="backend"):
        integral_values(legendre_basis(), 0.5, np.array([0.5]), 3, "simd")


def test_custom_basis_has_no_canonical_route():
    basis = custom_basis(lambda j: 4.0, lambda j: 2.0, lambda j: 1.0, lambda j: 1.0)
    with pytest.raises(ValueError, match="built-in"):
        integral_values(basis, 0.5, np.array([0.5]), 3, BACKEND_HORNER)


def test_chebyshev_scaling_between_family_variants():
    # plain first-kind values are the unit-norm values divided by sqrt(2)
    cs = np.array([0.2, 0.8, 1.0])
    plain = integral_values(chebyshev_basis(), 0.5, cs, 6, BACKEND_HORNER)
    unit = integral_values(chebyshev_orthonormal_basis(), 0.5, cs, 6, BACKEND_HORNER)
    # scaled and unscaled coefficient arrays round differently during the
    # nested evaluation, so the relation holds to evaluation accuracy only
    np.testing.assert_allclose(plain[:, 1:], unit[:, 1:] / math.sqrt(2.0),
                               rtol=1e-10, atol=1e-14)
    np.testing.assert_allclose(plain[:, 0], unit[:, 0], rtol=1e-15)


def test_table_rows_independent_of_batching():
    basis = legendre_basis()
    cs = np.array([0.1, 0.5, 0.997])
    batched = psi_integral_table(basis, 0.5, cs, 20)
    for i, c in enumerate(cs):
        single = psi_integral_table(basis, 0.5, np.array([c]), 20)
        np.testing.assert_array_equal(batched[i], single[0])


def test_deterministic_across_calls():
    basis = chebyshev_basis()
    cs = np.linspace(0.0, 1.0, 17)
    first = psi_integral_table(basis, 0.3, cs, 15)
    second = psi_integral_table(basis, 0.3, cs, 15)
    np.testing.assert_array_equal(first, second)
