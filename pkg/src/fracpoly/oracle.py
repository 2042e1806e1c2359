"""Extended-precision reference values for the fractional integrals.

Everything here runs on the standard library's ``decimal`` module at 60
significant digits; there is no dependency on a computer algebra system, so
the reference numbers are reproducible anywhere.

Two fully independent routes compute the same quantity:

* :func:`reference_integral` evaluates the canonical monomial expansion
  with exact integer factorial ratios.  The expansion cancels; with terms
  bounded by ~1e22 for degrees <= 40, the summation error stays below
  1e-27, i.e. at least 20 correct digits over the supported degree range
  (>= 25 digits for degrees <= 30, where terms stay below ~1e20).
* :func:`reference_integral_quadrature` applies the substitution
  x = c(1 - u^2), which turns the integrable endpoint singularity of the
  kernel into a u**(2*alpha - 1) factor, and integrates with double
  exponential (tanh-sinh) quadrature at two levels, failing loudly if the
  levels disagree.

Gamma at half-integer and integer arguments uses exact closed forms; any
other argument goes through the Spouge series, whose truncation error with
``a`` terms is below a**-0.5 * (2*pi)**-(a + 0.5) — the term count is
chosen so that bound sits beyond the working precision.

Golden fixtures (CSV columns kind, j, alpha, c, value, digits) pin a sample
of verified values; ``alpha`` and ``c`` in the CSV are decimal literals and
are used exactly as written.
"""

from __future__ import annotations

import csv
import math
from decimal import Context, Decimal, localcontext
from importlib import resources
from typing import NamedTuple


def _precision_context(prec: int):
    # localcontext(prec=...) requires Python 3.11; stay 3.10-compatible
    return localcontext(Context(prec=prec))

WORKING_PRECISION = 60
MAX_DEGREE = 40  # digit budget documented above

_PI_60 = Decimal("3.14159265358979323846264338327950288419716939937510582097494")

_SQRT2PI_CACHE: dict[int, Decimal] = {}
_SPOUGE_CACHE: dict[tuple[int, int], list[Decimal]] = {}

KINDS = ("legendre", "chebyshev", "chebyshev-orthonormal")


class DigitBudgetError(ValueError):
    """Requested degree exceeds the precision analysis documented here."""


def _as_decimal(x) -> Decimal:
    """Exact conversion: floats keep their binary value, strings are literal."""
    if isinstance(x, Decimal):
        return x
    if isinstance(x, str):
        return Decimal(x)
    return Decimal(x)  # int and float convert exactly


def _sqrt2pi() -> Decimal:
    prec = WORKING_PRECISION + 10
    if prec not in _SQRT2PI_CACHE:
        with _precision_context(prec):
            _SQRT2PI_CACHE[prec] = (2 * _PI_60).sqrt()
    return _SQRT2PI_CACHE[prec]


def _spouge_coefficients(a: int, prec: int) -> list[Decimal]:
    key = (a, prec)
    if key not in _SPOUGE_CACHE:
        with _precision_context(prec):
            coeffs = [_sqrt2pi()]
            sign = 1
            for k in range(1, a):
                base = Decimal(a - k)
                term = base ** (k - 1) * base.sqrt() * (base.exp())
                coeffs.append(sign * term / Decimal(math.factorial(k - 1)))
                sign = -sign
        _SPOUGE_CACHE[key] = coeffs
    return _SPOUGE_CACHE[key]


def gamma_ext(x) -> Decimal:
    """Gamma(x) for x > 0 at working precision.

    Closed forms for integers and half-integers; Spouge's series otherwise.
    """
    x = _as_decimal(x)
    if x <= 0:
        raise ValueError("gamma_ext is defined here for positive arguments only")
    prec = WORKING_PRECISION + 10
    with _precision_context(prec):
        if x == int(x):
            return +Decimal(math.factorial(int(x) - 1))
        half = x - Decimal("0.5")
        if half == int(half) and half >= 0:
            n = int(half)
            sqrt_pi = _PI_60.sqrt()
            val = (
                Decimal(math.factorial(2 * n))
                * sqrt_pi
                / (Decimal(4) ** n * Decimal(math.factorial(n)))
            )
            return +val
        # Spouge: a chosen so the truncation bound clears the working precision
        a = int(prec * math.log(10) / math.log(2 * math.pi)) + 6
        coeffs = _spouge_coefficients(a, prec)
        z = x - 1
        acc = coeffs[0]
        for k in range(1, a):
            acc += coeffs[k] / (z + k)
        za = z + a
        val = za ** (z + Decimal("0.5")) * (-za).exp() * acc
        return +val


# ---------------------------------------------------------------------------
# route 1: canonical expansion with exact integer ratios
# ---------------------------------------------------------------------------

def reference_integral(kind: str, j: int, alpha, c) -> Decimal:
    """I_alpha[P_j](c) for a built-in family, by extended-precision series.

    ``alpha`` and ``c`` given as floats are converted exactly (their binary
    values are used); strings and Decimals are taken literally.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown basis kind {kind!r}; choose from {KINDS}")
    if j < 0:
        raise ValueError("degree must be >= 0")
    if j > MAX_DEGREE:
        raise DigitBudgetError(
            f"degree {j} exceeds the supported budget ({MAX_DEGREE}); the "
            "documented precision analysis does not cover larger degrees"
        )
    alpha = _as_decimal(alpha)
    c = _as_decimal(c)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if c < 0:
        raise ValueError("evaluation point must be >= 0")
    if c == 0:
        return Decimal(0)

    with _precision_context(WORKING_PRECISION + 10):
        gammas = [gamma_ext(alpha + 1)]
        for i in range(1, j + 1):
            gammas.append(gammas[-1] * (alpha + i))
        c_pow = c ** alpha  # then multiplied by c per term
        total = Decimal(0)
        if kind == "legendre":
            for i in range(j + 1):
                ratio = math.factorial(j + i) // (math.factorial(j - i) * math.factorial(i))
                sign = -1 if (j - i) % 2 else 1
                total += sign * Decimal(ratio) * c_pow / gammas[i]
                c_pow *= c
            result = Decimal(2 * j + 1).sqrt() * total
        else:
            if j == 0:
                result = c_pow / gammas[0]
            else:
                for i in range(j + 1):
                    num = math.factorial(j + i - 1) * math.factorial(i) * 4**i
                    den = math.factorial(j - i) * math.factorial(2 * i)
                    sign = -1 if (j - i) % 2 else 1
                    total += sign * Decimal(num) / Decimal(den) * c_pow / gammas[i]
                    c_pow *= c
                result = j * Decimal(2).sqrt() * total
            if kind == "chebyshev" and j >= 1:
                result /= Decimal(2).sqrt()
        return +result


# ---------------------------------------------------------------------------
# route 2: singularity-removing substitution + tanh-sinh quadrature
# ---------------------------------------------------------------------------

def _basis_coefficients_dec(kind: str, s: int) -> list[tuple[Decimal, Decimal, Decimal]]:
    """(a_j, b_j, d_j) for j = 1..s-1 at working precision."""
    out = []
    for j in range(1, s):
        if kind == "legendre":
            b = (4 - Decimal(1) / (j * j)).sqrt()
            a = 2 * b
            d = Decimal(0)
            if j >= 2:
                d = Decimal(j - 1) / j * (Decimal(2 * j + 1) / (2 * j - 3)).sqrt()
        elif kind == "chebyshev-orthonormal":
            r2 = Decimal(2).sqrt()
            a = 2 * r2 if j == 1 else Decimal(4)
            b = r2 if j == 1 else Decimal(2)
            d = r2 if j == 2 else Decimal(1)
            if j == 1:
                d = Decimal(0)
        else:  # chebyshev, plain first-kind scaling
            a = Decimal(2) if j == 1 else Decimal(4)
            b = Decimal(1) if j == 1 else Decimal(2)
            d = Decimal(0) if j == 1 else Decimal(1)
        out.append((a, b, d))
    return out


def _poly_dec(coeffs, j: int, x: Decimal) -> Decimal:
    p_prev = Decimal(1)
    if j == 0:
        return p_prev
    a, b, d = coeffs[0]
    p = a * x - b
    for jj in range(2, j + 1):
        a, b, d = coeffs[jj - 1]
        p, p_prev = (a * x - b) * p - d * p_prev, p
    return p


def _tanh_sinh_level(f, h: Decimal, tail: Decimal) -> Decimal:
    """Sum f over tanh-sinh nodes of spacing h.

    Terminates once the actual terms (weight times integrand, not the bare
    weight: the integrand may grow toward an endpoint) stay below ``tail``
    for a few consecutive steps on both sides.
    """
    total = Decimal(0)
    half_pi = _PI_60 / 2
    k = 0
    quiet = 0
    while True:
        t = k * h
        et = t.exp()
        sinh_t = (et - 1 / et) / 2
        cosh_t = (et + 1 / et) / 2
        largest = Decimal(0)
        for sgn in ((1,) if k == 0 else (1, -1)):
            g = half_pi * sinh_t * sgn
            e2 = (2 * g).exp()
            u = e2 / (1 + e2)  # node in (0, 1)
            w = h * _PI_60 * cosh_t * e2 / ((1 + e2) ** 2)
            if 0 < u < 1:
                term = w * f(u)
                total += term
                largest = max(largest, abs(term))
        if k > 0 and largest < tail:
            quiet += 1
            if quiet >= 3:
                break
        else:
            quiet = 0
        k += 1
        if k > 5000:
            raise RuntimeError("tanh-sinh node budget exhausted")
    return total


def reference_integral_quadrature(kind: str, j: int, alpha, c) -> Decimal:
    """Same quantity as :func:`reference_integral` via numerical quadrature.

    Runs two tanh-sinh levels and raises if they disagree beyond 1e-30;
    never silently returns a degraded value.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown basis kind {kind!r}; choose from {KINDS}")
    alpha = _as_decimal(alpha)
    c = _as_decimal(c)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if c < 0:
        raise ValueError("evaluation point must be >= 0")
    if c == 0:
        return Decimal(0)

    with _precision_context(WORKING_PRECISION + 10):
        coeffs = _basis_coefficients_dec(kind, max(j + 1, 2))
        two_alpha_m1 = 2 * alpha - 1

        def integrand(u: Decimal) -> Decimal:
            x = c * (1 - u * u)
            return u**two_alpha_m1 * _poly_dec(coeffs, j, x)

        tail = Decimal(10) ** -(WORKING_PRECISION + 15)
        s1 = _tanh_sinh_level(integrand, Decimal(1) / 32, tail)
        s2 = _tanh_sinh_level(integrand, Decimal(1) / 64, tail)
        if abs(s1 - s2) > Decimal("1e-30") * (1 + abs(s2)):
            raise RuntimeError(
                f"tanh-sinh levels disagree by {abs(s1 - s2)}; refusing to return "
                "an unverified value"
            )
        return +(2 * c**alpha * s2 / gamma_ext(alpha))


# ---------------------------------------------------------------------------
# golden fixtures
# ---------------------------------------------------------------------------

class GoldenRow(NamedTuple):
    kind: str
    j: int
    alpha: str
    c: str
    value: Decimal
    digits: int


def load_golden() -> list[GoldenRow]:
    """Rows of the shipped fixture table (decimal strings, exact as written)."""
    rows = []
    with resources.files("fracpoly").joinpath("data/golden_integrals.csv").open() as fh:
        for rec in csv.DictReader(fh):
            rows.append(
                GoldenRow(
                    rec["kind"],
                    int(rec["j"]),
                    rec["alpha"],
                    rec["c"],
                    Decimal(rec["value"]),
                    int(rec["digits"]),
                )
            )
    return rows
