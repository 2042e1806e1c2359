"""Pure-python (numpy) kernels for the hot numerical loops.

A compiled twin of this module lives in ``_core.pyx``; ``fracpoly._kernels``
picks whichever is available at import time.  Both expose the same functions
and must agree to double-double accuracy.

The triangular recurrence that produces fractional integrals of recurrence
bases is exact in real arithmetic but ill-conditioned in floating point for
evaluation points near 1: intermediate table entries become exponentially
small relative to the terms combined to produce them, so plain binary64
loses up to all 16 digits by degree ~24 (condition of the seed-to-output
map reaches ~1e16).  The kernels therefore carry the recurrence in
compensated double-double arithmetic (~31 significant digits) and round to
binary64 only on output, which keeps the result within a few ulps of the
true value for every point of [0, 1] at the degrees this library targets.

The canonical-basis Horner evaluator is deliberately *not* compensated: it
is the unstable baseline the recurrence is measured against.
"""

from __future__ import annotations

import math

import numpy as np

BACKEND = "python"

_SPLIT = 134217729.0  # 2**27 + 1, Dekker splitting constant


# ---------------------------------------------------------------------------
# double-double primitives (Dekker/Knuth; vectorized over numpy arrays)
# ---------------------------------------------------------------------------

def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _quick_two_sum(a, b):
    # requires |a| >= |b| (or a == 0)
    s = a + b
    return s, b - (s - a)


def _two_prod(a, b):
    p = a * b
    ta = _SPLIT * a
    ahi = ta - (ta - a)
    alo = a - ahi
    tb = _SPLIT * b
    bhi = tb - (tb - b)
    blo = b - bhi
    return p, ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo


def _dd_add(ah, al, bh, bl):
    s1, s2 = _two_sum(ah, bh)
    t1, t2 = _two_sum(al, bl)
    s2 = s2 + t1
    s1, s2 = _quick_two_sum(s1, s2)
    s2 = s2 + t2
    return _quick_two_sum(s1, s2)


def _dd_mul(ah, al, bh, bl):
    p1, p2 = _two_prod(ah, bh)
    p2 = p2 + (ah * bl + al * bh)
    return _quick_two_sum(p1, p2)


def _dd_mul_d(ah, al, b):
    p1, p2 = _two_prod(ah, b)
    p2 = p2 + al * b
    return _quick_two_sum(p1, p2)


def _dd_div(ah, al, bh, bl):
    q1 = ah / bh
    th, tl = _dd_mul_d(bh, bl, q1)
    rh, rl = _dd_add(ah, al, -th, -tl)
    q2 = rh / bh
    th, tl = _dd_mul_d(bh, bl, q2)
    rh, rl = _dd_add(rh, rl, -th, -tl)
    q3 = rh / bh
    q1, q2 = _quick_two_sum(q1, q2)
    return _dd_add(q1, q2, q3, 0.0)


def _dd_sqrt(ah, al):
    # one dd Newton step from the binary64 estimate
    y = np.sqrt(ah)
    qh, ql = _dd_div(ah, al, y, 0.0)
    sh, sl = _dd_add(qh, ql, y, 0.0)
    return _dd_mul_d(sh, sl, 0.5)


def power_pair(cs, alpha):
    """c**alpha for c > 0 as a (hi, lo) double-double pair.

    Decomposes alpha into integer part and binary fraction bits and builds
    c**alpha from exact integer powers and a square-root chain, avoiding any
    transcendental whose last bits would poison the recurrence seeds.
    """
    cs = np.asarray(cs, dtype=float)
    if np.any(cs <= 0.0):
        raise ValueError("power_pair requires positive inputs")
    if not alpha > 0.0:
        raise ValueError("alpha must be positive")
    ipart = math.floor(alpha)
    frac = alpha - ipart  # exact: both are binary64

    rh = np.ones_like(cs)
    rl = np.zeros_like(cs)
    # integer part by repeated squaring
    ph, pl = cs.copy(), np.zeros_like(cs)
    n = ipart
    while n:
        if n & 1:
            rh, rl = _dd_mul(rh, rl, ph, pl)
        n >>= 1
        if n:
            ph, pl = _dd_mul(ph, pl, ph, pl)
    # fraction part: c**(2**-k) via square-root chain over the bits of frac
    ph, pl = cs.copy(), np.zeros_like(cs)
    guard = 0
    while frac:
        ph, pl = _dd_sqrt(ph, pl)
        frac *= 2.0  # exact
        if frac >= 1.0:
            frac -= 1.0  # exact
            rh, rl = _dd_mul(rh, rl, ph, pl)
        guard += 1
        if guard > 1100:  # cannot happen for finite binary64 alpha
            raise RuntimeError("alpha bit expansion did not terminate")
    return rh, rl


# ---------------------------------------------------------------------------
# rolling state of the triangular table
# ---------------------------------------------------------------------------

class PsiState:
    """Three rolling column vectors of the triangular integral table.

    Column ``j`` holds the family of raised-order integrals of the degree-j
    polynomial (entry ``k`` is the order-(alpha+k) unnormalized integral at
    ``c``); each advance shortens the vectors by one entry.  Values are kept
    as double-double (hi, lo) array pairs, vectorized over the evaluation
    points; ``psi_curr[0] / gamma(alpha)`` is the order-alpha integral of
    the current degree.
    """

    __slots__ = ("alpha", "c", "degree",
                 "psi_prev2", "psi_prev1", "psi_curr")

    def __init__(self, alpha, c, table_size):
        c = np.atleast_1d(np.asarray(c, dtype=float))
        self.alpha = alpha
        self.c = c
        self.degree = 0
        ch, cl = power_pair(c, alpha)
        seeds_h = np.empty((table_size, c.size))
        seeds_l = np.empty((table_size, c.size))
        for k in range(table_size):
            dh, dl = _two_sum(alpha, float(k))  # exact split of alpha + k
            seeds_h[k], seeds_l[k] = _dd_div(ch, cl, dh, dl)
            ch, cl = _dd_mul_d(ch, cl, c)
        self.psi_prev2 = None
        self.psi_prev1 = None
        self.psi_curr = (seeds_h, seeds_l)

    def diagonal(self):
        """Top entry of the current column: order-alpha value at degree j."""
        h, l = self.psi_curr
        return h[0] + l[0]

    def advance(self, a, b, d):
        """Step to the next degree with recurrence coefficients (a, b, d)."""
        uh, ul = self.psi_curr
        n = uh.shape[0] - 1
        if n < 1:
            raise ValueError("table exhausted: increase table_size")
        axh, axl = _two_prod(a, self.c)
        axh, axl = _dd_add(axh, axl, -b, 0.0)
        th, tl = _dd_mul(axh, axl, uh[:n], ul[:n])
        sh, sl = _dd_mul_d(uh[1:n + 1], ul[1:n + 1], a)
        nh, nl = _dd_add(th, tl, -sh, -sl)
        if d != 0.0:
            vh, vl = self.psi_prev1
            wh, wl = _dd_mul_d(vh[:n], vl[:n], d)
            nh, nl = _dd_add(nh, nl, -wh, -wl)
        self.psi_prev2 = self.psi_prev1
        self.psi_prev1 = self.psi_curr
        self.psi_curr = (nh, nl)
        self.degree += 1


def psi_matrix(a, b, d, alpha, cs, s):
    """Order-alpha integrals of degrees 0..s-1 at each point of ``cs``.

    ``a``, ``b``, ``d`` are the recurrence coefficient arrays indexed by
    degree (entries 0 unused; ``d[1]`` treated as 0).  Returns an (m, s)
    binary64 array; rows for c == 0 are exactly zero.
    """
    cs = np.atleast_1d(np.asarray(cs, dtype=float))
    out = np.zeros((cs.size, s))
    pos = cs > 0.0
    if np.any(pos):
        state = PsiState(alpha, cs[pos], s)
        vals = np.empty((s, int(pos.sum())))
        vals[0] = state.diagonal()
        for j in range(1, s):
            state.advance(a[j], b[j], d[j] if j >= 2 else 0.0)
            vals[j] = state.diagonal()
        out[pos] = vals.T / math.gamma(alpha)
    return out


# ---------------------------------------------------------------------------
# plain binary64 kernels
# ---------------------------------------------------------------------------

def poly_table(a, b, d, cs, s):
    """Values P_j(c) for j = 0..s-1 at each point: forward recurrence."""
    cs = np.atleast_1d(np.asarray(cs, dtype=float))
    out = np.empty((cs.size, s))
    out[:, 0] = 1.0
    if s >= 2:
        out[:, 1] = a[1] * cs - b[1]
        for j in range(2, s):
            out[:, j] = (a[j] * cs - b[j]) * out[:, j - 1] - d[j] * out[:, j - 2]
    return out


def horner_values(coeffs, alpha, cs):
    """Evaluate sum_i p_i c**(i+alpha) by the nested scheme, one accumulator.

    Runs in plain binary64 on purpose; its rounding behaviour is the object
    of study, not a defect to fix here.
    """
    cs = np.atleast_1d(np.asarray(cs, dtype=float))
    rho = np.full(cs.shape, coeffs[-1])
    for i in range(len(coeffs) - 2, -1, -1):
        rho = rho * cs + coeffs[i]
    return rho * cs ** alpha
