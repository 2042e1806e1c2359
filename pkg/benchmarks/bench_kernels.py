"""Benchmark the compiled kernels against the pure-python fallback.

Run from the repository root after installing the package:

    python benchmarks/bench_kernels.py [--points 1001] [--s 24] [--repeats 7]

Reports the best-of-N wall time of each kernel under both implementations
and the resulting speedup.  The recurrence kernel is the hot loop of the
solver's error sweeps (an O(s^2) compensated recurrence per grid point), so
it is the number that matters.
"""

import argparse
import math
import time

import numpy as np

from fracpoly import _core_py
from fracpoly.basis import legendre_basis
from fracpoly.integrals import canonical_expansion_legendre

try:
    from fracpoly import _core
except ImportError:
    _core = None


def best_of(repeats, fn, *args):
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--points", type=int, default=1001)
    parser.add_argument("--s", type=int, default=24)
    parser.add_argument("--repeats", type=int, default=7)
    args = parser.parse_args()

    cs = np.linspace(0.0, 1.0, args.points)
    a, b, d = legendre_basis().coefficient_arrays(args.s)
    coeffs = canonical_expansion_legendre(args.s - 1, 0.5).coeffs
    alpha = 0.5

    kernels = [
        ("psi_matrix", (a, b, d, alpha, cs, args.s)),
        ("poly_table", (a, b, d, cs, args.s)),
        ("horner_values", (coeffs, alpha, cs)),
    ]

    impls = [("python", _core_py)]
    if _core is not None:
        impls.append(("compiled", _core))
    else:
        print("compiled extension not available; showing fallback only")

    print(f"points={args.points} s={args.s} best of {args.repeats}")
    print(f"{'kernel':<16}" + "".join(f"{name:>12}" for name, _ in impls) + f"{'speedup':>10}")
    for kernel_name, kargs in kernels:
        times = [best_of(args.repeats, getattr(mod, kernel_name), *kargs) for _, mod in impls]
        row = f"{kernel_name:<16}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>9.1f}x"
        print(row)

    if _core is not None:
        ref = _core_py.psi_matrix(a, b, d, alpha, cs, args.s)
        val = _core.psi_matrix(a, b, d, alpha, cs, args.s)
        print(f"max |python - compiled| on psi_matrix: {np.max(np.abs(ref - val)):.3e}")


if __name__ == "__main__":
    main()
