"""Command-line front end: experiment sweeps as reproducible CSV files.

Every output starts with a single ``#``-prefixed manifest line (command,
parameters, library version, timestamp, output path); the body below it is
deterministic, so identical invocations produce byte-identical bodies.
Values are written with 17 significant digits (binary64 round-trip safe).

Exit codes: 0 success (including sweeps with non-converged entries),
1 usage error, 2 internal computational failure.
"""

from __future__ import annotations

import argparse
import sys
from datetime import datetime, timezone

import numpy as np

from . import __version__
from .basis import KIND_CHEBYSHEV, KIND_LEGENDRE, basis_by_kind
from .collocation import error_curve
from .integrals import BACKEND_HORNER, BACKEND_RECURRENCE, integral_values
from .oracle import reference_integral
from .problems import BUILTIN_PROBLEMS, load_problem
from .quadrature import chebyshev_rule, legendre_rule

USAGE_ERROR = 1
INTERNAL_ERROR = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits with 2; we reserve that
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _manifest(command: str, params: dict, out: str) -> str:
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    joined = " ".join(f"{k}={v}" for k, v in params.items())
    return f"# fracpoly {__version__} command={command} {joined} generated={stamp} out={out}"


def _write_csv(out: str, manifest: str, header: str, rows: list[str]) -> None:
    text = "\n".join([manifest, header, *rows]) + "\n"
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _parse_s_values(args) -> list[int]:
    if args.s_range:
        try:
            lo, hi = (int(part) for part in args.s_range.split(":"))
        except ValueError:
            raise ValueError(f"--s-range expects A:B, got {args.s_range!r}") from None
        if lo < 1 or hi < lo:
            raise ValueError(f"invalid --s-range {args.s_range!r}")
        return list(range(lo, hi + 1))
    return [args.s]


def cmd_nodes(args) -> int:
    rule = legendre_rule(args.s) if args.basis == KIND_LEGENDRE else chebyshev_rule(args.s)
    rows = [
        f"{i + 1},{_fmt(c)},{_fmt(w)}"
        for i, (c, w) in enumerate(zip(rule.nodes, rule.weights))
    ]
    manifest = _manifest("nodes", {"basis": args.basis, "s": args.s}, args.out)
    _write_csv(args.out, manifest, "i,node,weight", rows)
    return 0


def cmd_integral_errors(args) -> int:
    basis = basis_by_kind(args.basis)
    rule = legendre_rule(args.s) if args.basis == KIND_LEGENDRE else chebyshev_rule(args.s)
    refs = np.array(
        [
            [float(reference_integral(args.basis, j, args.alpha, c)) for j in range(args.s)]
            for c in rule.nodes
        ]
    )
    errors = {}
    for backend in (BACKEND_RECURRENCE, BACKEND_HORNER):
        values = integral_values(basis, args.alpha, rule.nodes, args.s, backend)
        errors[backend] = np.max(np.abs(values - refs), axis=0)
    rows = [
        f"{j},{_fmt(errors[BACKEND_RECURRENCE][j])},{_fmt(errors[BACKEND_HORNER][j])}"
        for j in range(args.s)
    ]
    manifest = _manifest(
        "integral-errors",
        {"basis": args.basis, "alpha": args.alpha, "s": args.s},
        args.out,
    )
    _write_csv(args.out, manifest, "j,err_recurrence,err_horner", rows)
    return 0


def cmd_solve(args) -> int:
    if args.problem in BUILTIN_PROBLEMS:
        problem = BUILTIN_PROBLEMS[args.problem](args.alpha, args.T)
    else:
        problem = load_problem(args.problem)
        if not (problem.ivp.alpha == args.alpha and problem.ivp.T == args.T):
            print(
                f"note: using alpha={problem.ivp.alpha}, T={problem.ivp.T} from {args.problem}",
                file=sys.stderr,
            )
    if problem.exact is None:
        print(
            f"problem {problem.name!r} has no exact solution; the error sweep needs one",
            file=sys.stderr,
        )
        return USAGE_ERROR

    basis = basis_by_kind(args.basis)
    s_values = _parse_s_values(args)
    rows_data = error_curve(problem.ivp, problem.exact, basis, args.backend, s_values)
    rows = [
        f"{row.s},{_fmt(row.error)},{row.iterations},{str(row.converged).lower()}"
        for row in rows_data
    ]
    manifest = _manifest(
        "solve",
        {
            "problem": problem.name,
            "basis": args.basis,
            "backend": args.backend,
            "alpha": problem.ivp.alpha,
            "T": problem.ivp.T,
            "s": ",".join(str(s) for s in s_values),
        },
        args.out,
    )
    _write_csv(args.out, manifest, "s,error,iterations,converged", rows)
    best = min(rows_data, key=lambda row: row.error)
    summary = f"best: s={best.s} error={_fmt(best.error)}"
    print(summary, file=sys.stderr if args.out == "-" else sys.stdout)
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="fracpoly", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"fracpoly {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_backend=False, with_problem=False):
        p.add_argument(
            "--basis",
            choices=[KIND_CHEBYSHEV, KIND_LEGENDRE],
            default=KIND_LEGENDRE,
        )
        p.add_argument("--alpha", type=float, default=0.5)
        p.add_argument("--s", type=int, default=25)
        p.add_argument("--out", default="-", help="output path, '-' for stdout")
        if with_backend:
            p.add_argument(
                "--backend",
                choices=[BACKEND_RECURRENCE, BACKEND_HORNER],
                default=BACKEND_RECURRENCE,
            )
        if with_problem:
            p.add_argument("--s-range", metavar="A:B", help="inclusive sweep range")
            p.add_argument("--T", type=float, default=1.0)
            p.add_argument(
                "--problem",
                default="garrappa",
                help="built-in name (garrappa, constant) or a config file path",
            )

    p_nodes = sub.add_parser("nodes", help="quadrature nodes and weights")
    common(p_nodes)
    p_nodes.set_defaults(func=cmd_nodes)

    p_err = sub.add_parser(
        "integral-errors",
        help="per-degree max error of each backend against the reference values",
    )
    common(p_err)
    p_err.set_defaults(func=cmd_integral_errors)

    p_solve = sub.add_parser("solve", help="error sweep of the collocation solver")
    common(p_solve, with_backend=True, with_problem=True)
    p_solve.set_defaults(func=cmd_solve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"fracpoly: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except Exception as exc:  # computational failure
        print(f"fracpoly: internal error: {exc}", file=sys.stderr)
        return INTERNAL_ERROR


if __name__ == "__main__":
    sys.exit(main())
