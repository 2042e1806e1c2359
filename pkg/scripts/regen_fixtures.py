"""Regenerate the golden fixture table.

Each value is computed by the extended-precision series and cross-checked
against the independent quadrature route before being written; a disagreement
aborts the run.  Output values carry 32 significant digits.
"""

import sys
from decimal import Decimal
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from fracpoly import oracle  # noqa: E402

CASES = [
    # (kind, j, alpha, c) — alpha and c are decimal literals, used exactly
    ("legendre", 0, "0.5", "1"),
    ("legendre", 1, "0.5", "1"),
    ("legendre", 1, "1", "1"),
    ("legendre", 2, "0.5", "0.25"),
    ("legendre", 5, "0.5", "0.5"),
    ("legendre", 10, "0.5", "0.7"),
    ("legendre", 10, "0.25", "1"),
    ("legendre", 25, "0.5", "1"),
    ("legendre", 25, "0.5", "0.5"),
    ("legendre", 5, "0.3", "0.9"),
    ("chebyshev-orthonormal", 2, "0.5", "0.5"),
    ("chebyshev-orthonormal", 1, "1", "1"),
    ("chebyshev-orthonormal", 10, "0.5", "1"),
    ("chebyshev-orthonormal", 24, "0.5", "0.25"),
    ("chebyshev", 2, "0.5", "0.5"),
    ("chebyshev", 12, "0.75", "1"),
]

DIGITS = 32
CROSS_CHECK_MAX_DEGREE = 12  # quadrature route stays cheap below this


def main() -> None:
    out_path = Path(__file__).resolve().parents[1] / "src/fracpoly/data/golden_integrals.csv"
    lines = ["kind,j,alpha,c,value,digits"]
    for kind, j, alpha, c, in CASES:
        value = oracle.reference_integral(kind, j, alpha, c)
        if j <= CROSS_CHECK_MAX_DEGREE:
            other = oracle.reference_integral_quadrature(kind, j, alpha, c)
            if abs(value - other) > Decimal("1e-30") * (1 + abs(value)):
                raise SystemExit(
                    f"cross-check failed for {kind} j={j} alpha={alpha} c={c}: "
                    f"{value} vs {other}"
                )
        quantized = "0" if value == 0 else f"{value:.{DIGITS - 1}E}"
        lines.append(f"{kind},{j},{alpha},{c},{quantized},{DIGITS}")
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(CASES)} rows to {out_path}")


if __name__ == "__main__":
    main()
