"""Kernel selection: compiled extension if built, numpy fallback otherwise.

Set ``FRACPOLY_PURE_PYTHON=1`` to force the fallback (used by the kernel
benchmark and the cross-implementation tests).
"""

from __future__ import annotations

import os

from . import _core_py

if os.environ.get("FRACPOLY_PURE_PYTHON"):
    _impl = _core_py
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _core_py

psi_matrix = _impl.psi_matrix
poly_table = _impl.poly_table
horner_values = _impl.horner_values
power_pair = _impl.power_pair


def backend_name() -> str:
    return _impl.BACKEND
