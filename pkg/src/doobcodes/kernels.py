"""Backend selection for the search kernels.

The hot loops (full subset scans, fiber-catalog backtracking) exist twice:
as a Cython extension (doobcodes._kernels) and in pure Python
(doobcodes._kernels_py).  The compiled backend is preferred when importable;
set DOOB_KERNELS=python or DOOB_KERNELS=cython to force one side.
Both backends produce bit-identical results; benchmarks/bench_kernels.py
compares their speed.
"""

from __future__ import annotations

import os

_requested = os.environ.get("DOOB_KERNELS", "auto").strip().lower()

if _requested in ("auto", "", "cython"):
    try:
        from doobcodes import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        if _requested == "cython":
            raise
        from doobcodes import _kernels_py as _impl

        BACKEND = "python"
elif _requested in ("python", "pure"):
    from doobcodes import _kernels_py as _impl

    BACKEND = "python"
else:
    raise ValueError(f"DOOB_KERNELS must be auto, cython, or python, got {_requested!r}")

independent_sets = _impl.independent_sets
max_boundary_sets = _impl.max_boundary_sets
equitable_splits = _impl.equitable_splits
assign_rows_disjoint = _impl.assign_rows_disjoint
assign_rows_lines = _impl.assign_rows_lines
scan_two_mds_structure = _impl.scan_two_mds_structure


def available_backends() -> dict[str, object]:
    """Every importable backend module, keyed by name (for tests/benchmarks)."""
    from doobcodes import _kernels_py

    out: dict[str, object] = {"python": _kernels_py}
    try:
        from doobcodes import _kernels  # type: ignore[attr-defined]

        out["cython"] = _kernels
    except ImportError:
        pass
    return out
