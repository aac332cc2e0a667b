"""Backend selection for the wall-scan kernel.

The compiled extension is preferred when importable and when the case
values provably fit in signed 64-bit arithmetic; otherwise the pure
kernel (numpy-vectorized where exact, big-int elsewhere) is used.  Set
K3INVOL_BACKEND=python or =compiled to force a backend; forcing
"compiled" when the extension is missing raises at import time.
"""

from __future__ import annotations

import os

from . import _scan_py

try:
    from . import _speedups as _compiled
except ImportError:
    _compiled = None

_FORCED = os.environ.get("K3INVOL_BACKEND", "").strip().lower()
if _FORCED in ("python", "py"):
    _compiled = None
elif _FORCED in ("compiled", "c") and _compiled is None:
    raise ImportError(
        "K3INVOL_BACKEND=compiled but the k3invol._speedups extension is not built"
    )
elif _FORCED not in ("", "python", "py", "compiled", "c"):
    raise ValueError(f"unrecognized K3INVOL_BACKEND={_FORCED!r}")

BACKEND = "compiled" if _compiled is not None else "python"

_I64_BUDGET = 2**62


def fits_compiled(n: int) -> bool:
    """Whether every intermediate of the scan at this n fits in int64.

    The largest value is A + D*ymax^2 < A*(16t(n-1) + 1) with
    A <= (n-1)^2 + 4(n-1); true for all n up to ~16000.
    """
    a_max = (n - 1) * (n - 1) + 4 * (n - 1)
    return a_max * (16 * (4 * n - 3) * (n - 1) + 1) < _I64_BUDGET


def case_interior_solutions(
    n: int, rho: int, alpha: int, full_congruence: bool
) -> list[tuple[int, int]]:
    if _compiled is not None and fits_compiled(n):
        return _compiled.case_interior_solutions(n, rho, alpha, full_congruence)
    return _scan_py.case_interior_solutions(n, rho, alpha, full_congruence)


def interior_solutions(
    n: int, full_congruence: bool, appendix_cases: bool
) -> list[tuple[int, int, int, int]]:
    if _compiled is not None and fits_compiled(n):
        return _compiled.interior_solutions(n, full_congruence, appendix_cases)
    return _scan_py.interior_solutions(n, full_congruence, appendix_cases)


case_pairs = _scan_py.case_pairs
