"""Pure-Python wall-scan kernel (fallback for the compiled extension).

For a case (rho, alpha) of the wall criterion the solutions of

    X^2 - 4t(n-1) Y^2 = A,   A = alpha^2 - 4 rho (n-1),   t = 4n-3,

whose ray X*H_n - 2tY*delta lies strictly inside the movable cone are
exactly those with 1 <= Y and Y^2 < 4A (this uses (2t-1)^2 - 16t(n-1) = 1),
so the kernel iterates Y and keeps Y when A + D*Y^2 is a perfect square,
then filters X by the congruence of the requested mode.  The numpy path
is exact: values are kept below 2^53, where float64 sqrt of a perfect
square is itself exact, and candidates are confirmed in integers.

Ordering contract (shared with the compiled kernel): per case, solutions
are listed by increasing Y; the case list runs A (rho = -1), B (rho = 0),
then C (rho >= 1), alpha ascending inside each, rho ascending in C.
"""

from __future__ import annotations

import math

try:
    import numpy as np
except ImportError:  # pragma: no cover - numpy is a declared dependency
    np = None

_FLOAT_EXACT = 2**53
_NUMPY_MIN_BATCH = 32


def case_pairs(n: int, appendix_cases: bool):
    """Yield the (rho, alpha) case list for n.

    With ``appendix_cases`` the C-family replicates the historical
    program's ``range(1, int((n-1)/4))``, which always omits the top
    value floor((n-1)/4); the default includes it.
    """
    for alpha in range(1, n):
        yield -1, alpha
    for alpha in range(3, n):
        yield 0, alpha
    rho_top = (n - 1) // 4
    if appendix_cases:
        rho_top -= 1
    for rho in range(1, rho_top + 1):
        for alpha in range(4 * rho + 1, n):
            yield rho, alpha


def case_interior_solutions(
    n: int, rho: int, alpha: int, full_congruence: bool
) -> list[tuple[int, int]]:
    """All (X, Y) for one case with the ray strictly inside the movable cone."""
    a_val = alpha * alpha - 4 * rho * (n - 1)
    if a_val <= 0:
        return []
    if not full_congruence:
        return _case_appendix(n, rho, alpha, a_val)
    m = 2 * (n - 1)
    d = 4 * (4 * n - 3) * (n - 1)
    ymax = math.isqrt(4 * a_val - 1)
    if ymax < 1:
        return []
    s_max = a_val + d * ymax * ymax
    if np is not None and s_max < _FLOAT_EXACT and ymax >= _NUMPY_MIN_BATCH:
        return _case_numpy(a_val, d, m, alpha, ymax)
    return _case_loop(a_val, d, m, alpha, ymax)


def _case_loop(a_val, d, m, alpha, ymax):
    r1 = alpha % m
    r2 = (-alpha) % m
    out = []
    for y in range(1, ymax + 1):
        s = a_val + d * y * y
        x = math.isqrt(s)
        if x * x == s:
            xm = x % m
            if xm == r1 or xm == r2:
                out.append((x, y))
    return out


def _case_numpy(a_val, d, m, alpha, ymax):
    ys = np.arange(1, ymax + 1, dtype=np.int64)
    s = a_val + d * ys * ys
    x = np.rint(np.sqrt(s.astype(np.float64))).astype(np.int64)
    hit = x * x == s
    if not hit.any():
        return []
    xm = x % m
    r1 = alpha % m
    r2 = (-alpha) % m
    hit &= (xm == r1) | (xm == r2)
    idx = np.nonzero(hit)[0]
    return [(int(x[i]), int(i) + 1) for i in idx]


def _case_appendix(n, rho, alpha, a_val):
    """Literal congruence: X is compared to alpha and 2(n-1)-alpha as plain
    integers, so at most two candidates exist per case."""
    m = 2 * (n - 1)
    d = 4 * (4 * n - 3) * (n - 1)
    out = []
    for x in sorted({alpha, m - alpha}):
        if x < 1:
            continue
        v = x * x - a_val
        if v <= 0:
            continue
        yy, rem = divmod(v, d)
        if rem:
            continue
        y = math.isqrt(yy)
        if y * y == yy and y >= 1 and y * y < 4 * a_val:
            out.append((x, y))
    out.sort(key=lambda xy: xy[1])
    return out


def interior_solutions(
    n: int, full_congruence: bool, appendix_cases: bool
) -> list[tuple[int, int, int, int]]:
    """(rho, alpha, X, Y) for every case of the criterion, in case order."""
    out = []
    for rho, alpha in case_pairs(n, appendix_cases):
        for x, y in case_interior_solutions(n, rho, alpha, full_congruence):
            out.append((rho, alpha, x, y))
    return out
