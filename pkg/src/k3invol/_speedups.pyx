# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled wall-scan kernel.

Same contract and ordering as k3invol._scan_py; see that module for the
derivation of the bounds.  All arithmetic is signed 64-bit; the
dispatcher guarantees A*(16t(n-1)+1) < 2^62 before calling in.
"""

from libc.math cimport sqrt


cdef inline long long _isqrt64(long long s) noexcept nogil:
    cdef long long r
    if s <= 0:
        return 0
    r = <long long> sqrt(<double> s)
    while r > 0 and r * r > s:
        r -= 1
    while (r + 1) * (r + 1) <= s:
        r += 1
    return r


cdef void _scan_case(list out, long long n, long long rho, long long alpha,
                     bint full_congruence, bint tag_case):
    cdef long long t = 4 * n - 3
    cdef long long m = 2 * (n - 1)
    cdef long long d = 4 * t * (n - 1)
    cdef long long a_val = alpha * alpha - 4 * rho * (n - 1)
    cdef long long ymax, y, s, x, r1, r2, xm, v, yy, prev
    if a_val <= 0:
        return
    if full_congruence:
        r1 = alpha % m
        r2 = (m - r1) % m
        ymax = _isqrt64(4 * a_val - 1)
        for y in range(1, ymax + 1):
            s = a_val + d * y * y
            x = _isqrt64(s)
            if x * x == s:
                xm = x % m
                if xm == r1 or xm == r2:
                    if tag_case:
                        out.append((rho, alpha, x, y))
                    else:
                        out.append((x, y))
    else:
        # Literal congruence: the only candidates are alpha and m - alpha,
        # tried in increasing order (which is also increasing Y).
        r1 = alpha
        r2 = m - alpha
        if r2 < r1:
            r1, r2 = r2, r1
        prev = -1
        for x in (r1, r2):
            if x < 1 or x == prev:
                continue
            prev = x
            v = x * x - a_val
            if v <= 0:
                continue
            if v % d:
                continue
            yy = v // d
            y = _isqrt64(yy)
            if y * y == yy and y >= 1 and y * y < 4 * a_val:
                if tag_case:
                    out.append((rho, alpha, x, y))
                else:
                    out.append((x, y))


def case_interior_solutions(long long n, long long rho, long long alpha,
                            bint full_congruence):
    out = []
    _scan_case(out, n, rho, alpha, full_congruence, False)
    return out


def interior_solutions(long long n, bint full_congruence, bint appendix_cases):
    cdef long long alpha, rho, rho_top
    out = []
    for alpha in range(1, n):
        _scan_case(out, n, -1, alpha, full_congruence, True)
    for alpha in range(3, n):
        _scan_case(out, n, 0, alpha, full_congruence, True)
    rho_top = (n - 1) // 4
    if appendix_cases:
        rho_top -= 1
    for rho in range(1, rho_top + 1):
        for alpha in range(4 * rho + 1, n):
            _scan_case(out, n, rho, alpha, full_congruence, True)
    return out
