"""Exact solvers for ordinary, negative and generalized Pell equations.

Everything here works with arbitrary-precision integers; no floats are
involved in any decision.  The generalized solver enumerates a bounded
window of solutions of

    X^2 - D*Y^2 = N,      X == +-residue  (mod modulus),

which is the shape of equation that cuts walls in the movable cone of
the Hilbert scheme (see :mod:`k3invol.hilbcone`).  A deliberately dumb
double-loop oracle mirroring a published search program is kept around
for cross-checking.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional


class PellSolution(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class GeneralizedPellProblem:
    """Bounded, congruence-restricted instance of X^2 - D*Y^2 = N.

    ``modulus`` is 2(n-1) and ``residue`` is alpha in the wall
    application, but any positive modulus is accepted.
    """

    D: int
    N: int
    modulus: int
    residue: int
    x_bound: int

    def __post_init__(self):
        if self.D <= 0:
            raise ValueError("D must be positive")
        if isqrt(self.D)[1]:
            raise ValueError("D must not be a perfect square")
        if self.modulus <= 0:
            raise ValueError("modulus must be positive")
        if not 0 <= self.residue < self.modulus:
            raise ValueError("residue must lie in [0, modulus)")
        if self.x_bound <= 0:
            raise ValueError("x_bound must be positive")


def isqrt(m: int) -> tuple[int, bool]:
    """Integer square root with exactness flag: (floor(sqrt(m)), m is a square)."""
    if m < 0:
        raise ValueError("isqrt of a negative integer")
    r = math.isqrt(m)
    return r, r * r == m


def _sqrt_cf_convergents(d: int):
    """Yield the continued-fraction convergents (p, q, a) of sqrt(d).

    Standard P-Q recurrence; d must be a positive nonsquare.  The third
    item is the partial quotient, handy for period detection (the period
    of sqrt(d) ends exactly when a == 2*a0).
    """
    a0 = math.isqrt(d)
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    pp, qq, a = 0, 1, a0
    yield p, q, a
    while True:
        pp = a * qq - pp
        qq = (d - pp * pp) // qq
        a = (a0 + pp) // qq
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        yield p, q, a


def fundamental_solution(D: int) -> PellSolution:
    """Minimal (x, y) with x, y > 0 and x^2 - D*y^2 = 1.

    Computed from the continued-fraction expansion of sqrt(D); the
    fundamental solution is the first convergent satisfying the equation,
    reached at the end of the first period (or the second when the period
    is odd).
    """
    if D <= 0:
        raise ValueError("D must be positive")
    if isqrt(D)[1]:
        raise ValueError("D must not be a perfect square")
    for p, q, _ in _sqrt_cf_convergents(D):
        if q > 0 and p * p - D * q * q == 1:
            return PellSolution(p, q)
    raise AssertionError("unreachable: Pell equation always has a solution")


def negative_pell_minimal(D: int, trial_limit: int = 10**4) -> Optional[PellSolution]:
    """Minimal (x, y) > 0 with x^2 - D*y^2 = -1, or None if unsolvable.

    Fast rejection: -1 is not a square modulo any prime p == 3 (mod 4),
    so such a prime dividing D kills solvability; we look for one by
    trial division up to ``trial_limit``.  The complete decision is the
    parity of the continued-fraction period of sqrt(D): the minimal
    solution, when it exists, is the convergent closing the first
    (odd-length) period.
    """
    if D <= 0:
        raise ValueError("D must be positive")
    if isqrt(D)[1]:
        raise ValueError("D must not be a perfect square")
    if D % 4 == 0:
        return None  # x^2 == -1 (mod 4) is impossible
    if _has_small_prime_factor_3_mod_4(D, trial_limit):
        return None
    a0 = math.isqrt(D)
    for p, q, a in _sqrt_cf_convergents(D):
        if p * p - D * q * q == -1:
            return PellSolution(p, q)
        if a == 2 * a0:
            # First period closed without hitting -1: even period, no solution.
            return None
    raise AssertionError("unreachable")


def _has_small_prime_factor_3_mod_4(m: int, limit: int) -> bool:
    """Trial division only; False means "none found", not "none exists"."""
    while m % 2 == 0:
        m //= 2
    if m % 4 == 3:
        # An odd integer == 3 (mod 4) always has a prime factor == 3 (mod 4).
        return True
    p = 3
    while p <= limit and p * p <= m:
        if m % p == 0:
            if p % 4 == 3:
                return True
            while m % p == 0:
                m //= p
        p += 2
    return False


def minimal_solution_mixed(
    p: int, q: int, x_bound: int = 10**5
) -> Optional[PellSolution]:
    """Minimal (x, y) > 0 with p*x^2 - q*y^2 = -1, searching x <= x_bound.

    Plain bounded brute force; this shape is only ever needed for small
    witnesses (the wall application has (p, q) = (n-1, 4n-3) with minimal
    solution (2, 1)).
    """
    if p <= 0 or q <= 0:
        raise ValueError("p and q must be positive")
    for x in range(1, x_bound + 1):
        m = p * x * x + 1
        if m % q == 0:
            y, exact = isqrt(m // q)
            if exact and y > 0:
                return PellSolution(x, y)
    return None


def solutions_bounded(prob: GeneralizedPellProblem) -> list[PellSolution]:
    """All (X, Y), 0 < X <= x_bound, Y >= 1, with X^2 - D*Y^2 = N and
    X == +-residue (mod modulus); sorted by X, no duplicates.

    X is enumerated over the two admissible arithmetic progressions only
    (a modulus-sized speedup over a full scan); each candidate is kept
    when (X^2 - N)/D is a perfect square.
    """
    D, N, m = prob.D, prob.N, prob.modulus
    out = []
    for x in _admissible_x(prob.residue, m, prob.x_bound):
        v = x * x - N
        if v <= 0:
            continue
        yy, rem = divmod(v, D)
        if rem:
            continue
        y, exact = isqrt(yy)
        if exact and y >= 1:
            out.append(PellSolution(x, y))
    return out


def _admissible_x(residue: int, modulus: int, x_bound: int):
    """Ascending merge of {x > 0 : x == residue or x == -residue (mod modulus)}."""

    def stream(r):
        start = r if r > 0 else modulus
        return range(start, x_bound + 1, modulus)

    r1 = residue % modulus
    r2 = (-residue) % modulus
    if r1 == r2:
        yield from stream(r1)
        return
    prev = None
    for x in heapq.merge(stream(r1), stream(r2)):
        if x != prev:
            yield x
        prev = x


def solutions_bounded_oracle(
    prob: GeneralizedPellProblem, appendix_semantics: bool
) -> list[PellSolution]:
    """Double-loop brute force over X and Y, for cross-checking.

    With ``appendix_semantics`` the congruence test mirrors a historical
    search program literally: X is accepted only when X == residue,
    X == -residue or X == modulus - residue *as plain integers*, so
    solutions in the same residue class but with X >= modulus are missed.
    With ``appendix_semantics=False`` the full congruence
    X == +-residue (mod modulus) is tested and the output coincides with
    :func:`solutions_bounded`.
    """
    D, N, m, r = prob.D, prob.N, prob.modulus, prob.residue
    out = []
    for x in range(1, prob.x_bound + 1):
        if appendix_semantics:
            if not (x == r or x == -r or x == m - r):
                continue
        else:
            xm = x % m
            if xm != r % m and xm != (-r) % m:
                continue
        y = 1
        while True:
            v = x * x - D * y * y
            if v < N:
                break
            if v == N:
                out.append(PellSolution(x, y))
                break
            y += 1
    return out
