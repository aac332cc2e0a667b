"""Algebraic Mukai lattice of a Picard-rank-one K3 of degree 2t, t = 4n-3.

A Mukai vector (r, c, s) has first Chern class c*H with H^2 = 2t, so the
pairing of two vectors is

    ((r, c, s), (r', c', s')) = 2t*c*c' - r*s' - r'*s.

The module provides the distinguished vectors v, a, w, u and v^(i)
spanning the wall lattice of the Hilbert scheme, the stratification
bookkeeping of the indeterminacy locus, and two exhaustive integer
searches certifying that v^(i) admits no decomposition into positive
classes and no unexpected spherical class pairs against it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class MukaiVector:
    r: int
    c: int
    s: int

    def __add__(self, other: "MukaiVector") -> "MukaiVector":
        return MukaiVector(self.r + other.r, self.c + other.c, self.s + other.s)

    def __sub__(self, other: "MukaiVector") -> "MukaiVector":
        return MukaiVector(self.r - other.r, self.c - other.c, self.s - other.s)

    def __neg__(self) -> "MukaiVector":
        return MukaiVector(-self.r, -self.c, -self.s)

    def __rmul__(self, k: int) -> "MukaiVector":
        return MukaiVector(k * self.r, k * self.c, k * self.s)

    def is_zero(self) -> bool:
        return self.r == 0 and self.c == 0 and self.s == 0


@dataclass(frozen=True)
class MukaiContext:
    """Fixes n >= 2; the polarization degree is 2t with t = 4n-3."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")

    @property
    def t(self) -> int:
        return 4 * self.n - 3


@dataclass(frozen=True)
class StrataRow:
    """One stratum of the indeterminacy locus, indexed by the filtration depth k."""

    k: int
    vector: MukaiVector
    moduli_dim: int
    codim_in_N: int
    fiber_dim: int
    dim_Jk: int
    hom_rank: int  # chi-forced rank hom = 2k+3 on the open stratum


def mukai_pairing(ctx: MukaiContext, v1: MukaiVector, v2: MukaiVector) -> int:
    return 2 * ctx.t * v1.c * v2.c - v1.r * v2.s - v2.r * v1.s


def standard_vectors(
    ctx: MukaiContext,
) -> tuple[MukaiVector, MukaiVector, MukaiVector, MukaiVector]:
    """The vectors v, a, w = v - a, u with the standard Gram identities.

    v = (1, 0, -(n-1)) is the ideal-sheaf vector (v^2 = 2n-2),
    a = (-2, 1, -(2n-1)) is the spherical wall vector (a^2 = -2, (v,a) = 1),
    w = (3, -1, n) satisfies w^2 = 2n-6 and (a, w) = 3,
    u = (2, -1, 2(n-1)) is orthogonal to w with u^2 = 2.
    """
    n = ctx.n
    v = MukaiVector(1, 0, -(n - 1))
    a = MukaiVector(-2, 1, -(2 * n - 1))
    w = MukaiVector(3, -1, n)
    u = MukaiVector(2, -1, 2 * (n - 1))
    return v, a, w, u


def v_i(ctx: MukaiContext, i: int) -> MukaiVector:
    """v^(i) = v - (i+1)a = (2i+3, -(i+1), (2i+1)n - i); v^(-1) = v, v^(0) = w."""
    if i < -1:
        raise ValueError("i must be at least -1")
    v, a, _, _ = standard_vectors(ctx)
    return v - (i + 1) * a


def r_max(ctx: MukaiContext) -> int:
    """Largest i >= 0 with n >= (i+1)(i+2)."""
    if ctx.n < 2:
        raise ValueError("n must be at least 2")
    i = 0
    while (i + 2) * (i + 3) <= ctx.n:
        i += 1
    return i


def spherical_search(ctx: MukaiContext, i: int, bound: int) -> list[tuple[int, int]]:
    """All (x, y), |x|, |y| <= bound, with s = x*v + y*a spherical and
    0 < (s, v^(i)) <= (v^(i))^2 / 2.

    Sphericity s^2 = -2 is the hyperbola (n-1)x^2 + xy - y^2 = -1; for
    each x the y's are solved from the integer discriminant
    z^2 = (4n-3)x^2 + 4, which enumerates exactly the same pairs as a
    double loop over (x, y) but in O(bound) steps.
    """
    if i < -1:
        raise ValueError("i must be at least -1")
    vi = v_i(ctx, i)
    vi_sq = mukai_pairing(ctx, vi, vi)
    if vi_sq <= 0:
        raise ValueError("spherical window is empty or vacuous unless (v^(i))^2 > 0")
    n, t = ctx.n, ctx.t
    out = set()
    for x in range(-bound, bound + 1):
        disc = t * x * x + 4
        z = math.isqrt(disc)
        if z * z != disc:
            continue
        for zz in (z, -z) if z else (0,):
            # y^2 - xy - ((n-1)x^2 + 1) = 0  =>  2y = x +- z
            if (x + zz) % 2:
                continue
            y = (x + zz) // 2
            if abs(y) > bound:
                continue
            pair = (2 * n - i - 3) * x + (2 * i + 3) * y
            if 0 < 2 * pair <= vi_sq:
                out.add((x, y))
    return sorted(out)


def positive_decomposition_search(
    ctx: MukaiContext, i: int, bound: int
) -> list[tuple[MukaiVector, MukaiVector]]:
    """All splittings v^(i) = w1 + w2 with w1 = x*v + y*a, |x|, |y| <= bound,
    both parts nonzero, of nonnegative square and positive pairing with v^(i).

    Expected empty whenever n >= (i+1)(i+2); a nonempty result would mean
    the flopping wall degenerates, so callers treat it as a finding.
    Evaluated on an int64 grid (values stay far below 2^63 for any sane
    bound since they are quadratic in bound with coefficients ~n).
    """
    if not 0 <= i:
        raise ValueError("i must be nonnegative")
    n = ctx.n
    if n < (i + 1) * (i + 2):
        raise ValueError("requires n >= (i+1)(i+2)")
    vi = v_i(ctx, i)
    vi_sq = mukai_pairing(ctx, vi, vi)

    rng = np.arange(-bound, bound + 1, dtype=np.int64)
    x, y = np.meshgrid(rng, rng, indexing="ij")
    # w1 = x*v + y*a in (x, y) coordinates; w2 = v^(i) - w1 = (1-x)*v - (i+1+y)*a.
    x2, y2 = 1 - x, -(i + 1) - y
    sq1 = _coord_square(n, x, y)
    sq2 = _coord_square(n, x2, y2)
    p1 = (2 * n - i - 3) * x + (2 * i + 3) * y
    p2 = (2 * n - i - 3) * x2 + (2 * i + 3) * y2
    nonzero1 = (x != 0) | (y != 0)
    nonzero2 = (x2 != 0) | (y2 != 0)
    mask = (sq1 >= 0) & (sq2 >= 0) & (p1 > 0) & (p2 > 0) & nonzero1 & nonzero2

    v, a, _, _ = standard_vectors(ctx)
    found = []
    for xi, yi in zip(x[mask].tolist(), y[mask].tolist()):
        w1 = xi * v + yi * a
        found.append((w1, vi - w1))
    return found


def _coord_square(n, x, y):
    # (x*v + y*a)^2 = (2n-2)x^2 + 2xy - 2y^2
    return (2 * n - 2) * x * x + 2 * x * y - 2 * y * y


def strata_table(ctx: MukaiContext) -> list[StrataRow]:
    """Rows k = 0 .. r_max of the indeterminacy-locus stratification.

    Stratum k sits at codimension 2(k+1)(k+2) in the contracted model,
    fibers over a moduli space of dimension (v^(k))^2 + 2 = 2n - 2(k+1)(k+2)
    with unirational fibers of dimension (k+1)(k+2), and has total
    dimension 2n - (k+1)(k+2).
    """
    rows = []
    for k in range(r_max(ctx) + 1):
        vk = v_i(ctx, k)
        moduli_dim = mukai_pairing(ctx, vk, vk) + 2
        fiber = (k + 1) * (k + 2)
        rows.append(
            StrataRow(
                k=k,
                vector=vk,
                moduli_dim=moduli_dim,
                codim_in_N=2 * fiber,
                fiber_dim=fiber,
                dim_Jk=2 * ctx.n - fiber,
                hom_rank=2 * k + 3,
            )
        )
    return rows
