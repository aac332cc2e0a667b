"""Even integer lattices, Eichler transvections, and the period-lattice check.

Matrices are plain tuples of tuples of Python ints (exactness over speed;
the largest lattice used has rank 23).  A map is stored column-wise: the
j-th column is the image of the j-th basis vector, so maps act on
coordinate vectors by ordinary matrix-vector multiplication and compose
by matrix multiplication.  Dual-lattice arithmetic uses exact fractions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

# Negated Cartan matrix of E8 (Bourbaki node ordering: chain
# 1-3-4-5-6-7-8 with node 2 attached to node 4); unimodular, even,
# negative definite.
_E8_EDGES = ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4))


def _e8_minus_gram() -> tuple[tuple[int, ...], ...]:
    g = [[0] * 8 for _ in range(8)]
    for i in range(8):
        g[i][i] = -2
    for i, j in _E8_EDGES:
        g[i - 1][j - 1] = 1
        g[j - 1][i - 1] = 1
    return tuple(tuple(row) for row in g)


E8_MINUS = "E8(-1)"
U = "U"


@dataclass(frozen=True)
class IntegerLattice:
    """Even nondegenerate lattice given by its Gram matrix."""

    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        g = self.gram
        r = len(g)
        if r == 0 or any(len(row) != r for row in g):
            raise ValueError("gram must be square and nonempty")
        for i in range(r):
            if g[i][i] % 2:
                raise ValueError("diagonal entries must be even (even lattice)")
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise ValueError("gram must be symmetric")
        if _int_det(g) == 0:
            raise ValueError("gram must be nondegenerate")

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def det(self) -> int:
        return _int_det(self.gram)

    def element(self, coords: Sequence[int]) -> "LatticeElement":
        return LatticeElement(self, tuple(int(c) for c in coords))

    def basis_element(self, j: int) -> "LatticeElement":
        coords = [0] * self.rank
        coords[j] = 1
        return self.element(coords)

    def gram_inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        return _fraction_inverse(self.gram)


@dataclass(frozen=True)
class LatticeElement:
    lattice: IntegerLattice
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.lattice.rank:
            raise ValueError("coordinate length does not match the rank")

    def pair(self, other: "LatticeElement") -> int:
        g = self.lattice.gram
        return sum(
            ci * sum(g[i][j] * cj for j, cj in enumerate(other.coords))
            for i, ci in enumerate(self.coords)
        )

    def square(self) -> int:
        return self.pair(self)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __add__(self, other: "LatticeElement") -> "LatticeElement":
        return LatticeElement(
            self.lattice, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other: "LatticeElement") -> "LatticeElement":
        return LatticeElement(
            self.lattice, tuple(a - b for a, b in zip(self.coords, other.coords))
        )

    def __neg__(self) -> "LatticeElement":
        return LatticeElement(self.lattice, tuple(-a for a in self.coords))

    def __rmul__(self, k: int) -> "LatticeElement":
        return LatticeElement(self.lattice, tuple(k * a for a in self.coords))


@dataclass(frozen=True)
class LatticeMap:
    """Integer endomorphism; column j is the image of basis vector j."""

    lattice: IntegerLattice
    matrix: tuple[tuple[int, ...], ...]

    def apply(self, e: LatticeElement) -> LatticeElement:
        m = self.matrix
        coords = tuple(
            sum(m[i][j] * c for j, c in enumerate(e.coords))
            for i in range(self.lattice.rank)
        )
        return LatticeElement(self.lattice, coords)

    def compose(self, other: "LatticeMap") -> "LatticeMap":
        """self after other (rightmost acts first)."""
        return LatticeMap(self.lattice, _mat_mul(self.matrix, other.matrix))

    def is_isometry(self) -> bool:
        g = self.lattice.gram
        m = self.matrix
        return _mat_mul(_transpose(m), _mat_mul(g, m)) == tuple(
            tuple(row) for row in g
        )


def build_lattice(summands: Iterable) -> IntegerLattice:
    """Block-diagonal lattice from summands "U", "E8(-1)" or an even integer d
    (meaning the rank-one lattice <d>)."""
    blocks = []
    for s in summands:
        if s == U:
            blocks.append(((0, 1), (1, 0)))
        elif s == E8_MINUS:
            blocks.append(_e8_minus_gram())
        elif isinstance(s, int):
            if s % 2:
                raise ValueError("rank-one summands must have even degree")
            blocks.append(((s,),))
        else:
            raise ValueError(f"unknown summand {s!r}")
    if not blocks:
        raise ValueError("at least one summand is required")
    rank = sum(len(b) for b in blocks)
    gram = [[0] * rank for _ in range(rank)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, entry in enumerate(row):
                gram[off + i][off + j] = entry
        off += len(b)
    return IntegerLattice(tuple(tuple(row) for row in gram))


def transvection(x: LatticeElement, y: LatticeElement) -> LatticeMap:
    """Eichler transvection t(x, y): z -> z - (y,z)x + (x,z)y - (y,y)/2 (x,z)x.

    Defined for isotropic x and y orthogonal to x; under these hypotheses
    the map is always Gram-preserving (checked on construction)."""
    lat = x.lattice
    if lat is not y.lattice and lat != y.lattice:
        raise ValueError("x and y must live in the same lattice")
    if x.square() != 0:
        raise ValueError("t(x, y) requires (x, x) = 0")
    if x.pair(y) != 0:
        raise ValueError("t(x, y) requires (x, y) = 0")
    g = lat.gram
    gx = [sum(g[i][j] * c for j, c in enumerate(x.coords)) for i in range(lat.rank)]
    gy = [sum(g[i][j] * c for j, c in enumerate(y.coords)) for i in range(lat.rank)]
    h = y.square() // 2  # integral: the lattice is even
    cols = []
    for j in range(lat.rank):
        col = [0] * lat.rank
        col[j] = 1
        for i in range(lat.rank):
            col[i] += -gy[j] * x.coords[i] + gx[j] * y.coords[i] - h * gx[j] * x.coords[i]
        cols.append(col)
    m = tuple(tuple(cols[j][i] for j in range(lat.rank)) for i in range(lat.rank))
    out = LatticeMap(lat, m)
    if not out.is_isometry():
        raise AssertionError("transvection failed the Gram check")
    return out


# ---------------------------------------------------------------------------
# The period lattice Xi(n) = U^3 + E8(-1)^2 + <-2(n-1)> and its basis
# (u, v, u1, v1, u2, v2, e8 block, e8 block, l).

_IDX_U, _IDX_V, _IDX_U1, _IDX_V1 = 0, 1, 2, 3
_IDX_ELL = 22


@lru_cache(maxsize=None)
def build_xi(n: int) -> IntegerLattice:
    if n < 2:
        raise ValueError("n must be at least 2")
    return build_lattice([U, U, U, E8_MINUS, E8_MINUS, -2 * (n - 1)])


def xi_basis(n: int) -> dict[str, LatticeElement]:
    """Named generators of Xi(n): the three hyperbolic pairs and l."""
    lat = build_xi(n)
    names = {
        "u": _IDX_U,
        "v": _IDX_V,
        "u1": _IDX_U1,
        "v1": _IDX_V1,
        "u2": 4,
        "v2": 5,
        "l": _IDX_ELL,
    }
    return {k: lat.basis_element(i) for k, i in names.items()}


def build_alpha(n: int) -> LatticeMap:
    """The isometry of Xi(n) moving the degree-2 marked class onto u + v.

    With w' = (u + tv - 2l) - (u + v) = (t-1)v - 2l, the map is the
    composition t(u1, -v) o t(v1, w') o t(u1, v) (rightmost first).  Its
    two defining images are verified on construction:

        alpha(u + t*v - 2*l)           = u + v
        alpha(2(n-1)(u + t*v) - t*l)   = 2(n-1)(u - v) + 4(n-1)*v1 - l

    The second input is the integral generator of the orthogonal
    complement of the marked class inside the rank-two algebraic part,
    transported through the same marking (H_n -> u + tv, delta -> l).
    """
    t = 4 * n - 3
    b = xi_basis(n)
    u, v, u1, v1, ell = b["u"], b["v"], b["u1"], b["v1"], b["l"]
    w_prime = (t - 1) * v - 2 * ell
    alpha = (
        transvection(u1, -v)
        .compose(transvection(v1, w_prime))
        .compose(transvection(u1, v))
    )
    got = alpha.apply(u + t * v - 2 * ell)
    if got != u + v:
        raise AssertionError("alpha does not send u + tv - 2l to u + v")
    kappa = 2 * (n - 1) * (u - v) + 4 * (n - 1) * v1 - ell
    got = alpha.apply(2 * (n - 1) * (u + t * v) - t * ell)
    if got != kappa:
        raise AssertionError("alpha does not send 2(n-1)(u+tv) - tl to kappa")
    return alpha


def divisibility(e: LatticeElement) -> int:
    """Positive generator of the ideal {(e, z) : z in the lattice}."""
    if e.is_zero():
        raise ValueError("divisibility of the zero vector is undefined")
    g = e.lattice.gram
    pairings = [
        sum(g[i][j] * c for j, c in enumerate(e.coords)) for i in range(e.lattice.rank)
    ]
    return math.gcd(*pairings)


def acts_trivially_on_discriminant(m: LatticeMap) -> bool:
    """Whether m fixes every dual vector modulo the integral lattice."""
    if not m.is_isometry():
        raise ValueError("the map must be an isometry")
    ginv = m.lattice.gram_inverse()
    r = m.lattice.rank
    mat = m.matrix
    for j in range(r):
        for i in range(r):
            moved = sum(Fraction(mat[i][k]) * ginv[k][j] for k in range(r))
            if (moved - ginv[i][j]).denominator != 1:
                return False
    return True


# ---------------------------------------------------------------------------
# small exact-matrix helpers


def _transpose(m):
    return tuple(tuple(m[j][i] for j in range(len(m))) for i in range(len(m[0])))


def _mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    bt = [[b[i][j] for i in range(k)] for j in range(m)]
    return tuple(
        tuple(sum(arow[x] * bcol[x] for x in range(k)) for bcol in bt) for arow in a
    )


def _int_det(g) -> int:
    """Bareiss fraction-free determinant of an integer matrix."""
    a = [list(row) for row in g]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _fraction_inverse(g) -> tuple[tuple[Fraction, ...], ...]:
    n = len(g)
    a = [[Fraction(g[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)
