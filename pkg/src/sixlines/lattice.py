"""Exact model of the rank-16 lattice of the six-line double plane.

X is the minimal resolution of the double cover of P^2 ramified along six
lines L_1..L_6 in general position ("general" meaning the Picard number of X
is 16).  The Neron-Severi classes we track are spanned over Q by

    l1        half the pull-back of the branch line L_1, and
    e_ij      the exceptional class over the node of the cover lying
              above P_ij = L_i /\ L_j   (1 <= i < j <= 6),

sixteen classes in total.  The intersection numbers are

    l_i . l_j  = -2 d_ij,    e_ij . e_km = -2 d_ik d_jm,
    l_i . e_km = d_ik + d_im.

Everything here is exact rational arithmetic; no floating point appears
anywhere in the package.  Coordinates of derived classes may be
half-integers (the l_i for i >= 2 are only in the half-integer span of the
basis); integrality is a property of intersection numbers, not of
coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

LINE_INDICES = (1, 2, 3, 4, 5, 6)

#: The fifteen index pairs (i, j), i < j, in lexicographic order.
PAIRS: tuple[tuple[int, int], ...] = tuple(combinations(LINE_INDICES, 2))

#: Basis order: l1 first, then the e_ij in lexicographic pair order.
BASIS_NAMES: tuple[str, ...] = ("l1",) + tuple(f"e{i}{j}" for i, j in PAIRS)

DIM = 16

_PAIR_POS = {pair: 1 + k for k, pair in enumerate(PAIRS)}


def _build_gram() -> tuple[tuple[int, ...], ...]:
    g = [[0] * DIM for _ in range(DIM)]
    g[0][0] = -2
    for (i, j), pos in _PAIR_POS.items():
        g[pos][pos] = -2
        # l_1 . e_ij = d_1i + d_1j; only pairs containing 1 meet l1.
        v = (1 if i == 1 else 0) + (1 if j == 1 else 0)
        g[0][pos] = g[pos][0] = v
    return tuple(tuple(row) for row in g)


#: Gram matrix of the basis (l1; e_ij), integer entries.
GRAM: tuple[tuple[int, ...], ...] = _build_gram()


@dataclass(frozen=True)
class DivisorClass:
    """A class in NS(X) tensor Q, as 16 exact rational coordinates."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        assert len(self.coords) == DIM

    @staticmethod
    def zero() -> "DivisorClass":
        return DivisorClass(tuple(Fraction(0) for _ in range(DIM)))

    @staticmethod
    def basis(name: str) -> "DivisorClass":
        k = BASIS_NAMES.index(name)
        return DivisorClass(
            tuple(Fraction(1 if m == k else 0) for m in range(DIM))
        )

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coords))

    def scale(self, k) -> "DivisorClass":
        k = Fraction(k)
        return DivisorClass(tuple(k * a for a in self.coords))

    __rmul__ = scale
    __mul__ = scale

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def coord(self, name: str) -> Fraction:
        return self.coords[BASIS_NAMES.index(name)]


def pairing(a: DivisorClass, b: DivisorClass) -> Fraction:
    """Intersection number a.b = a^T Gram b (bilinear, symmetric)."""
    total = Fraction(0)
    for i, ai in enumerate(a.coords):
        if ai == 0:
            continue
        row = GRAM[i]
        total += ai * sum(Fraction(row[j]) * bj for j, bj in enumerate(b.coords) if bj)
    return total


def square(a: DivisorClass) -> Fraction:
    return pairing(a, a)


def arithmetic_genus(d: DivisorClass) -> Fraction:
    """Genus of a smooth curve in the class d: g = 1 + d^2/2 (adjunction,
    trivial canonical bundle)."""
    return 1 + square(d) / 2


def exceptional(i: int, j: int) -> DivisorClass:
    """The class e_ij over the node above P_ij (either index order)."""
    if i > j:
        i, j = j, i
    if (i, j) not in _PAIR_POS:
        raise ValueError(f"no exceptional class e{i}{j}")
    return DivisorClass.basis(f"e{i}{j}")


def special_line(i: int) -> DivisorClass:
    """The class l_i of the halved pull-back of the branch line L_i.

    l_1 is a basis vector.  For i >= 2 the identity
    2 l_1 + sum_j e_1j = 2 l_i + sum_j e_ij (both sides are the pull-back of
    a general line) gives

        l_i = l_1 + (sum_{j not in {1,i}} e_1j - sum_{j not in {1,i}} e_ij)/2,

    a half-integer vector.
    """
    if i not in LINE_INDICES:
        raise ValueError(f"line index out of range: {i}")
    if i == 1:
        return DivisorClass.basis("l1")
    acc = DivisorClass.basis("l1")
    for j in LINE_INDICES:
        if j in (1, i):
            continue
        acc = acc + exceptional(1, j).scale(Fraction(1, 2))
        acc = acc - exceptional(i, j).scale(Fraction(1, 2))
    return acc


def hyperplane() -> DivisorClass:
    """The pull-back H of a general line: H = 2 l_1 + sum_{j>=2} e_1j.

    The same class equals 2 l_i + sum_j e_ij for every i; H^2 = 2.
    """
    acc = DivisorClass.basis("l1").scale(2)
    for j in LINE_INDICES[1:]:
        acc = acc + exceptional(1, j)
    return acc


def branch_class() -> DivisorClass:
    """B = l_1 + ... + l_6, the fixed locus of the covering involution."""
    acc = DivisorClass.zero()
    for i in LINE_INDICES:
        acc = acc + special_line(i)
    return acc


def signature(mat=GRAM) -> tuple[int, int, int]:
    """Signature (n_plus, n_minus, n_zero) of a symmetric rational matrix.

    Congruent diagonalization over Q with the usual fix when a pivot
    vanishes; the counts are exact by Sylvester's law of inertia.
    """
    a = [[Fraction(x) for x in row] for row in mat]
    n = len(a)
    for k in range(n):
        if a[k][k] == 0:
            swap = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if swap is not None and a[k][swap] == a[swap][k]:
                pass
            if swap is not None:
                for r in range(n):
                    a[r][k], a[r][swap] = a[r][swap], a[r][k]
                a[k], a[swap] = a[swap], a[k]
            else:
                j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if j is None:
                    continue  # row/column already zero: null direction
                for r in range(n):
                    a[r][k] += a[r][j]
                for c in range(n):
                    a[k][c] += a[j][c]
        if a[k][k] == 0:
            continue
        piv = a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / piv
            if f == 0:
                continue
            for c in range(n):
                a[i][c] -= f * a[k][c]
            for r in range(n):
                a[r][i] -= f * a[r][k]
    pos = sum(1 for k in range(n) if a[k][k] > 0)
    neg = sum(1 for k in range(n) if a[k][k] < 0)
    return pos, neg, n - pos - neg


def determinant(mat=GRAM) -> Fraction:
    """Exact determinant by fraction-based Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in mat]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f:
                for c in range(k, n):
                    a[i][c] -= f * a[k][c]
    return det
