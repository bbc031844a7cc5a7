"""Exact integer lattices: pairings, invariants, isometries and reflections.

Everything here is Python ``int`` / ``fractions.Fraction``; no floating point.
Matrices are tuples of row tuples and act on coordinate *columns*, so the
image of the i-th basis vector is the i-th column.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = tuple[tuple[int, ...], ...]


class LatticeError(ValueError):
    """Base class for invalid lattice input."""


class LatticeMismatch(LatticeError):
    pass


class InvalidRoot(LatticeError):
    pass


class InvalidAxis(LatticeError):
    pass


class NotAnIsometry(LatticeError):
    pass


# -- small exact matrix helpers ------------------------------------------------


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(v) for v in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(a, b):
    bt = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def transpose(a):
    return tuple(zip(*a))


def det(a) -> int | Fraction:
    """Exact determinant by Bareiss fraction-free elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num // prev if isinstance(num, int) and isinstance(prev, int) else num / prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def inverse(a) -> tuple[tuple[Fraction, ...], ...]:
    """Rational inverse by Gauss-Jordan elimination."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        p = m[c][c]
        m[c] = [x / p for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return tuple(tuple(row[n:]) for row in m)


def kernel(a) -> list[tuple[Fraction, ...]]:
    """Rational basis of the right kernel of ``a`` (reduced row echelon form)."""
    rows = [[Fraction(x) for x in row] for row in a]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        basis.append(tuple(v))
    return basis


def primitive(v: Sequence[int | Fraction]) -> tuple[int, ...]:
    """Clear denominators and divide by the content; sign is left unchanged."""
    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def normalize_sign(v: Sequence[int]) -> tuple[int, ...]:
    """Make the first nonzero coordinate positive."""
    for x in v:
        if x != 0:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


# -- domain types ---------------------------------------------------------------


@dataclass(frozen=True)
class Lattice:
    """A free Z-module with a symmetric nondegenerate integer Gram matrix."""

    gram: Matrix
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        gram = as_matrix(self.gram)
        object.__setattr__(self, "gram", gram)
        n = len(gram)
        if n == 0 or any(len(row) != n for row in gram):
            raise LatticeError("Gram matrix must be square and nonempty")
        if any(gram[i][j] != gram[j][i] for i in range(n) for j in range(n)):
            raise LatticeError("Gram matrix must be symmetric")
        if det(gram) == 0:
            raise LatticeError("Gram matrix is degenerate")
        if self.names is not None:
            names = tuple(self.names)
            if len(names) != n:
                raise LatticeError("need one basis name per row of the Gram matrix")
            object.__setattr__(self, "names", names)

    @property
    def rank(self) -> int:
        return len(self.gram)

    def vector(self, *coords) -> LatticeVector:
        if len(coords) == 1 and not isinstance(coords[0], int):
            coords = tuple(coords[0])
        return LatticeVector(self, tuple(coords))

    def basis(self) -> list[LatticeVector]:
        return [self.vector(row) for row in identity(self.rank)]

    def zero(self) -> LatticeVector:
        return self.vector((0,) * self.rank)

    def identity(self) -> Isometry:
        return Isometry(self, identity(self.rank))

    def pair_coords(self, a: Sequence[int], b: Sequence[int]):
        return sum(a[i] * sum(g * y for g, y in zip(self.gram[i], b)) for i in range(self.rank))


@dataclass(frozen=True)
class LatticeVector:
    lattice: Lattice
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) != self.lattice.rank:
            raise LatticeError(f"expected {self.lattice.rank} coordinates, got {len(coords)}")

    def _check(self, other: LatticeVector):
        if other.lattice != self.lattice:
            raise LatticeMismatch("vectors live in different lattices")

    def __add__(self, other: LatticeVector) -> LatticeVector:
        self._check(other)
        return LatticeVector(self.lattice, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: LatticeVector) -> LatticeVector:
        self._check(other)
        return LatticeVector(self.lattice, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> LatticeVector:
        return LatticeVector(self.lattice, tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> LatticeVector:
        return LatticeVector(self.lattice, tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def square(self) -> int:
        return pair(self, self)

    def primitive(self) -> LatticeVector:
        return LatticeVector(self.lattice, primitive(self.coords))

    def __str__(self) -> str:
        names = self.lattice.names or tuple(f"e{i + 1}" for i in range(self.lattice.rank))
        return format_combination(self.coords, names)


def format_combination(coords: Sequence[int], names: Sequence[str]) -> str:
    """Render ``(5, -1)`` with names ``(L, H)`` as ``5L-H``."""
    out = ""
    for c, name in zip(coords, names):
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if out else "")
        mag = "" if abs(c) == 1 else str(abs(c))
        out += f"{sign}{mag}{name}"
    return out or "0"


@dataclass(frozen=True)
class Isometry:
    """Integer matrix preserving the Gram pairing; acts on coordinate columns."""

    lattice: Lattice
    matrix: Matrix

    def __post_init__(self):
        m = as_matrix(self.matrix)
        object.__setattr__(self, "matrix", m)
        g = self.lattice.gram
        n = self.lattice.rank
        if len(m) != n or any(len(row) != n for row in m):
            raise NotAnIsometry(f"matrix must be {n}x{n}")
        if matmul(matmul(transpose(m), g), m) != g:
            raise NotAnIsometry("matrix does not preserve the Gram pairing")
        if det(m) not in (1, -1):
            raise NotAnIsometry("determinant must be +1 or -1")

    def __call__(self, x: LatticeVector) -> LatticeVector:
        if x.lattice != self.lattice:
            raise LatticeMismatch("vector and isometry live in different lattices")
        return LatticeVector(self.lattice, matvec(self.matrix, x.coords))

    def __matmul__(self, other: Isometry) -> Isometry:
        return compose(self, other)

    def __pow__(self, n: int) -> Isometry:
        if n < 0:
            inv = as_matrix(inverse(self.matrix))
            return Isometry(self.lattice, inv) ** (-n)
        result = identity(self.lattice.rank)
        base = self.matrix
        while n:
            if n & 1:
                result = matmul(result, base)
            base = matmul(base, base)
            n >>= 1
        return Isometry(self.lattice, result)

    @property
    def det(self) -> int:
        return det(self.matrix)

    def is_identity(self) -> bool:
        return self.matrix == identity(self.lattice.rank)


# -- operations -------------------------------------------------------------------


def pair(a: LatticeVector, b: LatticeVector) -> int:
    if a.lattice != b.lattice:
        raise LatticeMismatch("vectors live in different lattices")
    return a.lattice.pair_coords(a.coords, b.coords)


def discriminant(lat: Lattice) -> tuple[int, int]:
    """Return ``(det, |det|)`` of the Gram matrix."""
    d = det(lat.gram)
    return d, abs(d)


def diagonalize(gram) -> list[Fraction]:
    """Diagonal entries of a rational congruence diagonalization of ``gram``.

    Symmetric elimination: clear row and column of a nonzero pivot; when the
    remaining diagonal is zero but an off-diagonal entry is not, add row/column
    j to i first, which makes the pivot ``2*g_ij`` nonzero.
    """
    m = [[Fraction(x) for x in row] for row in gram]
    n = len(m)
    diag = []
    for k in range(n):
        if m[k][k] == 0:
            j = next((j for j in range(k + 1, n) if m[j][j] != 0), None)
            if j is not None:
                m[k], m[j] = m[j], m[k]
                for row in m:
                    row[k], row[j] = row[j], row[k]
            else:
                j = next((j for j in range(k + 1, n) if m[k][j] != 0), None)
                if j is not None:
                    for c in range(n):
                        m[k][c] += m[j][c]
                    for r in range(n):
                        m[r][k] += m[r][j]
        p = m[k][k]
        diag.append(p)
        if p == 0:
            continue
        for i in range(k + 1, n):
            f = m[i][k] / p
            if f:
                for c in range(k, n):
                    m[i][c] -= f * m[k][c]
                for r in range(k, n):
                    m[r][i] -= f * m[r][k]
    return diag


def classify(lat: Lattice) -> tuple[bool, tuple[int, int]]:
    """Return ``(even, (p, n))``: parity and signature of the form."""
    even = all(lat.gram[i][i] % 2 == 0 for i in range(lat.rank))
    diag = diagonalize(lat.gram)
    p = sum(1 for d in diag if d > 0)
    n = sum(1 for d in diag if d < 0)
    return even, (p, n)


def is_even_hyperbolic(lat: Lattice) -> bool:
    even, (p, n) = classify(lat)
    return even and p == 1 and n == lat.rank - 1


def direct_sum(*lattices: Lattice) -> Lattice:
    n = sum(l.rank for l in lattices)
    gram = [[0] * n for _ in range(n)]
    off = 0
    names = []
    for lat in lattices:
        for i in range(lat.rank):
            for j in range(lat.rank):
                gram[off + i][off + j] = lat.gram[i][j]
        names.extend(lat.names or [f"e{off + i + 1}" for i in range(lat.rank)])
        off += lat.rank
    if len(set(names)) != len(names):
        names = None
    return Lattice(as_matrix(gram), tuple(names) if names else None)


def _rank_one_map(lat: Lattice, sign: int, v: LatticeVector) -> Matrix:
    # x -> sign*x + (x, v) v, as a matrix acting on columns
    gv = matvec(lat.gram, v.coords)
    n = lat.rank
    return tuple(
        tuple(sign * int(i == j) + v.coords[i] * gv[j] for j in range(n)) for i in range(n)
    )


def reflect(c: LatticeVector) -> Isometry:
    """Reflection ``x -> x + (x, c) c`` in a (-2)-vector."""
    if pair(c, c) != -2:
        raise InvalidRoot(f"reflection root must have square -2, got {pair(c, c)}")
    return Isometry(c.lattice, _rank_one_map(c.lattice, 1, c))


def anti_involution(v: LatticeVector) -> Isometry:
    """The map ``x -> -x + (x, v) v`` for an axis with ``(v, v) = 2``."""
    if pair(v, v) != 2:
        raise InvalidAxis(f"axis must have square 2, got {pair(v, v)}")
    return Isometry(v.lattice, _rank_one_map(v.lattice, -1, v))


def compose(a: Isometry, b: Isometry) -> Isometry:
    """Matrix product ``a * b``: apply ``b`` first, then ``a``.

    For pullbacks this is ``(g f)^* = f^* g^*``, i.e. ``compose(f_star, g_star)``.
    """
    if a.lattice != b.lattice:
        raise LatticeMismatch("isometries live in different lattices")
    return Isometry(a.lattice, matmul(a.matrix, b.matrix))


def change_basis(matrix, basis: Sequence[Sequence[int]]):
    """Express ``matrix`` in the basis whose vectors are the given coordinate tuples.

    Returns ``P^-1 M P`` with ``P`` having the basis vectors as columns; entries
    are Fractions because the new basis need only be a rational one.
    """
    p = transpose(as_matrix(basis))
    if det(p) == 0:
        raise LatticeError("basis vectors are linearly dependent")
    return matmul(inverse(p), matmul(matrix, p))


def unimodular_change(lat: Lattice, u: Sequence[Sequence[int]]) -> Lattice:
    """The same lattice written in the basis given by the columns of ``u``."""
    u = as_matrix(u)
    if det(u) not in (1, -1):
        raise LatticeError("basis change must be unimodular")
    return Lattice(matmul(matmul(transpose(u), lat.gram), u))
