"""Diophantine solvers on rank-2 hyperbolic lattices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .lattice import Lattice, LatticeError, LatticeVector, classify, det, matvec, normalize_sign, pair, primitive


class InvalidPolarization(LatticeError):
    pass


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return (abs(a), (1 if a >= 0 else -1), 0)
    g, x, y = _egcd(b, a % b)
    return g, y, x - (a // b) * y


def _require_rank2_hyperbolic(lat: Lattice):
    if lat.rank != 2:
        raise LatticeError(f"rank-2 lattice required, got rank {lat.rank}")
    _, sig = classify(lat)
    if sig != (1, 1):
        raise LatticeError(f"signature (1, 1) required, got {sig}")


@dataclass(frozen=True)
class NormDegreeQuery:
    lattice: Lattice
    polarization: LatticeVector
    norm: int
    degree: int

    def __post_init__(self):
        if self.polarization.lattice != self.lattice:
            raise LatticeError("polarization is not in the query lattice")
        if pair(self.polarization, self.polarization) <= 0:
            raise InvalidPolarization("polarization must have positive square")


def orthogonal_generator(a: LatticeVector) -> LatticeVector:
    """Primitive generator of the rank-1 complement of ``a`` in a rank-2 lattice."""
    u = matvec(a.lattice.gram, a.coords)
    return a.lattice.vector(normalize_sign(primitive((u[1], -u[0]))))


def solve_norm_degree(q: NormDegreeQuery) -> list[LatticeVector]:
    """All nonzero ``x`` with ``(x, x) = norm`` and ``(x, A) = degree``, sorted by coordinates.

    The degree condition is a linear equation whose integer solutions form a
    line ``x0 + t w`` with ``w`` spanning the complement of ``A``.  That
    complement is negative definite, so ``(x, x)`` is a concave quadratic in
    ``t`` and the norm condition has at most two integral roots.
    """
    lat, A = q.lattice, q.polarization
    _require_rank2_hyperbolic(lat)
    a = pair(A, A)
    # Hodge index: (x,x)(A,A) <= (x,A)^2 on a hyperbolic plane
    if q.norm * a > q.degree**2:
        return []
    u = matvec(lat.gram, A.coords)
    g, s, t = _egcd(u[0], u[1])
    if q.degree % g:
        return []
    x0 = lat.vector(s * (q.degree // g), t * (q.degree // g))
    w = orthogonal_generator(A)
    q0, b, c = pair(x0, x0), pair(x0, w), pair(w, w)
    # c t^2 + 2 b t + (q0 - norm) = 0, with c < 0
    disc = b * b - c * (q0 - q.norm)
    if disc < 0 or not is_square(disc):
        return []
    r = isqrt(disc)
    out = set()
    for num in (-b + r, -b - r):
        if num % c == 0:
            out.add(x0 + w * (num // c))
    result = sorted((v for v in out if not v.is_zero()), key=lambda v: v.coords)
    for v in result:
        assert pair(v, v) == q.norm and pair(v, A) == q.degree
    return result


def isotropic_directions(lat: Lattice) -> list[LatticeVector]:
    """Primitive isotropic vectors up to sign (empty if the form does not split over Q)."""
    _require_rank2_hyperbolic(lat)
    (g11, g12), (_, g22) = lat.gram
    d = g12 * g12 - g11 * g22
    if not is_square(d):
        return []
    s = isqrt(d)
    if g11 == 0:
        cands = [(1, 0), (-g22, 2 * g12)]
    else:
        cands = [(-g12 + s, g11), (-g12 - s, g11)]
    out = []
    for c in cands:
        v = lat.vector(normalize_sign(primitive(c)))
        assert pair(v, v) == 0
        if v not in out:
            out.append(v)
    return sorted(out, key=lambda v: v.coords)


def isotropic_classes_exist(lat: Lattice) -> LatticeVector | None:
    """A primitive isotropic witness, or None when ``b^2 - 4ac`` is not a square."""
    dirs = isotropic_directions(lat)
    return dirs[0] if dirs else None


@dataclass(frozen=True)
class PellConstraint:
    """``|k^2 + offset| = rhs_disc * l^2`` over ``k`` in ``k_range`` (inclusive), ``l >= 0``.

    For the sublattice constraints the left side is a Gram determinant up to
    sign, hence the absolute value; with ``offset > 0`` it is just ``k^2 + offset``.
    """

    rhs_disc: int
    offset: int
    k_range: tuple[int, int] | None = None

    def __post_init__(self):
        if self.rhs_disc <= 0:
            raise ValueError("rhs_disc must be positive")
        if self.k_range is not None and self.k_range[0] > self.k_range[1]:
            raise ValueError("empty k_range")

    def with_range(self, lo: int, hi: int) -> PellConstraint:
        return PellConstraint(self.rhs_disc, self.offset, (lo, hi))

    def __str__(self) -> str:
        if self.offset == 0:
            lhs = "k^2"
        elif self.offset > 0:
            lhs = f"k^2 + {self.offset}"
        else:
            lhs = f"|k^2 - {-self.offset}|"
        return f"{lhs} = {self.rhs_disc} l^2"


def pell_solutions(p: PellConstraint) -> list[tuple[int, int]]:
    if p.k_range is None:
        raise ValueError("PellConstraint needs a finite k_range")
    out = []
    for k in range(p.k_range[0], p.k_range[1] + 1):
        val = abs(k * k + p.offset)
        if val % p.rhs_disc == 0 and is_square(val // p.rhs_disc):
            out.append((k, isqrt(val // p.rhs_disc)))
    return out


def sublattice_discriminant_constraint(
    ambient: Lattice, a_norm: int, x_norm: int, k_range: tuple[int, int] | None = None
) -> PellConstraint:
    """Constraint on ``k = (A, X)`` for classes of squares ``a_norm``, ``x_norm``.

    ``<A, X>`` has Gram determinant ``a_norm * x_norm - k^2``; when it is a
    full-rank sublattice its determinant is ``det(ambient)`` times a square index.
    """
    if ambient.rank != 2:
        raise LatticeError("ambient lattice must have rank 2")
    return PellConstraint(abs(det(ambient.gram)), -a_norm * x_norm, k_range)


def hodge_fiber_bound(q: NormDegreeQuery) -> Fraction:
    """``-(y, y)`` for the orthogonal part ``y`` of any solution: ``degree^2/(A,A) - norm``."""
    a = pair(q.polarization, q.polarization)
    return Fraction(q.degree**2, a) - q.norm

