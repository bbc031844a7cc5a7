"""The lattice NS(S) + Ze of a Hilbert square and Beauville involutions on it."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .k3geom import (
    DEFAULT_SEARCH_DEGREE_MAX,
    K3Model,
    PreconditionError,
    is_ample,
    no_line_check,
    very_ample_check,
)
from .lattice import (
    Isometry,
    Lattice,
    LatticeError,
    LatticeVector,
    anti_involution,
    as_matrix,
    change_basis,
    compose,
    direct_sum,
    inverse,
    is_even_hyperbolic,
    kernel,
    matvec,
    pair,
    primitive,
    transpose,
)
from .poly import IntPolynomial, OrderCertificate, char_poly, factor, order_certificate


@dataclass(frozen=True)
class HilbSquareLattice:
    surface_ns: Lattice
    extended: Lattice
    e_index: int

    def lift(self, x: LatticeVector) -> LatticeVector:
        if x.lattice != self.surface_ns:
            raise LatticeError("class is not in the surface lattice")
        coords = list(x.coords)
        coords.insert(self.e_index, 0)
        return self.extended.vector(coords)

    @property
    def e(self) -> LatticeVector:
        coords = [0] * self.extended.rank
        coords[self.e_index] = 1
        return self.extended.vector(coords)

    def e_coefficient(self, x: LatticeVector) -> int:
        return x.coords[self.e_index]


def extend_lattice(ns: Lattice) -> HilbSquareLattice:
    """NS(S) + Ze with (e, e) = -2, e orthogonal to NS(S); e is the last basis vector."""
    if ns.rank != 2 or not is_even_hyperbolic(ns):
        raise LatticeError("surface lattice must be even hyperbolic of rank 2")
    names = (ns.names or ("e1", "e2")) + ("e",)
    if len(set(names)) != 3:
        names = None
    ext = direct_sum(ns, Lattice(((-2,),)))
    ext = Lattice(ext.gram, names)
    return HilbSquareLattice(ns, ext, 2)


@dataclass(frozen=True)
class BeauvillePolarization:
    """A degree-4 class certified very ample with no line on the quartic image."""

    h: LatticeVector
    certified: bool

    def __post_init__(self):
        if pair(self.h, self.h) != 4:
            raise PreconditionError("Beauville polarization needs (h, h) = 4")


def certify_polarization(
    k: K3Model, h: LatticeVector, search_degree_max: int = DEFAULT_SEARCH_DEGREE_MAX
) -> BeauvillePolarization:
    if pair(h, h) != 4:
        raise PreconditionError("Beauville polarization needs (h, h) = 4")
    ok = bool(very_ample_check(k, h, search_degree_max)) and no_line_check(k, h, search_degree_max)
    return BeauvillePolarization(h, ok)


def beauville_involution(hl: HilbSquareLattice, p: BeauvillePolarization) -> Isometry:
    """Pullback action ``x -> -x + (x, h - e)(h - e)`` on NS(S) + Ze."""
    if not p.certified:
        raise PreconditionError(f"{p.h} is not certified very ample without lines")
    axis = hl.lift(p.h) - hl.e
    return anti_involution(axis)


def intersection_of_polarizations(k: K3Model, h1: LatticeVector, h2: LatticeVector,
                                  search_degree_max: int = DEFAULT_SEARCH_DEGREE_MAX) -> int:
    """``m = (h1, h2)``, checked against the Hodge index bound ``m >= 5``."""
    if pair(h1, h1) != 4 or pair(h2, h2) != 4:
        raise PreconditionError("both polarizations need square 4")
    if h1 == h2:
        raise PreconditionError("polarizations must be distinct")
    if not (is_ample(k, h1, search_degree_max) and is_ample(k, h2, search_degree_max)):
        raise PreconditionError("both polarizations must be ample")
    m = pair(h1, h2)
    # distinct classes of equal square 4 are independent, so Hodge index is strict
    if not (m > 0 and m * m > 16):
        raise PreconditionError(f"Hodge index violated: m = {m}")
    assert m >= 5
    return m


def polarization_basis(hl: HilbSquareLattice, h1: LatticeVector, h2: LatticeVector) -> list[LatticeVector]:
    """The rational basis ``<h1 - e, h2 - e, e>`` of NS(S^[2]) (x) Q."""
    return [hl.lift(h1) - hl.e, hl.lift(h2) - hl.e, hl.e]


def in_basis(a: Isometry, basis: Sequence[LatticeVector]):
    """Matrix of ``a`` in a rational basis; entries are Fractions."""
    return change_basis(a.matrix, [b.coords for b in basis])


def coords_in_basis(x: LatticeVector, basis: Sequence[LatticeVector]) -> tuple[Fraction, ...]:
    p = transpose(as_matrix([b.coords for b in basis]))
    return matvec(inverse(p), x.coords)


@dataclass(frozen=True)
class DynamicsReport:
    matrix: tuple  # composite in the reporting basis
    char_poly: IntPolynomial
    factorization: list[tuple[IntPolynomial, int]]
    order_certificate: OrderCertificate
    fixed_vector: LatticeVector  # integral coordinates in the extended lattice
    fixed_vector_coords: tuple[int, ...]  # coordinates in the reporting basis
    fixed_vector_norm: int


def composite_dynamics(
    hl: HilbSquareLattice,
    i1: Isometry,
    i2: Isometry,
    basis: Sequence[LatticeVector] | None = None,
) -> DynamicsReport:
    """Dynamics of ``(i2 i1)^* = i1^* i2^*`` given the two pullback matrices.

    ``basis`` chooses where the matrix and the fixed vector are reported; the
    fixed vector is made primitive in that basis, with e-coefficient <= 0.
    """
    m = compose(i1, i2)
    basis = list(basis) if basis is not None else hl.extended.basis()
    mb = in_basis(m, basis)
    cp = char_poly(m)
    cert = order_certificate(m)
    n = len(mb)
    ker = kernel([[mb[i][j] - int(i == j) for j in range(n)] for i in range(n)])
    if len(ker) != 1:
        raise LatticeError(f"expected a one-dimensional fixed space, got dimension {len(ker)}")
    coords = primitive(ker[0])
    vec = [sum(Fraction(c) * b.coords[i] for c, b in zip(coords, basis)) for i in range(hl.extended.rank)]
    assert all(x.denominator == 1 for x in vec)
    v = hl.extended.vector(int(x) for x in vec)
    if hl.e_coefficient(v) > 0:
        v, coords = -v, tuple(-c for c in coords)
    assert m(v) == v
    return DynamicsReport(
        matrix=mb,
        char_poly=cp,
        factorization=factor(cp),
        order_certificate=cert,
        fixed_vector=v,
        fixed_vector_coords=tuple(coords),
        fixed_vector_norm=pair(v, v),
    )


def orbit(hl: HilbSquareLattice, a: Isometry, x: LatticeVector, n: int) -> list[LatticeVector]:
    """``[x, a x, ..., a^n x]``."""
    if n < 0:
        raise ValueError("orbit length must be nonnegative")
    out = [x]
    for _ in range(n):
        out.append(a(out[-1]))
    return out


def symbolic_family(m: int) -> tuple[HilbSquareLattice, LatticeVector, LatticeVector]:
    """Hilbert-square lattice over ``<h1, h2>`` with Gram ``[[4, m], [m, 4]]``.

    Models an arbitrary pair of degree-4 polarizations with ``(h1, h2) = m``
    without fixing the surface; used to check formulas in ``m``.
    """
    ns = Lattice(((4, m), (m, 4)), ("H1", "H2"))
    hl = extend_lattice(ns)
    return hl, ns.vector(1, 0), ns.vector(0, 1)

