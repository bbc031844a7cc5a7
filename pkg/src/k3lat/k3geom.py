"""Numerical K3 surfaces of Picard rank 2.

A ``K3Model`` is a rank-2 even hyperbolic lattice with an ample class.  A
(-2)-class is taken to be effective iff it has positive degree against the
ample class; the effective cone is then spanned, on each side of the ample
ray, by the lowest-degree (-2)-class or failing that by the isotropic ray.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

from .lattice import (
    Isometry,
    Lattice,
    LatticeError,
    LatticeVector,
    anti_involution,
    is_even_hyperbolic,
    matvec,
    pair,
    primitive,
    reflect,
)
from .quadform import (
    NormDegreeQuery,
    isotropic_directions,
    orthogonal_generator,
    pell_solutions,
    solve_norm_degree,
    sublattice_discriminant_constraint,
)

DEFAULT_SEARCH_DEGREE_MAX = 50


class Inconclusive(RuntimeError):
    """The effective cone could not be certified within the search bound."""


class NoEffectiveClasses(Inconclusive):
    pass


class PreconditionError(LatticeError):
    pass


@dataclass(frozen=True)
class ConeR2:
    """A strictly convex cone in a rank-2 lattice spanned by two primitive rays."""

    lattice: Lattice
    ray1: LatticeVector
    ray2: LatticeVector

    def __post_init__(self):
        r1, r2 = self.ray1, self.ray2
        if r1.lattice != self.lattice or r2.lattice != self.lattice:
            raise LatticeError("rays must lie in the cone's lattice")
        if self.lattice.rank != 2:
            raise LatticeError("ConeR2 needs a rank-2 lattice")
        r1, r2 = r1.primitive(), r2.primitive()
        if _det2(r1, r2) == 0:
            raise LatticeError("cone rays are linearly dependent")
        q1, q2, p = pair(r1, r1), pair(r2, r2), pair(r1, r2)
        if not (q1 > 0 or q2 > 0 or (p > 0 and p * p > q1 * q2)):
            raise LatticeError("cone does not meet the positive cone")
        if r2.coords < r1.coords:
            r1, r2 = r2, r1
        object.__setattr__(self, "ray1", r1)
        object.__setattr__(self, "ray2", r2)

    @property
    def rays(self) -> tuple[LatticeVector, LatticeVector]:
        return (self.ray1, self.ray2)

    def coefficients(self, x: LatticeVector):
        """``(a, b)`` with ``x = a ray1 + b ray2``, as numerator pairs over ``det``."""
        d = _det2(self.ray1, self.ray2)
        a = _det2(x, self.ray2)
        b = _det2(self.ray1, x)
        if d < 0:
            a, b = -a, -b
        return a, b

    def contains(self, x: LatticeVector, strict: bool = False) -> bool:
        a, b = self.coefficients(x)
        return (a > 0 and b > 0) if strict else (a >= 0 and b >= 0)


def _det2(u: LatticeVector, v: LatticeVector) -> int:
    return u.coords[0] * v.coords[1] - u.coords[1] * v.coords[0]


def _perp(x: LatticeVector) -> LatticeVector:
    u = matvec(x.lattice.gram, x.coords)
    return x.lattice.vector(primitive((u[1], -u[0])))


def dual_cone(cone: ConeR2) -> ConeR2:
    """Rays ``N_i`` with ``(N_i, ray_i) = 0`` and ``(N_i, ray_j) > 0``."""
    rays = []
    for r, other in ((cone.ray1, cone.ray2), (cone.ray2, cone.ray1)):
        n = _perp(r)
        if pair(n, other) < 0:
            n = -n
        rays.append(n)
    return ConeR2(cone.lattice, rays[0], rays[1])


@dataclass
class K3Model:
    ns: Lattice
    ample: LatticeVector
    rational_curves: list[LatticeVector] | None = field(default=None, compare=False)
    no_isotropic: bool | None = field(default=None, compare=False)
    _cones: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.ns.rank != 2:
            raise LatticeError(f"K3 model needs a rank-2 lattice, got rank {self.ns.rank}")
        if not is_even_hyperbolic(self.ns):
            raise LatticeError("Neron-Severi lattice must be even and hyperbolic")
        if self.ample.lattice != self.ns:
            raise LatticeError("ample class is not in the Neron-Severi lattice")
        if pair(self.ample, self.ample) <= 0:
            raise LatticeError("ample class must have positive square")
        if self.no_isotropic is None:
            self.no_isotropic = not isotropic_directions(self.ns)

    def degree(self, x: LatticeVector) -> int:
        return pair(x, self.ample)

    def roots_of_degree(self, d: int) -> list[LatticeVector]:
        return solve_norm_degree(NormDegreeQuery(self.ns, self.ample, -2, d))

    def side(self, x: LatticeVector) -> int:
        """Which side of the ample ray ``x`` lies on (+1, -1, or 0 on the ray)."""
        s = pair(x, orthogonal_generator(self.ample))
        return (s > 0) - (s < 0)

    def _root_degree_possible(self, d: int) -> bool:
        # <A, X> for a (-2)-class X has determinant -(2a + d^2), a square multiple of det(NS)
        a = pair(self.ample, self.ample)
        c = sublattice_discriminant_constraint(self.ns, a, -2, (d, d))
        return bool(pell_solutions(c))


def _split_root_degree_bound(k: K3Model) -> int | None:
    """Largest degree of any (-2)-class when NS splits over Q; None otherwise.

    With isotropic ``v1, v2`` of index ``N`` in NS, ``N x = p v1 + q v2`` and
    ``(x, x) = -2`` forces ``p q = -N^2 / (v1, v2)``, a finite set.
    """
    dirs = isotropic_directions(k.ns)
    if len(dirs) != 2:
        return None
    v1, v2 = (v if k.degree(v) > 0 else -v for v in dirs)
    n = abs(_det2(v1, v2))
    b = pair(v1, v2)
    if (n * n) % b:
        return 0
    prod = abs(n * n // b)
    best = 0
    for p in range(1, isqrt(prod) + 1):
        if prod % p == 0:
            q = prod // p
            for x, y in ((p, q), (q, p)):
                best = max(best, (x * k.degree(v1) + y * k.degree(v2)) // n + 1)
    return best


def effective_cone(k: K3Model, search_degree_max: int = DEFAULT_SEARCH_DEGREE_MAX) -> ConeR2:
    if search_degree_max < 1:
        raise ValueError("search_degree_max must be positive")
    if search_degree_max in k._cones:
        return k._cones[search_degree_max]
    found: dict[int, LatticeVector] = {}
    limit = search_degree_max
    split_bound = _split_root_degree_bound(k)
    if split_bound is not None:
        limit = max(limit, split_bound)
    for d in range(1, limit + 1):
        if len(found) == 2:
            break
        if not k._root_degree_possible(d):
            continue
        for x in k.roots_of_degree(d):
            found.setdefault(k.side(x), x)
    rays: dict[int, LatticeVector] = dict(found)
    for v in isotropic_directions(k.ns):
        v = v if k.degree(v) > 0 else -v
        rays.setdefault(k.side(v), v)
    if not rays:
        raise NoEffectiveClasses("no (-2)-classes up to the bound and no isotropic classes")
    if set(rays) != {-1, 1}:
        raise Inconclusive(
            f"effective cone not certified: one side has no (-2)-class of degree <= {limit} "
            "and no isotropic ray"
        )
    cone = ConeR2(k.ns, rays[-1], rays[1])
    for r in cone.rays:
        assert k.degree(r) > 0
    k.rational_curves = sorted(found.values(), key=lambda v: v.coords)
    k._cones[search_degree_max] = cone
    return cone


def nef_cone(k: K3Model, search_degree_max: int = DEFAULT_SEARCH_DEGREE_MAX) -> ConeR2:
    return dual_cone(effective_cone(k, search_degree_max))


def is_ample(k: K3Model, d: LatticeVector, search_degree_max: int = DEFAULT_SEARCH_DEGREE_MAX) -> bool:
    cone = effective_cone(k, search_degree_max)
    return pair(d, d) > 0 and all(pair(d, r) > 0 for r in cone.rays)


@dataclass(frozen=True)
class ChamberReduction:
    sign: int
    roots: tuple[LatticeVector, ...]
    image: LatticeVector

    @property
    def word(self) -> list:
        return (["-id"] if self.sign < 0 else []) + list(self.roots)


def chamber_reduce(
    k: K3Model, x: LatticeVector, search_degree_max: int = DEFAULT_SEARCH_DEGREE_MAX
) -> ChamberReduction:
    """Move a positive class into the nef chamber with ``-id`` and (-2)-reflections.

    Each reflection uses a positive-degree (-2)-class pairing negatively with
    the current image, which strictly lowers the image's degree.
    """
    if pair(x, x) <= 0:
        raise PreconditionError("chamber reduction needs a class of positive square")
    cone = effective_cone(k, search_degree_max)
    max_deg = max(k.degree(r) for r in cone.rays)
    sign = 1
    img = x
    if k.degree(img) < 0:
        sign, img = -1, -img
    roots = []
    while True:
        for d in range(1, max_deg + 1):
            hit = next((c for c in k.roots_of_degree(d) if pair(img, c) < 0), None)
            if hit is not None:
                break
        else:
            break
        before = k.degree(img)
        img = reflect(hit)(img)
        assert k.degree(img) < before
        roots.append(hit)
    if not dual_cone(cone).contains(img):
        raise Inconclusive("reduced class is not in the certified nef cone")
    return ChamberReduction(sign, tuple(roots), img)


def rr_h0(k: K3Model, d: LatticeVector, search_degree_max: int = DEFAULT_SEARCH_DEGREE_MAX) -> int:
    """``h^0 = 2 + (d, d)/2`` for a nonzero nef class."""
    if d.is_zero() or pair(d, d) < 0 or not nef_cone(k, search_degree_max).contains(d):
        raise PreconditionError("Riemann-Roch count is only used for nonzero nef classes")
    return 2 + pair(d, d) // 2


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str | None = None
    witness: LatticeVector | None = None

    def __bool__(self) -> bool:
        return self.ok


def _require_ample(k, d, search_degree_max):
    if not is_ample(k, d, search_degree_max):
        raise PreconditionError(f"{d} is not ample")


def bpf_check(k: K3Model, d: LatticeVector, search_degree_max: int = DEFAULT_SEARCH_DEGREE_MAX) -> Verdict:
    """Free unless some isotropic class has degree 1 against ``d``."""
    _require_ample(k, d, search_degree_max)
    hits = solve_norm_degree(NormDegreeQuery(k.ns, d, 0, 1))
    if hits:
        return Verdict(False, "IsotropicDegree1", hits[0])
    return Verdict(True)


def very_ample_check(
    k: K3Model, h: LatticeVector, search_degree_max: int = DEFAULT_SEARCH_DEGREE_MAX
) -> Verdict:
    _require_ample(k, h, search_degree_max)
    if not bpf_check(k, h, search_degree_max):
        raise PreconditionError(f"|{h}| is not base point free")
    if pair(h, h) < 4:
        return Verdict(False, "TooSmall")
    for deg in (1, 2):
        hits = solve_norm_degree(NormDegreeQuery(k.ns, h, 0, deg))
        if hits:
            return Verdict(False, "E2", hits[0])
    if all(c % 2 == 0 for c in h.coords):
        b = k.ns.vector(c // 2 for c in h.coords)
        if pair(b, b) == 2:
            return Verdict(False, "B2", b)
    hits = solve_norm_degree(NormDegreeQuery(k.ns, h, -2, 0))
    if hits:
        return Verdict(False, "ContractedCurve", hits[0])
    return Verdict(True)


def no_line_check(k: K3Model, h: LatticeVector, search_degree_max: int = DEFAULT_SEARCH_DEGREE_MAX) -> bool:
    """True iff no (-2)-ray of the effective cone has degree 1 against ``h``."""
    cone = effective_cone(k, search_degree_max)
    return not any(pair(r, r) == -2 and pair(r, h) == 1 for r in cone.rays)


def covering_involution(
    k: K3Model, l: LatticeVector, search_degree_max: int = DEFAULT_SEARCH_DEGREE_MAX
) -> Isometry:
    """Action of the covering involution of the double plane defined by ``|l|``."""
    if pair(l, l) != 2:
        raise PreconditionError("double-plane class must have square 2")
    _require_ample(k, l, search_degree_max)
    if not bpf_check(k, l, search_degree_max):
        raise PreconditionError(f"|{l}| is not base point free")
    return anti_involution(l)

