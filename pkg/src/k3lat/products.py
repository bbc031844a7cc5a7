"""Products of K3 lattices, product nef cones and finite-ray cone bookkeeping."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .hilb2 import HilbSquareLattice, orbit
from .k3geom import ConeR2, K3Model
from .lattice import Isometry, Lattice, LatticeError, LatticeVector, direct_sum as lattice_sum
from .poly import order_certificate


class StabilityViolation(LatticeError):
    pass


class ProportionalityAnomaly(RuntimeError):
    pass


@dataclass(frozen=True)
class ProductModel:
    factors: tuple[tuple[K3Model, int], ...]
    total: Lattice
    factor_slices: tuple[tuple[int, slice], ...]  # (factor index, coordinate range) per copy

    def project(self, x: LatticeVector, copy: int) -> LatticeVector:
        fi, sl = self.factor_slices[copy]
        return self.factors[fi][0].ns.vector(x.coords[sl])

    def embed(self, copy: int, y: LatticeVector) -> LatticeVector:
        fi, sl = self.factor_slices[copy]
        if y.lattice != self.factors[fi][0].ns:
            raise LatticeError("class does not belong to this factor")
        coords = [0] * self.total.rank
        coords[sl] = y.coords
        return self.total.vector(coords)

    def assemble(self, parts: Sequence[LatticeVector]) -> LatticeVector:
        out = self.total.zero()
        for copy, y in enumerate(parts):
            out = out + self.embed(copy, y)
        return out

    @property
    def copies(self) -> int:
        return len(self.factor_slices)


def direct_sum(factors: Sequence[tuple[K3Model, int]]) -> ProductModel:
    if not factors:
        raise ValueError("need at least one factor")
    lats = []
    slices = []
    off = 0
    for fi, (model, mult) in enumerate(factors):
        if mult < 1:
            raise ValueError("multiplicities must be positive")
        for _ in range(mult):
            r = model.ns.rank
            slices.append((fi, slice(off, off + r)))
            lats.append(Lattice(model.ns.gram))
            off += r
    total = lattice_sum(*lats)
    return ProductModel(tuple((m, k) for m, k in factors), total, tuple(slices))


def product_cone_membership(p: ProductModel, x: LatticeVector, per_factor_nef_cones: Sequence[ConeR2]) -> bool:
    """Nef cone of a product of K3s is the product of the factor nef cones.

    ``per_factor_nef_cones`` has one cone per entry of ``p.factors``; it is
    applied to every copy of that factor.
    """
    if len(per_factor_nef_cones) != len(p.factors):
        raise ValueError("need one nef cone per factor")
    for copy, (fi, _) in enumerate(p.factor_slices):
        cone = per_factor_nef_cones[fi]
        if cone.lattice != p.factors[fi][0].ns:
            raise LatticeError("nef cone belongs to a different lattice")
        if not cone.contains(p.project(x, copy)):
            return False
    return True


def block_isometry(p: ProductModel, perm: Sequence[int], actions: Sequence[Isometry] | None = None) -> Isometry:
    """Isometry of the product sending copy ``i`` to copy ``perm[i]``, acting by ``actions[i]`` first.

    Only copies of the same factor may be permuted.
    """
    n = p.copies
    if sorted(perm) != list(range(n)):
        raise ValueError("perm must be a permutation of the copies")
    if any(p.factor_slices[i][0] != p.factor_slices[perm[i]][0] for i in range(n)):
        raise LatticeError("can only permute copies of the same factor")
    actions = list(actions) if actions is not None else [None] * n
    rows = [[0] * p.total.rank for _ in range(p.total.rank)]
    for i in range(n):
        _, src = p.factor_slices[i]
        _, dst = p.factor_slices[perm[i]]
        r = src.stop - src.start
        mat = actions[i].matrix if actions[i] is not None else tuple(
            tuple(int(a == b) for b in range(r)) for a in range(r)
        )
        for a in range(r):
            for b in range(r):
                rows[dst.start + a][src.start + b] = mat[a][b]
    return Isometry(p.total, tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class FiniteRayCone:
    lattice: Lattice
    rays: tuple[LatticeVector, ...]
    semi_ample_flags: tuple[bool, ...] = field(default=())

    def __post_init__(self):
        rays = tuple(r.primitive() for r in self.rays)
        if not rays:
            raise LatticeError("a finite-ray cone needs at least one ray")
        for a, b in combinations(rays, 2):
            if proportional(a, b):
                raise LatticeError(f"rays {a} and {b} are proportional")
        flags = tuple(self.semi_ample_flags) or (False,) * len(rays)
        if len(flags) != len(rays):
            raise LatticeError("one semi-ample flag per ray")
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "semi_ample_flags", flags)


def proportional(a: LatticeVector, b: LatticeVector) -> bool:
    """All 2x2 minors of the coordinate pair vanish."""
    n = len(a.coords)
    return all(
        a.coords[i] * b.coords[j] == a.coords[j] * b.coords[i] for i in range(n) for j in range(i + 1, n)
    )


def invariant_ample_from_rays(c: FiniteRayCone, group: Sequence[Isometry]) -> LatticeVector:
    """Sum of the primitive ray generators; fixed by any group that permutes the rays."""
    ray_set = set(c.rays)
    for g in group:
        if g.lattice != c.lattice:
            raise LatticeError("group element acts on another lattice")
        if {g(r) for r in c.rays} != ray_set:
            raise StabilityViolation(f"ray set is not stable under {g.matrix}")
    total = c.lattice.zero()
    for r in c.rays:
        total = total + r
    for g in group:
        assert g(total) == total
    if c.lattice.rank == 2 and len(c.rays) == 2:
        cone = ConeR2(c.lattice, *c.rays)
        assert cone.contains(total, strict=True)
    return total


def non_polyhedral_witness(
    hl: HilbSquareLattice, a: Isometry, seed: LatticeVector, count: int
) -> list[LatticeVector]:
    """``count`` orbit classes ``a^n(seed)``, checked pairwise non-proportional."""
    if count < 1:
        raise ValueError("count must be positive")
    if seed.is_zero():
        raise ValueError("seed must be nonzero")
    classes = orbit(hl, a, seed, count - 1)
    for i, j in combinations(range(count), 2):
        if proportional(classes[i], classes[j]):
            raise ProportionalityAnomaly(
                f"orbit classes {i} and {j} are proportional; certificate: {order_certificate(a).reason}"
            )
    return classes


@dataclass
class MDSReport:
    condition1_assumed: bool
    condition2: bool
    condition3: bool
    conclusion: str
    reasons: list[str]
    hypotheses: list[str]

    def as_dict(self) -> dict:
        return {
            "condition1_assumed": self.condition1_assumed,
            "condition2": self.condition2,
            "condition3": self.condition3,
            "conclusion": self.conclusion,
            "reasons": list(self.reasons),
            "hypotheses": list(self.hypotheses),
        }


def mds_checklist(
    c: FiniteRayCone | None,
    movable_equals_nef: bool,
    q_factorial_assumed: bool = True,
    infinite_orbit: Sequence[LatticeVector] | None = None,
) -> MDSReport:
    """Which lattice-level proxies of the Mori dream space conditions hold.

    Never asserts geometric MDS-ness: semi-ampleness and Q-factoriality are
    taken as declared inputs.
    """
    reasons = []
    hypotheses = ["semi-ampleness of the rays is declared, not computed"]
    if not q_factorial_assumed:
        reasons.append("Q-factoriality / Pic = NS not assumed")
    cond2 = c is not None and all(c.semi_ample_flags)
    if c is None:
        reasons.append("no finite ray set for the nef cone")
    elif not all(c.semi_ample_flags):
        reasons.append("some nef ray is not declared semi-ample")
    if infinite_orbit:
        cond2 = False
        hypotheses.append("H^0(T) = 0 is assumed when passing from an invariant ample class to finiteness")
        reasons.append(f"infinite ray orbit: {len(infinite_orbit)} pairwise non-proportional classes")
    cond3 = bool(movable_equals_nef)
    if not cond3:
        reasons.append("movable cone is not known to equal the nef cone")
    ok = q_factorial_assumed and cond2 and cond3
    return MDSReport(q_factorial_assumed, cond2, cond3, "MDS-consistent" if ok else "not-established", reasons, hypotheses)


def product_nef_rays(p: ProductModel, per_factor_nef_cones: Sequence[ConeR2]) -> list[LatticeVector]:
    """Generators of the product nef cone: each factor ray embedded into one copy."""
    rays = []
    for copy, (fi, _) in enumerate(p.factor_slices):
        for r in per_factor_nef_cones[fi].rays:
            rays.append(p.embed(copy, r))
    return rays

