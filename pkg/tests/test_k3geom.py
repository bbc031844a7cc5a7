import pytest

from k3lat.k3geom import (
    ConeR2,
    Inconclusive,
    K3Model,
    NoEffectiveClasses,
    PreconditionError,
    bpf_check,
    chamber_reduce,
    covering_involution,
    dual_cone,
    effective_cone,
    is_ample,
    nef_cone,
    no_line_check,
    rr_h0,
    very_ample_check,
)
from k3lat.lattice import Lattice, LatticeError, pair, reflect
from oracles import brute_solve


def ray_coords(cone):
    return sorted(r.coords for r in cone.rays)


def test_effective_cone_lambda(model):
    cone = effective_cone(model, 40)
    assert ray_coords(cone) == [(-1, 2), (9, -2)]
    assert all(model.degree(r) == 8 for r in cone.rays)
    assert sorted(c.coords for c in model.rational_curves) == [(-1, 2), (9, -2)]


def test_effective_rays_are_minimal_degree_roots(model, lam):
    # oracle: every (-2)-class of positive degree up to 60 lies in the cone
    cone = effective_cone(model)
    for d in range(1, 61):
        for x in brute_solve(lam.gram, (1, 0), -2, d):
            assert cone.contains(lam.vector(x))


def test_nef_cone_lambda(model):
    assert ray_coords(nef_cone(model)) == [(-3, 8), (37, -8)]
    assert dual_cone(nef_cone(model)) == effective_cone(model)


def test_small_bound_is_inconclusive(lam):
    k = K3Model(lam, lam.vector(1, 0))
    with pytest.raises(Inconclusive):
        effective_cone(k, 5)
    with pytest.raises(NoEffectiveClasses):
        effective_cone(k, 5)


def test_split_model_has_isotropic_rays():
    lat = Lattice(((2, 0), (0, -2)))
    k = K3Model(lat, lat.vector(1, 0))
    assert ray_coords(effective_cone(k, 10)) == [(1, -1), (1, 1)]
    # brute force: no (-2)-class of positive degree at all
    assert all(not brute_solve(lat.gram, (1, 0), -2, d) for d in range(1, 11))
    assert rr_h0(k, lat.vector(1, 1)) == 2


def test_hyperbolic_plane_model():
    u = Lattice(((0, 1), (1, 0)))
    k = K3Model(u, u.vector(1, 2))
    assert ray_coords(effective_cone(k)) == [(0, 1), (1, -1)]
    v = bpf_check(k, u.vector(1, 2))
    assert not v and v.witness.coords == (0, 1)
    assert pair(v.witness, v.witness) == 0 and pair(v.witness, u.vector(1, 2)) == 1
    assert no_line_check(k, u.vector(1, 2)) is False


def test_model_validation(lam):
    with pytest.raises(LatticeError):
        K3Model(lam, lam.vector(-1, 2))
    with pytest.raises(LatticeError):
        K3Model(Lattice(((2, 5), (5, 3))), Lattice(((2, 5), (5, 3))).vector(1, 0))


def test_is_ample(model, lam, L, H):
    assert is_ample(model, H) and is_ample(model, L)
    assert not is_ample(model, lam.vector(-1, 2))
    assert not is_ample(model, lam.vector(-3, 8))  # nef boundary


def test_chamber_reduce(model, lam, L):
    r = chamber_reduce(model, L)
    assert r.word == [] and r.image == L
    r = chamber_reduce(model, -L)
    assert r.word == ["-id"] and r.image == L
    x = reflect(lam.vector(-1, 2))(L)
    assert x.coords == (-7, 16)
    r = chamber_reduce(model, x)
    assert [c.coords for c in r.roots] == [(-1, 2)] and r.image == L
    with pytest.raises(PreconditionError):
        chamber_reduce(model, lam.vector(-1, 2))


def test_rr_h0(model, lam, L, H):
    assert rr_h0(model, L) == 3
    assert rr_h0(model, H) == 4
    with pytest.raises(PreconditionError):
        rr_h0(model, lam.vector(-1, 2))


def test_bpf_lambda(model, L, H):
    assert bpf_check(model, L) and bpf_check(model, H)
    with pytest.raises(PreconditionError):
        bpf_check(model, -L)


def test_very_ample(model, lam, L, H):
    assert very_ample_check(model, H)
    assert very_ample_check(model, lam.vector(5, -1))
    v = very_ample_check(model, lam.vector(2, 0))
    assert v.reason == "B2" and v.witness == L
    assert very_ample_check(model, L).reason == "TooSmall"


def test_no_line(model, lam, H):
    assert no_line_check(model, H)
    assert no_line_check(model, lam.vector(5, -1))
    assert [pair(lam.vector(5, -1), r) for r in effective_cone(model).rays] == [37, 3]


def test_covering_involution(model, lam, L, H):
    tau = covering_involution(model, L)
    assert tau.matrix == ((1, 5), (0, -1))
    cone = effective_cone(model)
    assert tau(cone.ray1) == cone.ray2
    with pytest.raises(PreconditionError):
        covering_involution(model, H)


def test_cone_helpers(lam):
    cone = ConeR2(lam, lam.vector(-2, 4), lam.vector(9, -2))
    assert cone.ray1.coords == (-1, 2)
    assert cone.contains(lam.vector(8, 0), strict=True)
    assert cone.contains(lam.vector(-1, 2)) and not cone.contains(lam.vector(-1, 2), strict=True)
    with pytest.raises(LatticeError):
        ConeR2(lam, lam.vector(1, 0), lam.vector(2, 0))
