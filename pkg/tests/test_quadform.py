import random

import pytest

from k3lat.lattice import Lattice, pair
from k3lat.quadform import (
    InvalidPolarization,
    NormDegreeQuery,
    PellConstraint,
    hodge_fiber_bound,
    isotropic_classes_exist,
    isotropic_directions,
    orthogonal_generator,
    pell_solutions,
    solve_norm_degree,
    sublattice_discriminant_constraint,
)
from oracles import brute_solve


def coords(vs):
    return sorted(v.coords for v in vs)


def test_rational_curves_of_degree_8(lam, L):
    assert coords(solve_norm_degree(NormDegreeQuery(lam, L, -2, 8))) == [(-1, 2), (9, -2)]


def test_no_root_orthogonal_to_L(lam, L):
    assert solve_norm_degree(NormDegreeQuery(lam, L, -2, 0)) == []
    w = orthogonal_generator(L)
    assert w.coords == (5, -2) and pair(w, w) == -34


@pytest.mark.parametrize("d", range(0, 11))
def test_no_isotropic_classes_by_degree(lam, L, d):
    assert solve_norm_degree(NormDegreeQuery(lam, L, 0, d)) == []
    assert brute_solve(lam.gram, L.coords, 0, d, bound=50) == []


def test_isotropic_witnesses(lam):
    assert isotropic_classes_exist(lam) is None
    u = Lattice(((0, 1), (1, 0)))
    assert isotropic_classes_exist(u).coords == (0, 1) or isotropic_classes_exist(u).coords == (1, 0)
    w = isotropic_classes_exist(Lattice(((2, 0), (0, -2))))
    assert w is not None and pair(w, w) == 0 and abs(w.coords[0]) == abs(w.coords[1]) == 1
    assert len(isotropic_directions(Lattice(((2, 0), (0, -2))))) == 2


def test_invalid_polarization(lam):
    with pytest.raises(InvalidPolarization):
        NormDegreeQuery(lam, lam.vector(-1, 2), -2, 1)


@pytest.mark.parametrize("norm", [-2, 0, 2, 4, -4])
@pytest.mark.parametrize("degree", range(0, 16))
def test_solver_matches_brute_force_on_lambda(lam, L, H, norm, degree):
    for a in (L, H):
        got = coords(solve_norm_degree(NormDegreeQuery(lam, a, norm, degree)))
        assert got == brute_solve(lam.gram, a.coords, norm, degree)


def test_solver_matches_brute_force_split_lattice():
    lat = Lattice(((2, 0), (0, -2)))
    a = lat.vector(1, 0)
    for norm in (-2, 0, 2):
        for degree in range(0, 9):
            got = coords(solve_norm_degree(NormDegreeQuery(lat, a, norm, degree)))
            assert got == brute_solve(lat.gram, a.coords, norm, degree)


def test_hodge_bound_is_respected(lam, L):
    q = NormDegreeQuery(lam, L, -2, 8)
    assert hodge_fiber_bound(q) == 34
    for v in solve_norm_degree(q):
        y2 = pair(v, v) - pair(v, L) ** 2 / 2
        assert -y2 == hodge_fiber_bound(q)


def test_pell_examples():
    assert pell_solutions(PellConstraint(17, 4, (1, 8))) == [(8, 2)]
    assert pell_solutions(PellConstraint(17, -4, (1, 4))) == [(2, 0)]
    assert pell_solutions(PellConstraint(17, 0, (1, 16))) == []
    with pytest.raises(ValueError):
        pell_solutions(PellConstraint(17, 4))


def test_pell_brute_force():
    rng = random.Random(5)
    for _ in range(30):
        rhs, off = rng.randint(1, 30), rng.randint(-20, 20)
        want = [(k, l) for k in range(1, 60) for l in range(0, 60) if abs(k * k + off) == rhs * l * l]
        assert pell_solutions(PellConstraint(rhs, off, (1, 59))) == want


def test_sublattice_constraints(lam):
    assert str(sublattice_discriminant_constraint(lam, 2, -2)) == "k^2 + 4 = 17 l^2"
    assert str(sublattice_discriminant_constraint(lam, 2, 2)) == "|k^2 - 4| = 17 l^2"
    c = sublattice_discriminant_constraint(lam, 0, 0)
    assert (c.rhs_disc, c.offset) == (17, 0)
