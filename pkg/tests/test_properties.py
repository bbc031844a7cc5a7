from functools import reduce

import sympy
from hypothesis import assume, given
from hypothesis import strategies as st

from k3lat.k3geom import chamber_reduce, nef_cone
from k3lat.lattice import (
    Lattice,
    anti_involution,
    compose,
    det,
    direct_sum,
    pair,
    reflect,
)
from k3lat.poly import IntPolynomial, count_roots
from k3lat.products import direct_sum as product_sum
from k3lat.products import product_cone_membership
from k3lat.quadform import NormDegreeQuery, solve_norm_degree
from k3lat.report import Check, Report
from oracles import brute_solve

small = st.integers(-9, 9)
vec2 = st.tuples(st.integers(-30, 30), st.integers(-30, 30))


@st.composite
def even_hyperbolic(draw):
    a, b, c = draw(small), draw(small), draw(small)
    assume(b * b - 4 * a * c > 0)
    return Lattice(((2 * a, b), (b, 2 * c)))


@st.composite
def lattice_with_positive_class(draw):
    lat = draw(even_hyperbolic())
    x = draw(st.tuples(st.integers(-4, 4), st.integers(-4, 4)))
    v = lat.vector(x)
    assume(pair(v, v) > 0)
    return lat, v


@given(lattice_with_positive_class(), st.integers(-4, 2), st.integers(0, 12))
def test_solver_equals_brute_force(lp, norm, degree):
    lat, a = lp
    got = sorted(v.coords for v in solve_norm_degree(NormDegreeQuery(lat, a, norm, degree)))
    assert got == brute_solve(lat.gram, a.coords, norm, degree)


LAM = Lattice(((2, 5), (5, 4)), ("L", "H"))
ROOTS = [v for d in range(1, 60) for v in solve_norm_degree(NormDegreeQuery(LAM, LAM.vector(1, 0), -2, d))]
GENERATORS = [reflect(r) for r in ROOTS] + [anti_involution(LAM.vector(1, 0))]


@given(st.lists(st.sampled_from(GENERATORS), min_size=1, max_size=6), vec2, vec2)
def test_words_preserve_pairing(word, x, y):
    g = reduce(compose, word)
    u, v = LAM.vector(x), LAM.vector(y)
    assert pair(g(u), g(v)) == pair(u, v)
    assert g.det in (1, -1)


@given(st.sampled_from(GENERATORS))
def test_generators_are_involutions(g):
    assert compose(g, g).is_identity()


@given(vec2)
def test_chamber_reduce_idempotent(x):
    from k3lat.k3geom import K3Model

    k = K3Model(LAM, LAM.vector(1, 0))
    v = LAM.vector(x)
    assume(pair(v, v) > 0)
    r = chamber_reduce(k, v)
    assert nef_cone(k).contains(r.image)
    assert pair(r.image, r.image) == pair(v, v)
    again = chamber_reduce(k, r.image)
    assert again.word == [] and again.image == r.image


@given(st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5)), min_size=2, max_size=2),
       st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5)), min_size=2, max_size=2))
def test_product_cone_closed_under_addition(p1, p2):
    from k3lat.k3geom import K3Model

    k = K3Model(LAM, LAM.vector(1, 0))
    pm = product_sum([(k, 2)])
    nef = [nef_cone(k)]
    x = pm.assemble([LAM.vector(c) for c in p1])
    y = pm.assemble([LAM.vector(c) for c in p2])
    if product_cone_membership(pm, x, nef) and product_cone_membership(pm, y, nef):
        assert product_cone_membership(pm, x + y, nef)


@given(even_hyperbolic(), even_hyperbolic(), vec2, vec2, vec2, vec2)
def test_direct_sum_pairing_splits(l1, l2, a1, a2, b1, b2):
    s = direct_sum(l1, l2)
    x, y = s.vector(a1 + a2), s.vector(b1 + b2)
    assert pair(x, y) == pair(l1.vector(a1), l1.vector(b1)) + pair(l2.vector(a2), l2.vector(b2))
    assert det(s.gram) == det(l1.gram) * det(l2.gram)


@given(st.lists(st.integers(-20, 20), min_size=2, max_size=6))
def test_sturm_total_count_matches_sympy(coeffs):
    assume(coeffs[-1] != 0)
    t = sympy.Symbol("t")
    expected = len(set(sympy.real_roots(sympy.Poly(list(reversed(coeffs)), t))))
    assert count_roots(IntPolynomial(tuple(coeffs)), "-inf", "+inf") == expected


json_leaf = st.one_of(st.integers(-10**30, 10**30), st.text(max_size=8), st.booleans(), st.none())
json_data = st.recursive(json_leaf, lambda inner: st.one_of(
    st.lists(inner, max_size=4), st.dictionaries(st.text(max_size=5), inner, max_size=4)), max_leaves=12)


@given(st.lists(st.tuples(st.sampled_from(["pass", "fail", "inconclusive", "skipped"]),
                          st.dictionaries(st.text(max_size=5), json_data, max_size=3)), max_size=5))
def test_report_json_roundtrip(items):
    r = Report("prop")
    for i, (status, data) in enumerate(items):
        r.add(Check(f"c{i}", "d", status, "", data))
    assert Report.from_json(r.to_json()) == r
