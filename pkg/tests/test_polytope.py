import itertools
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from conftest import CORPUS, brute_lattice_points
from latticerec import lp
from latticerec.errors import DimensionMismatch, InfeasibleError, InvalidInput, UnboundedError
from latticerec.polytope import (
    HRep,
    Polytope,
    canonicalize_hrep,
    canonicalize_vertices,
    dilate,
    lattice_points,
    minkowski_sum,
    polytope_from_json,
    polytope_to_json,
    v_to_h,
    vertex_enumeration,
)
from latticerec.schurgt import SkewShape, gt_polytope

H = Fraction(1, 2)


def as_set(points):
    return {tuple(Fraction(c) for c in p) for p in points}


def hrep_points(h, box):
    """Integer points of the box satisfying h, by direct evaluation."""
    return {m for m in itertools.product(*(range(a, b + 1) for a, b in box)) if h.contains(m)}


# --- exact LP ----------------------------------------------------------


def test_lp_optimum_and_status():
    res = lp.linprog([-1, -1], A_ub=[[1, 2], [3, 1]], b_ub=[4, 6], nonneg=True)
    assert res.status == "optimal"
    assert res.value == Fraction(-14, 5)
    assert tuple(res.x) == (Fraction(8, 5), Fraction(6, 5))
    assert lp.linprog([1], A_ub=[[1], [-1]], b_ub=[0, -1]).status == "infeasible"
    assert lp.linprog([-1], A_ub=[[-1]], b_ub=[0]).status == "unbounded"


def test_lp_hull_membership():
    tri = [(0, 0), (2, 0), (0, 2)]
    assert lp.in_convex_hull((1, 1), tri)
    assert not lp.in_convex_hull((H + 1, H + 1), tri)
    assert lp.in_convex_hull((H, H), tri)


# --- canonicalize_vertices --------------------------------------------


def test_canonicalize_midpoint():
    assert as_set(canonicalize_vertices([(0,), (H,), (1,)])) == {(0,), (1,)}


def test_canonicalize_triangle_unchanged():
    tri = [(0, 0), (1, 0), (0, 1)]
    assert as_set(canonicalize_vertices(tri)) == as_set(tri)


def test_canonicalize_grid_to_corners():
    grid = list(itertools.product(range(3), repeat=2))
    # oracle: points not in the hull of the others
    oracle = {p for p in grid if not lp.in_convex_hull(p, [q for q in grid if q != p])}
    assert as_set(canonicalize_vertices(grid)) == as_set(oracle) == as_set([(0, 0), (2, 0), (0, 2), (2, 2)])


def test_canonicalize_empty():
    with pytest.raises(InvalidInput):
        canonicalize_vertices([])


# --- v_to_h ------------------------------------------------------------


def test_v_to_h_segment():
    h = v_to_h([(0,), (1,)])
    assert set(h.inequalities) == {((-1,), 0), ((1,), 1)} and not h.equalities


def test_v_to_h_standard_simplex():
    h = v_to_h([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert h.equalities == (((1, 1, 1), 1),)
    # the projected facets are x_i >= 0 for two coordinates, and the third
    # coordinate's nonnegativity written through the equality
    box = [(-1, 2)] * 3
    assert hrep_points(h, box) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    assert len(h.inequalities) == 3


def test_v_to_h_diagonal_segment():
    h = v_to_h([(0, 0), (1, 1)])
    assert h.equalities == (((1, -1), 0),)
    assert len(h.inequalities) == 2
    assert hrep_points(h, [(-2, 3)] * 2) == {(0, 0), (1, 1)}


def test_v_to_h_single_point_and_empty():
    h = v_to_h([(2, 3)])
    assert not h.inequalities and len(h.equalities) == 2
    assert not v_to_h([], 2).contains((0, 0))


# --- dilate --------------------------------------------------------------


def test_dilate_segment():
    assert dilate(Polytope([(0,), (1,)]), 3) == Polytope([(0,), (3,)])


def test_dilate_simplex_hrep():
    D = Polytope([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    for k in range(4):
        P = dilate(D, k)
        pts = {m for m in itertools.product(range(k + 1), repeat=3) if sum(m) == k}
        assert set(lattice_points(P)) == pts


def test_dilate_identity_zero_negative():
    P = Polytope(CORPUS["pentagon"])
    assert dilate(P, 1) == P
    assert dilate(P, 0) == Polytope([(0, 0)])
    with pytest.raises(InvalidInput):
        dilate(P, -1)


# --- minkowski_sum -----------------------------------------------------


def test_minkowski_examples():
    seg = Polytope([(0,), (1,)])
    assert minkowski_sum(seg, seg) == Polytope([(0,), (2,)])
    P = Polytope(CORPUS["pentagon"])
    assert minkowski_sum(P, Polytope([(H, 2)])) == P.translate((H, 2))
    sq = minkowski_sum(Polytope([(0, 0), (1, 0)]), Polytope([(0, 0), (0, 1)]))
    assert sq == Polytope(CORPUS["unit_square"])


def test_minkowski_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        minkowski_sum(Polytope([(0,)]), Polytope([(0, 0)]))


@pytest.mark.parametrize("name", ["unit_triangle", "pentagon", "segment_2d", "simplex_3d"])
def test_minkowski_of_dilates(name):
    P = Polytope(CORPUS[name])
    for a in range(4):
        for b in range(4 - a):
            assert minkowski_sum(dilate(P, a), dilate(P, b)) == dilate(P, a + b)


small_poly = st.lists(
    st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=6
)


@settings(max_examples=30, deadline=None)
@given(small_poly, small_poly)
def test_minkowski_vertices_are_vertex_sums(a, b):
    P, Q = Polytope(a), Polytope(b)
    S = P + Q
    sums = {tuple(x + y for x, y in zip(p, q)) for p in P.vertices for q in Q.vertices}
    assert set(S.vertices) <= sums


# --- lattice points -----------------------------------------------------


def test_lattice_points_examples():
    assert lattice_points(Polytope([(0,), (2,)])) == [(0,), (1,), (2,)]
    assert len(lattice_points(Polytope([(0, 0), (2, 0), (0, 2)]))) == 6
    assert lattice_points(Polytope([(H, H), (1 + H, H)])) == []


def test_lattice_points_graded_order():
    pts = lattice_points(Polytope([(0, 0), (2, 0), (0, 2)]))
    assert pts == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_lattice_points_match_lp_oracle(name):
    P = Polytope(CORPUS[name])
    for k in range(3):
        assert sorted(lattice_points(dilate(P, k))) == brute_lattice_points(dilate(P, k).vertices)


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(0, 2)), min_size=1, max_size=5))
def test_lattice_points_random_rational(raw):
    # vertices with half-integer coordinates: (a/2, b/2) after scaling by c
    verts = [(Fraction(a, 2), Fraction(b, 2)) for a, b, _ in raw]
    P = Polytope(verts)
    assert sorted(lattice_points(P)) == brute_lattice_points(P.vertices)


# --- vertex enumeration --------------------------------------------------


def test_vertex_enumeration_examples():
    seg = HRep.build(1, [((1,), 1), ((-1,), 0)])
    assert as_set(vertex_enumeration(seg)) == {(0,), (1,)}
    sq = HRep.build(2, [((1, 0), 1), ((-1, 0), 0), ((0, 1), 1), ((0, -1), 0)])
    assert as_set(vertex_enumeration(sq)) == as_set(CORPUS["unit_square"])


def test_vertex_enumeration_errors():
    with pytest.raises(InfeasibleError):
        vertex_enumeration(HRep.build(1, [((1,), 0), ((-1,), -1)]))
    with pytest.raises(UnboundedError):
        vertex_enumeration(HRep.build(2, [((-1, 0), 0), ((0, -1), 0)]))


def test_gt_example_vertex_values():
    P = gt_polytope(SkewShape((5, 3, 1), (3, 0, 0), 3))
    assert P.n == 6
    vals = {c for v in P.vertices for c in v}
    assert vals <= {0, 1, 3, 5}


def test_canonicalize_hrep_drops_redundancy():
    h = HRep.build(1, [((1,), 1), ((1,), 5), ((-1,), 0), ((2,), 7)])
    c = canonicalize_hrep(h)
    assert set(c.inequalities) == {((1,), 1), ((-1,), 0)}
    flat = canonicalize_hrep(HRep.build(1, [((1,), 2), ((-1,), -2)]))
    assert flat.equalities == (((1,), 2),)


@settings(max_examples=25, deadline=None)
@given(
    st.integers(1, 4).flatmap(
        lambda d: st.lists(st.tuples(*[st.integers(0, 2)] * d), min_size=1, max_size=6)
    )
)
def test_round_trip_v_h_v(points):
    V = canonicalize_vertices(points)
    assert as_set(vertex_enumeration(v_to_h(V))) == as_set(V)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_hrep_agrees_with_vertices(name):
    P = Polytope(CORPUS[name])
    for v in P.vertices:
        assert P.hrep.contains(v)
    assert as_set(Polytope.from_hrep(P.hrep).vertices) == as_set(P.vertices)


# --- polytope object ---------------------------------------------------


def test_dim_and_flags():
    assert Polytope(CORPUS["cube_3d"]).dim == 3
    assert Polytope(CORPUS["segment_2d"]).dim == 1
    assert Polytope([(1, 2)]).dim == 0
    E = Polytope.empty(2)
    assert E.is_empty() and E.dim == -1 and lattice_points(E) == []
    assert not Polytope([(H, 0), (1, 0)]).is_lattice()


def test_integer_vertices_rejects_rational():
    with pytest.raises(InvalidInput):
        Polytope([(H,), (1,)]).integer_vertices()


def test_contains():
    P = Polytope(CORPUS["unit_triangle"])
    assert P.contains((H, H)) and not P.contains((1, 1))


def test_json_round_trip():
    obj = {"dim": 2, "vertices": [[0, 0], ["1/2", "1/2"], [1, 0]]}
    P = polytope_from_json(obj)
    assert P.vertices[1] == (H, H) or (H, H) in P.vertices
    assert polytope_from_json(polytope_to_json(P)) == P


@pytest.mark.parametrize(
    "obj",
    [
        {"vertices": [[0]]},
        {"dim": 1},
        {"dim": 2, "vertices": [[0, 0], [1]]},
        {"dim": 1, "vertices": [[0.5]]},
        {"dim": 1, "vertices": "x"},
        [1, 2],
    ],
)
def test_json_errors(obj):
    with pytest.raises(InvalidInput):
        polytope_from_json(obj)
