import functools
import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import CORPUS, brute_lattice_points, brute_transform, minkowski_points, subset_elementary
from latticerec import lp
from latticerec.algebra import LaurentPoly
from latticerec.errors import DimensionMismatch, InvalidInput, VerificationError
from latticerec.polytope import Polytope
from latticerec.transform import (
    LatticeMap,
    annihilating_power,
    char_poly,
    dropped_root_residuals,
    ehrhart_sequence,
    indicator_recursion_check,
    integer_point_transform,
    minimality_residuals,
    specialize,
    transform_sequence,
    verify_recursion,
    verify_specialized_recursion,
)

H = Fraction(1, 2)
parse = LaurentPoly.parse


def seq_oracle(P_verts, Q_verts, count, n):
    out = []
    for k in range(count):
        out.append(brute_transform(minkowski_points(P_verts, k, Q_verts), n))
    return out


# --- integer_point_transform --------------------------------------------


def test_transform_examples():
    assert integer_point_transform(Polytope([(0,), (1,)])) == parse("1 + x1", 1)
    assert integer_point_transform(Polytope(CORPUS["unit_square"])).render() == "1 + x1 + x2 + x1*x2"
    tri = [(0, 0), (2, 0), (0, 2)]
    assert integer_point_transform(Polytope(tri)) == brute_transform(tri)
    assert integer_point_transform(Polytope.empty(2)).is_zero()


@settings(max_examples=25, deadline=None)
@given(
    st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=5),
    st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
)
def test_translation_multiplies_by_monomial(verts, v):
    P = Polytope(verts)
    assert integer_point_transform(P.translate(v)) == integer_point_transform(P).shift(v)


@pytest.mark.parametrize("cut", [1, 2])
def test_valuation_on_axis_split_box(cut):
    def box(a, b):
        return Polytope([(x, y) for x in (a, b) for y in (0, 2)])

    whole, left, right, mid = box(0, 3), box(0, cut), box(cut, 3), box(cut, cut)
    s = integer_point_transform
    assert s(whole) == s(left) + s(right) - s(mid)


# --- char_poly ------------------------------------------------------------


def test_char_poly_segment():
    assert char_poly(Polytope([(0,), (1,)])) == [parse("1", 1), parse("-1 - x1", 1), parse("x1", 1)]


def test_char_poly_point():
    assert char_poly(Polytope([(2, 3)])) == [LaurentPoly.one(2), -LaurentPoly.monomial((2, 3))]


def test_char_poly_simplex():
    verts = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    coeffs = char_poly(Polytope(verts))
    assert len(coeffs) == 4 and coeffs[0] == 1
    for j in range(4):
        assert coeffs[j] == subset_elementary(verts, j, 3) * (-1) ** j
    assert coeffs[1].render() == "-x1 - x2 - x3"
    assert coeffs[3].render() == "-x1*x2*x3"


def test_char_poly_rejects_rational():
    with pytest.raises(InvalidInput):
        char_poly(Polytope([(H,), (1,)]))


# --- verify_recursion ----------------------------------------------------


def test_segment_telescoping():
    P, Q = Polytope([(0,), (1,)]), Polytope([(0,)])
    seq = transform_sequence(P, Q, 8)
    for k, s in enumerate(seq):
        assert s == LaurentPoly({(i,): 1 for i in range(k + 1)}, 1)
    x = LaurentPoly.monomial((1,))
    for k in range(6):
        assert seq[k + 2] == (1 + x) * seq[k + 1] - x * seq[k]
    cert = verify_recursion(P, Q, 5)
    assert cert.k_range == (0, 5) and cert.minimal


def _recursion_oracle(P_verts, Q_verts, k_max):
    """The subset-sum form of the recursion over brute-force transforms."""
    n = len(P_verts[0])
    r = len(P_verts)
    seq = seq_oracle(P_verts, Q_verts, k_max + r + 1, n)
    for k in range(k_max + 1):
        rhs = LaurentPoly.zero(n)
        for size in range(1, r + 1):
            for I in itertools.combinations(P_verts, size):
                e = tuple(sum(c) for c in zip(*I))
                rhs = rhs + seq[k + r - size].shift(e) * (-1) ** (1 + size)
        if seq[k + r] != rhs:
            return False
    return True


@pytest.mark.parametrize("name", ["unit_triangle", "segment_2d", "unit_square"])
def test_recursion_matches_oracle(name):
    verts = CORPUS[name]
    assert _recursion_oracle(verts, [(0, 0)], 3)
    cert = verify_recursion(Polytope(verts), Polytope([(0, 0)]), 3)
    assert cert.verified


def test_recursion_triangle_kmax5():
    cert = verify_recursion(Polytope(CORPUS["unit_triangle"]), Polytope([(0, 0)]), 5)
    assert cert.k_range == (0, 5)
    assert len(cert.char_poly_coeffs) == 4 and cert.char_poly_coeffs[0] == 1


def test_nonlattice_q_example():
    P = Polytope([(0, 0), (1, 0)])
    Q = Polytope([(H, H)])
    assert all(s.is_zero() for s in transform_sequence(P, Q, 6))
    cert = verify_recursion(P, Q, 5)
    assert not cert.minimal
    assert all(p.is_zero() for p in cert.minimality_residuals.values())


def test_recursion_rational_q_segment():
    P = Polytope(CORPUS["unit_triangle"])
    Q = Polytope([(H, 0), (H, 1)])
    verify_recursion(P, Q, 5)
    assert _recursion_oracle(CORPUS["unit_triangle"], Q.vertices, 2)


def test_recursion_detects_corrupted_sequence():
    P, Q = Polytope([(0,), (1,)]), Polytope([(0,)])
    seq = transform_sequence(P, Q, 8)
    seq[4] = seq[4] + LaurentPoly.one(1)
    with pytest.raises(VerificationError) as info:
        verify_recursion(P, Q, 5, sequence=seq)
    assert info.value.detail["k"] == 2


def test_recursion_errors():
    with pytest.raises(DimensionMismatch):
        verify_recursion(Polytope([(0,), (1,)]), Polytope([(0, 0)]), 2)
    with pytest.raises(InvalidInput):
        verify_recursion(Polytope([(0,), (H,)]), Polytope([(0,)]), 2)
    with pytest.raises(InvalidInput):
        verify_recursion(Polytope([(0,), (1,)]), Polytope([(0,)]), -1)


def test_certificate_json():
    cert = verify_recursion(Polytope([(0,), (1,)]), Polytope([(0,)]), 2)
    js = cert.to_json()
    assert js["verified"] is True and js["k_range"] == [0, 2] and js["minimal"] is True
    assert js["residuals"] == {"0": "1", "1": "x1"}
    assert js["char_poly"] == ["1", "-1 - x1", "x1"]


# --- minimality ----------------------------------------------------------


def test_minimality_segment_residuals():
    res = minimality_residuals(Polytope([(0,), (1,)]), Polytope([(0,)]))
    # dropping x^0 leaves X - x: sigma_1 - x sigma_0 = 1
    assert res[(0,)] == LaurentPoly.one(1)
    # dropping x^1 leaves X - 1: sigma_1 - sigma_0 = x
    assert res[(1,)] == LaurentPoly.monomial((1,))


def _residual_oracle(P_verts, Q_verts, n):
    r = len(P_verts)
    seq = seq_oracle(P_verts, Q_verts, r, n)
    out = {}
    for u in P_verts:
        rest = [v for v in P_verts if v != u]
        total = LaurentPoly.zero(n)
        for j in range(r):
            total = total + subset_elementary(rest, j, n) * seq[r - 1 - j] * (-1) ** j
        out[tuple(u)] = total
    return out


@pytest.mark.parametrize("name", ["unit_triangle", "unit_square", "segment_2d"])
@pytest.mark.parametrize("q", [[(0, 0)], [(1, 2)], [(0, 0), (1, 1)]])
def test_residuals_match_oracle_and_are_nonzero(name, q):
    P = Polytope(CORPUS[name])
    res = minimality_residuals(P, Polytope(q))
    oracle = _residual_oracle(CORPUS[name], q, 2)
    assert {tuple(int(c) for c in v): p for v, p in res.items()} == oracle
    assert all(not p.is_zero() for p in res.values())


def test_dropped_root_residuals_requires_distinct_roots():
    seq = [LaurentPoly.one(1)] * 4
    with pytest.raises(InvalidInput):
        dropped_root_residuals(seq, [(0,), (0,)], 1)


def test_dropped_root_residuals_detects_inconsistency():
    # not a solution of the recursion at all: vanishing pattern changes with k
    one, x = LaurentPoly.one(1), LaurentPoly.monomial((1,))
    seq = [one, one, one, x + 5]
    with pytest.raises(VerificationError):
        dropped_root_residuals(seq, [(0,), (1,)], 1)


# --- indicator recursion -------------------------------------------------


def test_indicator_delta1_k0_explicit():
    # 1_{2D} = 1_{D+e1} + 1_{D+e2} - 1_{e1+e2} on a half-integer grid, with
    # membership decided by LP over vertex lists
    D2 = [(2, 0), (0, 2)]
    A, B, C = [(2, 0), (1, 1)], [(1, 1), (0, 2)], [(1, 1)]
    for x in itertools.product([Fraction(i, 2) for i in range(-2, 7)], repeat=2):
        lhs = int(lp.in_convex_hull(x, D2))
        rhs = int(lp.in_convex_hull(x, A)) + int(lp.in_convex_hull(x, B)) - int(lp.in_convex_hull(x, C))
        assert lhs == rhs
    assert indicator_recursion_check(Polytope([(1, 0), (0, 1)]), 0, (-1, 3))


def test_indicator_single_point():
    assert indicator_recursion_check(Polytope([(1, 2)]), 2, (-1, 8))


def test_indicator_square_k1():
    assert indicator_recursion_check(Polytope(CORPUS["unit_square"]), 1, (-1, 4))


def test_indicator_rational_triangle():
    P = Polytope([(0, 0), (1, 0), (H, H)])
    for k in range(3):
        assert indicator_recursion_check(P, k, [(-1, 4), (-1, 4)], Fraction(1, 2))


def test_indicator_box_validation():
    with pytest.raises((InvalidInput, DimensionMismatch)):
        indicator_recursion_check(Polytope(CORPUS["unit_square"]), 0, [(0, 1)] * 3)


# --- specialization ------------------------------------------------------


def test_specialize_examples():
    p = parse("1 + x1 + x2 + x1*x2", 2)
    assert specialize(p, LatticeMap.identity(2)) == p
    assert specialize(p, LatticeMap.zero(2)) == LaurentPoly.constant(4, 0)
    assert specialize(p, LatticeMap(((1, 0),), 2)) == parse("2 + 2*x1", 1)


polys2 = st.dictionaries(
    st.tuples(st.integers(-2, 2), st.integers(-2, 2)), st.integers(-3, 3), max_size=4
).map(lambda d: LaurentPoly(d, 2))
maps = st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2)), min_size=0, max_size=3).map(
    lambda rows: LatticeMap(tuple(rows), 2)
)


@given(polys2, polys2, maps)
def test_specialize_is_homomorphism(p, q, f):
    assert specialize(p * q, f) == specialize(p, f) * specialize(q, f)
    assert specialize(p + q, f) == specialize(p, f) + specialize(q, f)


def test_lattice_map_validation():
    with pytest.raises(DimensionMismatch):
        LatticeMap(((1, 2, 3),), 2)
    with pytest.raises(DimensionMismatch):
        specialize(LaurentPoly.one(3), LatticeMap.identity(2))


@functools.lru_cache(maxsize=None)
def _pentagon_sequence():
    return tuple(seq_oracle(CORPUS["pentagon"], [(0, 0), (1, 0)], 8, 2))


@pytest.mark.parametrize(
    "f",
    [LatticeMap(((1, 1),), 2), LatticeMap(((1, 0),), 2), LatticeMap.zero(2), LatticeMap(((1, -1), (2, 1)), 2)],
)
def test_specialized_recursion(f):
    P = Polytope(CORPUS["pentagon"])
    Q = Polytope([(0, 0), (1, 0)])
    cert = verify_specialized_recursion(P, Q, f, 2)
    # direct substitution: roots x^{f(v)} annihilate the specialized sequence
    verts = P.integer_vertices()
    seq = [specialize(s, f) for s in _pentagon_sequence()]
    images = [f(v) for v in verts]
    r = len(images)
    for k in range(3):
        total = LaurentPoly.zero(f.l)
        for j in range(r + 1):
            total = total + subset_elementary(images, j, f.l) * seq[k + r - j] * (-1) ** j
        assert total.is_zero()
    assert cert.k_range == (0, 2)


# --- Ehrhart --------------------------------------------------------------


def test_ehrhart_examples():
    assert ehrhart_sequence(Polytope(CORPUS["unit_square"]), 5) == [(k + 1) ** 2 for k in range(6)]
    assert ehrhart_sequence(Polytope([(0,), (1,)]), 5) == [k + 1 for k in range(6)]
    tri = [(0, 0), (1, 0), (0, 1)]
    counts = ehrhart_sequence(Polytope(tri), 5)
    assert counts == [len(brute_lattice_points([(k * a, k * b) for a, b in tri])) for k in range(6)]
    assert counts == [(k + 1) * (k + 2) // 2 for k in range(6)]


def test_ehrhart_minimal_power_is_dim_plus_one():
    for name in ("segment", "unit_triangle", "unit_square", "simplex_3d", "point"):
        P = Polytope(CORPUS[name])
        counts = ehrhart_sequence(P, 6)
        assert annihilating_power(counts) == P.dim + 1


def test_annihilating_power():
    assert annihilating_power([1, 1, 1, 1]) == 1
    assert annihilating_power([0, 0, 0]) == 0
    assert annihilating_power([1, 2, 4, 8, 16]) is None
