"""Shared corpus and brute-force oracles.

Oracles here deliberately avoid the library's H-representation and
lattice-point scanner: membership is decided by exact LP feasibility of
the convex-combination system over the vertex list.
"""

import itertools
from fractions import Fraction

import pytest

from latticerec import lp
from latticerec.algebra import LaurentPoly
from latticerec.polytope import Polytope

# corpus of lattice polytopes used across modules
CORPUS = {
    "segment": [(0,), (1,)],
    "long_segment": [(0,), (3,)],
    "segment_2d": [(0, 0), (2, 1)],
    "unit_triangle": [(0, 0), (1, 0), (0, 1)],
    "triangle_203": [(0, 0), (2, 0), (0, 3)],
    "unit_square": [(0, 0), (1, 0), (0, 1), (1, 1)],
    "rectangle": [(0, 0), (2, 0), (0, 1), (2, 1)],
    "pentagon": [(0, 0), (2, 0), (3, 1), (1, 3), (0, 2)],
    "simplex_3d": [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)],
    "cube_3d": list(itertools.product((0, 1), repeat=3)),
    "point": [(1, 2)],
}


def corpus_polytope(name):
    return Polytope(CORPUS[name])


def brute_lattice_points(vertices):
    """Integer points of conv(vertices) by LP membership over the vertex box."""
    vertices = [tuple(Fraction(c) for c in v) for v in vertices]
    n = len(vertices[0])
    lo = [min(v[i] for v in vertices) for i in range(n)]
    hi = [max(v[i] for v in vertices) for i in range(n)]
    ranges = [range(-(-a.numerator // a.denominator), b.numerator // b.denominator + 1) for a, b in zip(lo, hi)]
    return sorted(m for m in itertools.product(*ranges) if lp.in_convex_hull(m, vertices))


def brute_transform(vertices, n=None):
    pts = brute_lattice_points(vertices) if vertices else []
    if n is None:
        n = len(vertices[0])
    return LaurentPoly({m: 1 for m in pts}, n)


def minkowski_points(P_vertices, k, Q_vertices):
    """Vertex candidates of kP + Q (pairwise sums)."""
    return [tuple(k * Fraction(a) + Fraction(b) for a, b in zip(p, q)) for p in P_vertices for q in Q_vertices]


def subset_elementary(monomials, j, n):
    """e_j by explicit subset enumeration."""
    total = LaurentPoly.zero(n)
    for sub in itertools.combinations(monomials, j):
        e = tuple(sum(col) for col in zip(*sub)) if sub else (0,) * n
        total = total + LaurentPoly.monomial(e)
    return total


# acceptance bookkeeping: one line per criterion in the terminal summary
ACCEPTANCE = {}


@pytest.fixture
def record_criterion():
    def record(number, description, ok):
        ACCEPTANCE[number] = (description, ok)
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        description, ok = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {description}")
