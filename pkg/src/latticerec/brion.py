"""Vertex tangent cones and an exact check of Brion's identity.

The generating function of a simplicial lattice cone with apex a and
primitive generators g_1..g_d is

    x^a * (sum of x^m over lattice points m of the half-open parallelepiped
           {sum l_i g_i : 0 <= l_i < 1}) / prod_i (1 - x^{g_i})

Brion's identity sigma_P = sum_v sigma_{K_v} is checked after clearing all
denominators, which turns it into an equality of Laurent polynomials.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import lp
from .algebra import LaurentPoly
from .errors import InvalidInput, UnsupportedInput
from .polytope import _rref, rank
from .transform import integer_point_transform

__all__ = [
    "PointedCone",
    "RationalFn",
    "tangent_cone",
    "cone_transform",
    "brion_check",
    "brion_terms",
    "primitive",
    "parallelepiped_points",
    "series_expansion",
]


def primitive(v):
    g = 0
    for c in v:
        g = math.gcd(g, int(c))
    if g == 0:
        raise InvalidInput("zero vector has no primitive direction")
    return tuple(int(c) // g for c in v)


def is_pointed(generators):
    """No nonzero nonnegative combination of the generators is zero (exact LP)."""
    if not generators:
        return True
    n = len(generators[0])
    A_eq = [[g[i] for g in generators] for i in range(n)] + [[1] * len(generators)]
    b_eq = [0] * n + [1]
    return lp.feasible_point(A_eq=A_eq, b_eq=b_eq, nvars=len(generators), nonneg=True) is None


@dataclass(frozen=True)
class PointedCone:
    apex: tuple
    generators: tuple

    def __post_init__(self):
        apex = tuple(int(c) for c in self.apex)
        gens = tuple(tuple(int(c) for c in g) for g in self.generators)
        for g in gens:
            if len(g) != len(apex):
                raise InvalidInput(f"generator {g} has the wrong length")
            if primitive(g) != g:
                raise InvalidInput(f"generator {g} is not primitive")
        if len(set(gens)) != len(gens):
            raise InvalidInput("generators must be pairwise distinct")
        if not is_pointed(gens):
            raise InvalidInput("cone is not pointed")
        object.__setattr__(self, "apex", apex)
        object.__setattr__(self, "generators", gens)

    @property
    def n(self):
        return len(self.apex)

    def is_simplicial(self):
        return rank(self.generators, self.n) == len(self.generators) if self.generators else True


@dataclass(frozen=True)
class RationalFn:
    """numerator / prod_g (1 - x^g)."""

    numerator: LaurentPoly
    denominator_factors: tuple

    def __post_init__(self):
        facs = tuple(tuple(g) for g in self.denominator_factors)
        if any(not any(g) for g in facs):
            raise InvalidInput("denominator factor 1 - x^0 is zero")
        object.__setattr__(self, "denominator_factors", facs)

    @property
    def n(self):
        return self.numerator.n

    def denominator(self):
        return _denominator(self.denominator_factors, self.n)

    def __eq__(self, other):
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.numerator * other.denominator() == other.numerator * self.denominator()

    def __hash__(self):
        raise TypeError("RationalFn equality is cross-multiplicative; values are unhashable")


def _denominator(factors, n):
    out = LaurentPoly.one(n)
    one = LaurentPoly.one(n)
    for g in factors:
        out = out * (one - LaurentPoly.monomial(g))
    return out


def _edges_at(P, v):
    """Vertices adjacent to v: the smallest face containing both has no other vertex."""
    hrep = P.hrep
    verts = P.vertices

    def tight(p):
        return frozenset(i for i, (a, b) in enumerate(hrep.inequalities)
                         if sum(x * y for x, y in zip(a, p)) == b)

    tights = {p: tight(p) for p in verts}
    out = []
    for w in verts:
        if w == v:
            continue
        common = tights[v] & tights[w]
        face = [p for p in verts if tights[p] >= common]
        if len(face) == 2:
            out.append(w)
    return out


def tangent_cone(P, v):
    """Apex v with the primitive edge directions of P at v as generators."""
    v = tuple(Fraction(c) for c in v)
    if v not in P.vertices:
        raise InvalidInput(f"{v} is not a vertex of P")
    if not P.is_lattice():
        raise InvalidInput("tangent cones are built for lattice polytopes only")
    gens = sorted(primitive(tuple(b - a for a, b in zip(v, w))) for w in _edges_at(P, v))
    return PointedCone(tuple(int(c) for c in v), tuple(gens))


def parallelepiped_points(generators, n):
    """Lattice points of {sum l_i g_i : 0 <= l_i < 1} for independent g_i.

    The generators may span a proper subspace; lambda is recovered from a
    full-rank row subset and the remaining coordinates are checked.
    """
    gens = [tuple(g) for g in generators]
    d = len(gens)
    if d == 0:
        return [(0,) * n]
    if rank(gens, n) != d:
        raise UnsupportedInput("generators are linearly dependent (cone is not simplicial)")
    # rows of G (n x d) forming an invertible d x d block
    G = [[g[i] for g in gens] for i in range(n)]
    _, rows = _rref([list(col) for col in zip(*G)], n)
    block = [[Fraction(G[i][j]) for j in range(d)] for i in rows]
    inv = _inverse(block)
    lo = [sum(min(0, g[i]) for g in gens) for i in range(n)]
    hi = [sum(max(0, g[i]) for g in gens) for i in range(n)]
    out = []
    for m in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        sub = [m[i] for i in rows]
        lam = [sum(inv[j][k] * sub[k] for k in range(d)) for j in range(d)]
        if not all(0 <= x < 1 for x in lam):
            continue
        if all(sum(lam[j] * G[i][j] for j in range(d)) == m[i] for i in range(n)):
            out.append(tuple(m))
    return out


def _inverse(M):
    d = len(M)
    aug = [row + [Fraction(int(i == j)) for j in range(d)] for i, row in enumerate(M)]
    red, piv = _rref(aug, d)
    if len(piv) < d:
        raise UnsupportedInput("singular generator block")
    return [row[d:] for row in red]


def cone_transform(cone):
    if not cone.is_simplicial():
        raise UnsupportedInput(
            f"cone at {cone.apex} has {len(cone.generators)} generators that are not "
            "linearly independent; only simplicial cones are supported"
        )
    pts = parallelepiped_points(cone.generators, cone.n)
    num = LaurentPoly({m: 1 for m in pts}, cone.n).shift(cone.apex)
    return RationalFn(num, cone.generators)


def brion_terms(P):
    """[(vertex, RationalFn of its tangent cone)] for every vertex of P."""
    if P.is_empty():
        raise InvalidInput("P is empty")
    out = []
    dim = P.dim
    for v in P.integer_vertices():
        cone = tangent_cone(P, v)
        if len(cone.generators) != dim:
            raise UnsupportedInput(
                f"vertex {v} has {len(cone.generators)} edges in a {dim}-dimensional "
                "polytope; its tangent cone is not simplicial"
            )
        out.append((v, cone_transform(cone)))
    return out


def brion_check(P, terms=None):
    """sigma_P * prod_v D_v == sum_v N_v * prod_{w != v} D_w, exactly."""
    if terms is None:
        terms = brion_terms(P)
    n = P.n
    dens = [t.denominator() for _, t in terms]
    full = LaurentPoly.one(n)
    for d in dens:
        full = full * d
    lhs = integer_point_transform(P) * full
    rhs = LaurentPoly.zero(n)
    for i, (_, t) in enumerate(terms):
        others = LaurentPoly.one(n)
        for j, d in enumerate(dens):
            if j != i:
                others = others * d
        rhs = rhs + t.numerator * others
    return lhs == rhs


def series_expansion(rf, grading, bound):
    """Terms x^m of numerator * prod 1/(1 - x^g) with grading . m <= bound.

    Each factor is expanded as a truncated geometric series; requires
    grading . g > 0 for every denominator factor.
    """
    n = rf.n

    def deg(e):
        return sum(a * b for a, b in zip(grading, e))

    for g in rf.denominator_factors:
        if deg(g) <= 0:
            raise InvalidInput(f"grading is not positive on generator {g}")
    result = rf.numerator
    for g in rf.denominator_factors:
        geo = {}
        lowest = min((deg(e) for e in result.support()), default=0)
        k = 0
        while lowest + k * deg(g) <= bound:
            geo[tuple(k * c for c in g)] = 1
            k += 1
        result = result * LaurentPoly(geo, n)
        result = LaurentPoly({e: c for e, c in result.terms() if deg(e) <= bound}, n)
    return result
