"""Exact rational polytopes.

A :class:`Polytope` carries a vertex list and an inequality description.
Whichever one it was built from is authoritative; the other is derived on
first access (V->H by Fourier-Motzkin elimination of barycentric
coordinates, H->V by exhaustive basis search).  All arithmetic is in
:class:`fractions.Fraction` or int.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from . import lp
from .algebra import format_rational, grlex_key, parse_rational
from .errors import (
    DimensionMismatch,
    InfeasibleError,
    InvalidInput,
    UnboundedError,
)

__all__ = [
    "HRep",
    "Polytope",
    "canonicalize_vertices",
    "v_to_h",
    "vertex_enumeration",
    "dilate",
    "minkowski_sum",
    "lattice_points",
    "polytope_from_json",
    "polytope_to_json",
]


# ---------------------------------------------------------------------------
# small exact linear algebra


def _rref(rows, ncols):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [Fraction(v) / p for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(rows, ncols=None):
    rows = list(rows)
    if not rows:
        return 0
    if ncols is None:
        ncols = len(rows[0])
    return len(_rref(rows, ncols)[1])


def affine_rank(points):
    """Dimension of the affine hull; -1 for no points."""
    points = list(points)
    if not points:
        return -1
    p0 = points[0]
    diffs = [[a - b for a, b in zip(p, p0)] for p in points[1:]]
    if not diffs or not p0:
        return 0
    return rank(diffs, len(p0))


def solve_square(A, b):
    """Unique solution of A x = b, or None when A is singular."""
    d = len(A)
    rows, piv = _rref([list(a) + [bi] for a, bi in zip(A, b)], d)
    if len(piv) < d:
        return None
    return tuple(rows[i][-1] for i in range(d))


def _dot(a, x):
    return sum(ai * xi for ai, xi in zip(a, x))


def _integral_row(a, b):
    """Scale (a, b) to coprime integers, preserving the direction of a."""
    vals = [Fraction(v) for v in a] + [Fraction(b)]
    den = 1
    for v in vals:
        den = den * v.denominator // math.gcd(den, v.denominator)
    ints = [int(v * den) for v in vals]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints[:-1]), ints[-1]


def _as_point(p):
    return tuple(parse_rational(v) if not isinstance(v, Fraction) else v for v in p)


# ---------------------------------------------------------------------------
# H-representation


@dataclass(frozen=True)
class HRep:
    """``a . x <= b`` for each inequality, ``a . x == b`` for each equality.

    Rows are stored as coprime integer tuples.
    """

    n: int
    inequalities: tuple = ()
    equalities: tuple = ()

    @classmethod
    def build(cls, n, inequalities=(), equalities=()):
        ineq = []
        for a, b in inequalities:
            if len(a) != n:
                raise DimensionMismatch(f"inequality normal {a} has length {len(a)}, expected {n}")
            ineq.append(_integral_row(a, b))
        eq = []
        for a, b in equalities:
            if len(a) != n:
                raise DimensionMismatch(f"equality normal {a} has length {len(a)}, expected {n}")
            a, b = _integral_row(a, b)
            # sign convention: first nonzero coefficient positive
            lead = next((v for v in a if v), 0)
            if lead < 0:
                a, b = tuple(-v for v in a), -b
            eq.append((a, b))
        return cls(n, tuple(ineq), tuple(eq))

    @classmethod
    def infeasible(cls, n):
        return cls(n, (((0,) * n, -1),), ())

    def contains(self, x):
        for a, b in self.inequalities:
            if _dot(a, x) > b:
                return False
        for a, b in self.equalities:
            if _dot(a, x) != b:
                return False
        return True

    def scaled(self, k):
        return HRep(
            self.n,
            tuple((a, b * k) for a, b in self.inequalities),
            tuple((a, b * k) for a, b in self.equalities),
        )

    def translated(self, v):
        return HRep.build(
            self.n,
            [(a, b + _dot(a, v)) for a, b in self.inequalities],
            [(a, b + _dot(a, v)) for a, b in self.equalities],
        )

    def to_lp(self):
        A_ub = [a for a, _ in self.inequalities]
        b_ub = [b for _, b in self.inequalities]
        A_eq = [a for a, _ in self.equalities]
        b_eq = [b for _, b in self.equalities]
        return A_ub, b_ub, A_eq, b_eq


# ---------------------------------------------------------------------------
# V -> canonical V


def _unique_maximizers(points, directions):
    known = set()
    for d in directions:
        vals = [_dot(d, p) for p in points]
        top = max(vals)
        hits = [p for p, v in zip(points, vals) if v == top]
        if len(hits) == 1:
            known.add(hits[0])
    return known


def canonicalize_vertices(points):
    """Exactly the extreme points of ``conv(points)``.

    A point is dropped iff it is a convex combination of the remaining
    candidates (exact LP feasibility).  Unique maximisers of a few fixed
    linear functionals are vertices and skip the LP.
    """
    pts = sorted({_as_point(p) for p in points})
    if not pts:
        raise InvalidInput("cannot canonicalize an empty point list")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise DimensionMismatch("points of different lengths")
    if len(pts) <= 2:
        return tuple(pts)
    dirs = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        dirs.append(e)
        dirs.append([-v for v in e])
    dirs.append([1] * n)
    dirs.append([-1] * n)
    dirs.append([i + 1 for i in range(n)])
    dirs.append([-(i + 1) for i in range(n)])
    known = _unique_maximizers(pts, dirs)
    candidates = list(pts)
    for p in pts:
        if p in known:
            continue
        others = [q for q in candidates if q != p]
        if lp.in_convex_hull(p, others):
            candidates = others
    return tuple(sorted(candidates))


# ---------------------------------------------------------------------------
# V -> H


def v_to_h(vertices, n=None):
    """Irredundant H-representation of ``conv(vertices)``.

    The barycentric system ``x = sum l_i v_i, sum l_i = 1, l >= 0`` is first
    solved for as many ``l_i`` as possible; the remaining free ``l_i`` are
    removed one at a time by Fourier-Motzkin elimination.  After every step
    only facet-defining inequalities of the current projection are kept,
    decided exactly from the projected vertex images.
    """
    V = [_as_point(v) for v in vertices]
    if not V:
        if n is None:
            raise InvalidInput("n is required for an empty vertex list")
        return HRep.infeasible(n)
    n = len(V[0])
    N = len(V)

    # each row: lambda coefficients (N) | rhs as affine form in x (n coeffs + const)
    rows = []
    for c in range(n):
        rhs = [Fraction(0)] * (n + 1)
        rhs[c] = Fraction(1)
        rows.append([v[c] for v in V] + rhs)
    rows.append([Fraction(1)] * N + [Fraction(0)] * n + [Fraction(1)])
    red, pivots = _rref(rows, N)

    equalities = []
    pivot_rows = []
    for row in red:
        lam = row[:N]
        if any(lam):
            pivot_rows.append(row)
        else:
            # 0 = rhs(x)  ->  rhs_x . x = -rhs_const
            a = row[N:N + n]
            if any(a):
                equalities.append((a, -row[N + n]))
            elif row[N + n] != 0:
                raise AssertionError("inconsistent barycentric system")
    free = [j for j in range(N) if j not in pivots]

    # coordinates y = (x, lambda_free); inequalities a . y <= b
    ineqs = []
    for row, p in zip(pivot_rows, pivots):
        a = [-v for v in row[N:N + n]] + [row[f] for f in free]
        ineqs.append((a, row[N + n]))
    for k in range(len(free)):
        a = [Fraction(0)] * (n + len(free))
        a[n + k] = Fraction(-1)
        ineqs.append((a, Fraction(0)))
    images = [tuple(V[i]) + tuple(Fraction(int(i == f)) for f in free) for i in range(N)]

    ineqs = _facets_only(ineqs, images)
    for _ in free:
        t = len(images[0]) - 1
        pos = [(a, b) for a, b in ineqs if a[t] > 0]
        neg = [(a, b) for a, b in ineqs if a[t] < 0]
        new = [(a[:t], b) for a, b in ineqs if a[t] == 0]
        for ap, bp in pos:
            for an, bn in neg:
                fp, fn = -an[t], ap[t]
                a = [fp * u + fn * w for u, w in zip(ap[:t], an[:t])]
                new.append((a, fp * bp + fn * bn))
        images = [im[:t] for im in images]
        ineqs = _facets_only(new, images)

    return HRep.build(
        n,
        sorted(_integral_row(a, b) for a, b in ineqs),
        _reduced_equalities(equalities, n),
    )


def _reduced_equalities(eqs, n):
    rows, _ = _rref([list(a) + [b] for a, b in eqs], n)
    out = []
    for r in rows:
        if any(r[:n]):
            out.append((r[:n], r[n]))
        elif r[n] != 0:
            raise InfeasibleError("inconsistent equalities")
    return out


def _facets_only(ineqs, points):
    dim = affine_rank(points)
    kept = {}
    for a, b in ineqs:
        tight = []
        for i, p in enumerate(points):
            val = _dot(a, p)
            if val > b:
                raise AssertionError("elimination produced an invalid inequality")
            if val == b:
                tight.append(i)
        if not tight or len(tight) == len(points):
            continue
        key = frozenset(tight)
        if key in kept:
            continue
        if affine_rank(points[i] for i in tight) == dim - 1:
            kept[key] = (a, b)
    return list(kept.values())


# ---------------------------------------------------------------------------
# H -> V


def _coordinate_bounds(hrep):
    """Exact (min, max) per coordinate; raises if infeasible or unbounded."""
    A_ub, b_ub, A_eq, b_eq = hrep.to_lp()
    n = hrep.n
    bounds = []
    if n == 0:
        if not hrep.contains(()):
            raise InfeasibleError("H-representation is infeasible")
        return bounds
    for i in range(n):
        pair = []
        for sign in (1, -1):
            c = [0] * n
            c[i] = sign
            res = lp.linprog(c, A_ub, b_ub, A_eq, b_eq)
            if res.status == lp.INFEASIBLE:
                raise InfeasibleError("H-representation is infeasible")
            if res.status == lp.UNBOUNDED:
                raise UnboundedError(f"polyhedron is unbounded in coordinate {i}")
            pair.append(sign * res.value)
        bounds.append((pair[0], pair[1]))
    return bounds


def _split_implicit(hrep):
    """(equalities, inequalities) with implicit equalities moved over.

    One LP maximising a common slack settles the usual full-dimensional
    case; only when no strictly interior point exists is each row tested.
    """
    A_ub, b_ub, A_eq, b_eq = hrep.to_lp()
    eqs = list(hrep.equalities)
    rows = []
    for a, b in hrep.inequalities:
        if not any(a):
            if b < 0:
                raise InfeasibleError("constant inequality 0 <= negative")
            continue
        rows.append((a, b))
    n = hrep.n
    res = lp.linprog(
        [0] * n + [-1],
        [list(a) + [1] for a, _ in rows] + [[0] * n + [1]],
        [b for _, b in rows] + [1],
        [list(a) + [0] for a in A_eq],
        b_eq,
    )
    if res.status == lp.INFEASIBLE:
        raise InfeasibleError("H-representation is infeasible")
    if res.value < 0:
        return eqs, rows
    if res.value > 0:
        raise InfeasibleError("H-representation is infeasible")
    ineqs = []
    strict = set()
    for i, (a, b) in enumerate(rows):
        if i in strict:
            ineqs.append((a, b))
            continue
        res = lp.linprog(a, A_ub, b_ub, A_eq, b_eq)
        if res.status == lp.OPTIMAL and res.value == b:
            eqs.append((a, b))
        else:
            ineqs.append((a, b))
            if res.x is not None:
                # every row slack at this point is not an implicit equality
                strict.update(j for j, (aj, bj) in enumerate(rows) if _dot(aj, res.x) < bj)
    return eqs, ineqs


def canonicalize_hrep(hrep):
    """Move implicit equalities to the equality list and drop redundant rows."""
    eqs, ineqs = _split_implicit(hrep)
    # redundancy: drop a row if the rest already bound it
    kept = list(ineqs)
    for row in ineqs:
        rest = [r for r in kept if r != row]
        c = [-v for v in row[0]]
        res = lp.linprog(
            c, [r[0] for r in rest], [r[1] for r in rest],
            [e[0] for e in eqs], [e[1] for e in eqs],
        )
        if res.status == lp.OPTIMAL and -res.value <= row[1]:
            kept = rest
    n = hrep.n
    return HRep.build(n, sorted(kept), _reduced_equalities(eqs, n))


def vertex_enumeration(hrep, canonical=False, bounded=False):
    """All vertices of a bounded, feasible H-polytope.

    Implicit equalities are made explicit, the affine hull is parametrised,
    and every ``d``-subset of the inequalities (``d`` = dimension) is solved
    exactly; feasible solutions are the vertices.  Cost is O(C(m, d) d^3).
    Pass ``bounded=True`` when boundedness is already known, which skips
    the per-coordinate LPs.
    """
    n = hrep.n
    if not bounded:
        _coordinate_bounds(hrep)
    if not canonical:
        eqs, ineqs = _split_implicit(hrep)
        hrep = HRep.build(n, ineqs, _reduced_equalities(eqs, n))
    eq_rows, piv = _rref([list(a) + [b] for a, b in hrep.equalities], n)
    if any(not any(r[:n]) and r[n] != 0 for r in eq_rows):
        raise InfeasibleError("inconsistent equalities")
    eq_rows = [r for r in eq_rows if any(r[:n])]
    free = [j for j in range(n) if j not in piv]
    # x = x0 + sum_f t_f * B_f
    x0 = [Fraction(0)] * n
    for r, p in zip(eq_rows, piv):
        x0[p] = r[n]
    basis = []
    for f in free:
        col = [Fraction(0)] * n
        col[f] = Fraction(1)
        for r, p in zip(eq_rows, piv):
            col[p] = -r[f]
        basis.append(col)
    d = len(free)
    reduced = []
    for a, b in hrep.inequalities:
        coeffs = [_dot(a, col) for col in basis]
        reduced.append((coeffs, b - _dot(a, x0)))

    def lift(t):
        return tuple(x0[i] + sum(t[k] * basis[k][i] for k in range(d)) for i in range(n))

    if d == 0:
        return (lift(()),)
    found = set()
    m = len(reduced)
    # depth-first over row subsets, eliminating as rows are added so that any
    # subset containing a dependent row is cut off with its whole subtree
    stack = []

    def dfs(start):
        if len(stack) == d:
            t = [Fraction(0)] * d
            for p, vec, rhs in reversed(stack):
                t[p] = rhs - sum(vec[j] * t[j] for j in range(d) if j != p)
            if all(_dot(c, t) <= b for c, b in reduced):
                found.add(lift(t))
            return
        for i in range(start, m - (d - len(stack)) + 1):
            vec, rhs = list(reduced[i][0]), reduced[i][1]
            for p, pv, pr in stack:
                f = vec[p]
                if f:
                    vec = [a - f * b for a, b in zip(vec, pv)]
                    rhs -= f * pr
            p = next((j for j, a in enumerate(vec) if a), None)
            if p is None:
                continue
            lead = vec[p]
            stack.append((p, [a / lead for a in vec], rhs / lead))
            dfs(i + 1)
            stack.pop()

    dfs(0)
    if not found:
        raise UnboundedError("no vertices found: polyhedron contains a line")
    return tuple(sorted(found))


# ---------------------------------------------------------------------------
# the polytope value


class Polytope:
    """Immutable rational polytope in R^n.

    Build from points (``Polytope(points)``) or from an H-representation
    (``Polytope.from_hrep``).  The missing representation is computed once,
    under a lock, on first access.
    """

    def __init__(self, points=(), n=None, *, canonical=False):
        pts = [_as_point(p) for p in points]
        if n is None:
            if not pts:
                raise InvalidInput("n is required for the empty polytope")
            n = len(pts[0])
        if any(len(p) != n for p in pts):
            raise DimensionMismatch(f"all points must have length {n}")
        if pts and not canonical:
            pts = canonicalize_vertices(pts)
        self._n = n
        self._vertices = tuple(sorted(pts))
        self._hrep = None if pts else HRep.infeasible(n)
        self._box = None
        self._lock = threading.Lock()

    @classmethod
    def from_hrep(cls, hrep, box=None):
        """Polytope from inequalities; ``box`` is an optional known integer
        bounding box ``[(lo, hi), ...]`` that spares the LP bounds."""
        obj = cls.__new__(cls)
        obj._n = hrep.n
        obj._vertices = None
        obj._hrep = hrep
        obj._box = tuple(box) if box is not None else None
        obj._lock = threading.Lock()
        return obj

    @classmethod
    def empty(cls, n):
        return cls((), n)

    @property
    def n(self):
        return self._n

    @property
    def vertices(self):
        if self._vertices is None:
            with self._lock:
                if self._vertices is None:
                    try:
                        self._vertices = vertex_enumeration(
                            self._hrep, bounded=self._box is not None
                        )
                    except InfeasibleError:
                        self._vertices = ()
        return self._vertices

    @property
    def hrep(self):
        if self._hrep is None:
            with self._lock:
                if self._hrep is None:
                    self._hrep = v_to_h(self._vertices, self._n)
        return self._hrep

    @property
    def box(self):
        """Integer bounding box, one ``(lo, hi)`` pair per coordinate."""
        if self._box is None:
            verts = self.vertices
            if verts:
                box = tuple(
                    (math.floor(min(v[i] for v in verts)), math.ceil(max(v[i] for v in verts)))
                    for i in range(self._n)
                )
            else:
                box = tuple((0, -1) for _ in range(self._n))
            self._box = box
        return self._box

    @property
    def dim(self):
        return affine_rank(self.vertices)

    def is_empty(self):
        return not self.vertices

    def is_lattice(self):
        return all(v.denominator == 1 for p in self.vertices for v in p)

    def integer_vertices(self):
        if not self.is_lattice():
            raise InvalidInput("polytope has a non-integer vertex")
        return tuple(tuple(int(v) for v in p) for p in self.vertices)

    def contains(self, point):
        point = _as_point(point)
        if len(point) != self._n:
            raise DimensionMismatch(f"point has length {len(point)}, expected {self._n}")
        return self.hrep.contains(point)

    def lattice_points(self):
        return lattice_points(self)

    def dilate(self, k):
        return dilate(self, k)

    def translate(self, v):
        v = _as_point(v)
        if len(v) != self._n:
            raise DimensionMismatch("translation vector has the wrong length")
        out = Polytope(
            [tuple(a + b for a, b in zip(p, v)) for p in self.vertices], self._n, canonical=True
        )
        if self._hrep is not None and self.vertices:
            out._hrep = self._hrep.translated(v)
        return out

    def __add__(self, other):
        return minkowski_sum(self, other)

    def __eq__(self, other):
        if not isinstance(other, Polytope):
            return NotImplemented
        return self._n == other._n and set(self.vertices) == set(other.vertices)

    def __hash__(self):
        return hash((self._n, frozenset(self.vertices)))

    def __repr__(self):
        verts = ", ".join("(" + ", ".join(format_rational(c) for c in v) + ")" for v in self.vertices)
        return f"Polytope(n={self._n}, vertices=[{verts}])"


def dilate(P, k):
    if k < 0:
        raise InvalidInput(f"dilation factor must be nonnegative, got {k}")
    if k == 1:
        return P
    if P.is_empty():
        return Polytope.empty(P.n)
    if k == 0:
        return Polytope([(Fraction(0),) * P.n], canonical=True)
    out = Polytope([tuple(k * c for c in v) for v in P.vertices], P.n, canonical=True)
    if P._hrep is not None:
        out._hrep = P._hrep.scaled(k)
    return out


def minkowski_sum(P, Q):
    if P.n != Q.n:
        raise DimensionMismatch(f"ambient dimensions differ: {P.n} vs {Q.n}")
    if P.is_empty() or Q.is_empty():
        return Polytope.empty(P.n)
    if len(Q.vertices) == 1:
        return P.translate(Q.vertices[0])
    if len(P.vertices) == 1:
        return Q.translate(P.vertices[0])
    sums = {tuple(a + b for a, b in zip(p, q)) for p in P.vertices for q in Q.vertices}
    return Polytope(sums, P.n)


def lattice_points(P):
    """Integer points of ``P`` in graded-lex order.

    Scans the integer bounding box coordinate by coordinate; each
    coordinate's range is cut by every constraint, using the box to bound
    the not-yet-fixed coordinates.
    """
    n = P.n
    if P._vertices is not None and not P._vertices:
        return []
    hrep = P.hrep
    if P._box is None and P._vertices is None:
        try:
            bounds = _coordinate_bounds(hrep)
        except InfeasibleError:
            return []
        P._box = tuple((math.ceil(lo), math.floor(hi)) for lo, hi in bounds)
    box = P.box
    if any(lo > hi for lo, hi in box):
        return []
    rows = [(list(a), b) for a, b in hrep.inequalities]
    for a, b in hrep.equalities:
        rows.append((list(a), b))
        rows.append(([-v for v in a], -b))
    # tail_min[r][t]: minimum over the box of sum_{u > t} a_u x_u
    tail_min = []
    for a, _ in rows:
        acc = [0] * (n + 1)
        for u in range(n - 1, -1, -1):
            lo, hi = box[u]
            acc[u] = acc[u + 1] + min(a[u] * lo, a[u] * hi)
        tail_min.append(acc)
    out = []
    x = [0] * n
    partial = [0] * len(rows)

    def rec(t):
        if t == n:
            if all(partial[r] <= rows[r][1] for r in range(len(rows))):
                out.append(tuple(x))
            return
        lo, hi = box[t]
        for r, (a, b) in enumerate(rows):
            c = a[t]
            slack = b - partial[r] - tail_min[r][t + 1]
            if c > 0:
                hi = min(hi, slack // c)
            elif c < 0:
                lo = max(lo, -(slack // -c))
            elif slack < 0:
                return
        for val in range(lo, hi + 1):
            x[t] = val
            for r, (a, _) in enumerate(rows):
                partial[r] += a[t] * val
            rec(t + 1)
            for r, (a, _) in enumerate(rows):
                partial[r] -= a[t] * val
        x[t] = 0

    rec(0)
    out.sort(key=grlex_key)
    return out


# ---------------------------------------------------------------------------
# JSON


def polytope_from_json(obj):
    """``{"dim": n, "vertices": [[...], ...]}`` with int or "p/q" entries."""
    if not isinstance(obj, dict):
        raise InvalidInput("polytope JSON must be an object")
    if "dim" not in obj:
        raise InvalidInput("polytope JSON: missing field 'dim'")
    if "vertices" not in obj:
        raise InvalidInput("polytope JSON: missing field 'vertices'")
    n = obj["dim"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise InvalidInput(f"polytope JSON: 'dim' must be a nonnegative integer, got {n!r}")
    verts = obj["vertices"]
    if not isinstance(verts, list):
        raise InvalidInput("polytope JSON: 'vertices' must be a list")
    pts = []
    for i, v in enumerate(verts):
        if not isinstance(v, list) or len(v) != n:
            raise InvalidInput(f"polytope JSON: vertices[{i}] must be a list of length {n}")
        try:
            pts.append(tuple(parse_rational(c) for c in v))
        except InvalidInput as exc:
            raise InvalidInput(f"polytope JSON: vertices[{i}]: {exc}") from None
    return Polytope(pts, n)


def polytope_to_json(P):
    def enc(c):
        return int(c) if c.denominator == 1 else format_rational(c)

    return {"dim": P.n, "vertices": [[enc(c) for c in v] for v in P.vertices]}
