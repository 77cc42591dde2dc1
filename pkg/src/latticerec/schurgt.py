"""Skew Schur polynomials through Gelfand-Tsetlin polytopes.

Layout of a pattern for a skew shape lam/mu with entries in [n]: n+1 rows
of n entries each, row 1 = lam written in increasing order, row n+1 = mu
in increasing order.  Row i (1-based) is the shape occupied by entries
<= n+1-i, so consecutive rows interlace as

    x[i+1][j] <= x[i][j] <= x[i+1][j+1].

The weight of a pattern is the vector of consecutive row-sum differences;
its i-th entry counts the cells holding n+1-i.  Skew Schur polynomials
are symmetric, so summing x^weight over patterns gives the same
polynomial as summing x^content over tableaux.

Only rows 2..n are free; the GT polytope lives in R^{(n-1)n}.
"""

from __future__ import annotations

import itertools
import warnings
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import LaurentPoly, elementary_symmetric, grlex_key
from .errors import InvalidInput, UnsupportedInput, VerificationError
from .polytope import HRep, Polytope, dilate, lattice_points, minkowski_sum
from .transform import RecursionCertificate, dropped_root_residuals

__all__ = [
    "as_partition",
    "SkewShape",
    "GTPattern",
    "gt_polytope",
    "pattern_from_point",
    "point_from_pattern",
    "pattern_weight",
    "gt_lattice_patterns",
    "ssyt_enumerate",
    "tableau_content",
    "tableau_to_pattern",
    "schur_polynomial",
    "schur_via_gt",
    "schur_via_ssyt",
    "kostka",
    "dominates",
    "conjecture_W",
    "gt_vertices",
    "vertex_weights",
    "CounterexampleReport",
    "counterexample_report",
    "corollary_r",
    "gt_minkowski_check",
    "schur_recursion_check",
    "all_skew_shapes",
]


def as_partition(parts, n):
    """Validate a partition and pad it with zeros to length n."""
    parts = list(parts)
    for p in parts:
        if isinstance(p, bool) or not isinstance(p, int) or p < 0:
            raise InvalidInput(f"partition entries must be nonnegative integers, got {parts}")
    while len(parts) > n and parts[-1] == 0:
        parts.pop()
    if len(parts) > n:
        raise InvalidInput(f"partition {parts} has more than n={n} nonzero parts")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise InvalidInput(f"partition {parts} is not weakly decreasing")
    return tuple(parts) + (0,) * (n - len(parts))


@dataclass(frozen=True)
class SkewShape:
    lam: tuple
    mu: tuple
    n: int

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise InvalidInput(f"n must be a positive integer, got {self.n!r}")
        lam = as_partition(self.lam, self.n)
        mu = as_partition(self.mu if self.mu is not None else (), self.n)
        bad = [i + 1 for i in range(self.n) if mu[i] > lam[i]]
        if bad:
            raise InvalidInput(f"mu={mu} is not contained in lam={lam} (row {bad[0]})")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)

    @property
    def size(self):
        return sum(self.lam) - sum(self.mu)

    def cells(self):
        return [(i + 1, j) for i in range(self.n) for j in range(self.mu[i] + 1, self.lam[i] + 1)]

    def to_json(self):
        return {"lambda": list(self.lam), "mu": list(self.mu), "n": self.n}


# ---------------------------------------------------------------------------
# patterns


@dataclass(frozen=True)
class GTPattern:
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows) - 1
        if n < 1 or any(len(r) != n for r in rows):
            raise InvalidInput("a pattern has n+1 rows of n entries")
        for i in range(n):
            up, down = rows[i], rows[i + 1]
            for j in range(n):
                if down[j] > up[j] or (j + 1 < n and up[j] > down[j + 1]):
                    raise InvalidInput(f"rows {i + 1} and {i + 2} do not interlace: {up} / {down}")
        if any(v < 0 for r in rows for v in r):
            raise InvalidInput("pattern entries must be nonnegative")

    @property
    def n(self):
        return len(self.rows) - 1

    def weight(self):
        return pattern_weight(self)

    def is_integral(self):
        return all(Fraction(v).denominator == 1 for r in self.rows for v in r)


def pattern_weight(p):
    rows = p.rows if isinstance(p, GTPattern) else p
    out = []
    for up, down in zip(rows, rows[1:]):
        w = sum(up) - sum(down)
        out.append(int(w) if Fraction(w).denominator == 1 else Fraction(w))
    return tuple(out)


def _var(i, j, n):
    # free entry x[i][j], 2 <= i <= n, 1 <= j <= n
    return (i - 2) * n + (j - 1)


def gt_polytope(shape):
    """H-description of the GT polytope in the free rows 2..n."""
    n = shape.n
    N = (n - 1) * n
    top = tuple(reversed(shape.lam))
    bottom = tuple(reversed(shape.mu))

    def entry(i, j):
        # ("var", index) or ("const", value)
        if i == 1:
            return ("const", top[j - 1])
        if i == n + 1:
            return ("const", bottom[j - 1])
        return ("var", _var(i, j, n))

    ineqs = []

    def le(lhs, rhs):
        a = [0] * N
        b = 0
        for side, sign in ((lhs, 1), (rhs, -1)):
            kind, val = side
            if kind == "var":
                a[val] += sign
            else:
                b -= sign * val
        if not any(a):
            if b < 0:
                raise InvalidInput(f"shape {shape.lam}/{shape.mu} violates interlacing for n={n}")
            return
        ineqs.append((a, b))

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            le(entry(i + 1, j), entry(i, j))
            if j < n:
                le(entry(i, j), entry(i + 1, j + 1))
    box = [(bottom[j - 1], top[j - 1]) for i in range(2, n + 1) for j in range(1, n + 1)]
    return Polytope.from_hrep(HRep.build(N, ineqs), box=box)


def pattern_from_point(shape, point):
    n = shape.n
    rows = [tuple(reversed(shape.lam))]
    for i in range(2, n + 1):
        rows.append(tuple(point[_var(i, j, n)] for j in range(1, n + 1)))
    rows.append(tuple(reversed(shape.mu)))
    return GTPattern(tuple(rows))


def point_from_pattern(p):
    return tuple(v for row in p.rows[1:-1] for v in row)


def gt_lattice_patterns(shape):
    return [pattern_from_point(shape, m) for m in lattice_points(gt_polytope(shape))]


# ---------------------------------------------------------------------------
# tableaux (independent oracle)


def ssyt_enumerate(shape):
    """All semistandard fillings of ``shape`` with entries in [n].

    A tableau is a tuple of rows; row i lists the entries in columns
    mu_i+1 .. lam_i.
    """
    n = shape.n
    cells = shape.cells()
    filling = {}
    out = []

    def rec(idx):
        if idx == len(cells):
            out.append(tuple(
                tuple(filling[i + 1, j] for j in range(shape.mu[i] + 1, shape.lam[i] + 1))
                for i in range(n)
            ))
            return
        i, j = cells[idx]
        lo = 1
        if (i, j - 1) in filling:
            lo = max(lo, filling[i, j - 1])
        if i > 1 and shape.mu[i - 2] < j <= shape.lam[i - 2]:
            lo = max(lo, filling[i - 1, j] + 1)
        for v in range(lo, n + 1):
            filling[i, j] = v
            rec(idx + 1)
        filling.pop((i, j), None)

    rec(0)
    return out


def tableau_content(T, n):
    """(number of 1s, number of 2s, ..., number of ns)."""
    c = Counter(v for row in T for v in row)
    return tuple(c.get(i, 0) for i in range(1, n + 1))


def tableau_to_pattern(T, shape):
    n = shape.n
    rows = []
    for i in range(1, n + 2):
        bound = n + 1 - i
        nu = [shape.mu[r] + sum(1 for v in T[r] if v <= bound) for r in range(n)]
        rows.append(tuple(reversed(nu)))
    return GTPattern(tuple(rows))


def schur_via_ssyt(shape):
    terms = Counter(tableau_content(T, shape.n) for T in ssyt_enumerate(shape))
    return LaurentPoly(terms, shape.n)


def schur_via_gt(shape):
    terms = Counter(p.weight() for p in gt_lattice_patterns(shape))
    return LaurentPoly(terms, shape.n)


def schur_polynomial(shape, check=True):
    """Skew Schur polynomial from GT lattice points, cross-checked by SSYT."""
    s = schur_via_gt(shape)
    if check:
        oracle = schur_via_ssyt(shape)
        if s != oracle:
            raise VerificationError(
                f"GT and SSYT Schur polynomials differ for {shape.lam}/{shape.mu}",
                difference=(s - oracle).render(),
            )
    return s


def kostka(shape, w):
    w = tuple(w)
    if len(w) != shape.n:
        raise InvalidInput(f"weight {w} has length {len(w)}, expected {shape.n}")
    return schur_polynomial(shape).coefficient(w)


def dominates(a, b):
    """a dominates b: equal totals and every prefix sum of a >= that of b."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise InvalidInput("dominance compares vectors of equal length")
    if sum(a) != sum(b):
        return False
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa < sb:
            return False
    return True


def _sorted_desc(w):
    return tuple(sorted(w, reverse=True))


def conjecture_W(shape):
    """Weights w with K_{shape,w} > 0 whose sorted form dominates sorted(lam - mu)."""
    target = _sorted_desc(a - b for a, b in zip(shape.lam, shape.mu))
    s = schur_polynomial(shape)
    return sorted(
        (w for w, c in s.terms() if c > 0 and dominates(_sorted_desc(w), target)),
        key=grlex_key,
    )


def gt_vertices(shape):
    P = gt_polytope(shape)
    return [pattern_from_point(shape, v) for v in P.vertices]


def vertex_weights(shape, integral_only=False):
    """Weights of all GT vertices, with multiplicity.

    Non-integral vertices are reported with a warning; their (possibly
    rational) weights are kept unless ``integral_only``.
    """
    out = []
    for p in gt_vertices(shape):
        if not p.is_integral():
            warnings.warn(f"non-integral GT vertex {p.rows} for {shape.lam}/{shape.mu}", stacklevel=2)
            if integral_only:
                continue
        out.append(p.weight())
    return out


@dataclass
class CounterexampleReport:
    shape: SkewShape
    W: list
    vertex_weights: list
    vertex_values: list
    all_vertices_integral: bool
    missing: list = field(default_factory=list)

    @property
    def refuted(self):
        """True when some w in W is not a vertex weight, so the conjectured
        polynomial does not divide the vertex polynomial."""
        return bool(self.missing)

    def to_json(self):
        return {
            "shape": self.shape.to_json(),
            "W": [list(w) for w in self.W],
            "vertex_weights": [[_num(c) for c in w] for w in self.vertex_weights],
            "vertex_coordinate_values": [_num(v) for v in self.vertex_values],
            "all_vertices_integral": self.all_vertices_integral,
            "missing_from_vertex_weights": [list(w) for w in self.missing],
            "refuted": self.refuted,
        }


def _num(v):
    v = Fraction(v)
    return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def counterexample_report(shape):
    verts = gt_vertices(shape)
    integral = all(p.is_integral() for p in verts)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        vw = vertex_weights(shape, integral_only=True)
    values = sorted({Fraction(v) for p in verts for row in p.rows for v in row})
    W = conjecture_W(shape)
    have = set(vw)
    return CounterexampleReport(
        shape=shape,
        W=W,
        vertex_weights=sorted(vw, key=grlex_key),
        vertex_values=values,
        all_vertices_integral=integral,
        missing=[w for w in W if w not in have],
    )


# ---------------------------------------------------------------------------
# families kappa + l*lam / nu + l*mu


def _vec_add(a, b, k=1):
    return tuple(x + k * y for x, y in zip(a, b))


def _family_shape(kappa, lam, mu, nu, n, l):
    return SkewShape(_vec_add(kappa, lam, l), _vec_add(nu, mu, l), n)


def _contained(kappa, lam, mu, nu, r):
    return all(k + r * a >= v + r * b for k, a, b, v in zip(kappa, lam, mu, nu))


def _common_sort(f, g, r):
    # a single permutation sorts both f and r*f + g
    h = [r * a + b for a, b in zip(f, g)]
    return all(h[i] <= h[j] for i in range(len(f)) for j in range(len(f)) if f[i] < f[j])


def _normalize_family(kappa, lam, mu, nu, n):
    kappa, lam, mu, nu = (as_partition(p, n) for p in (kappa, lam, mu, nu))
    SkewShape(lam, mu, n)
    return kappa, lam, mu, nu


def corollary_r(kappa, lam, mu, nu, n):
    """Smallest r >= 0 with kappa+r*lam containing nu+r*mu and with one
    permutation sorting both f = (lam, mu) and r*f + (kappa, nu)."""
    kappa, lam, mu, nu = _normalize_family(kappa, lam, mu, nu, n)
    f, g = lam + mu, kappa + nu
    bound = max([0] + [g[i] - g[j] for i in range(2 * n) for j in range(2 * n) if f[i] < f[j]])
    bound = max(bound, max([0] + [v - k for k, v in zip(kappa, nu)])) + 1
    for r in range(bound + 1):
        if _contained(kappa, lam, mu, nu, r) and _common_sort(f, g, r):
            return r
    raise InvalidInput("no r makes kappa + r*lam contain nu + r*mu")


def _check_r(kappa, lam, mu, nu, n, r):
    if r < 0:
        raise InvalidInput("r must be nonnegative")
    if not _contained(kappa, lam, mu, nu, r):
        raise InvalidInput(f"kappa + {r}*lam does not contain nu + {r}*mu")
    if not _common_sort(lam + mu, kappa + nu, r):
        raise InvalidInput(f"r={r} is too small: (lam, mu) and r*(lam, mu) + (kappa, nu) sort differently")


def gt_minkowski_check(kappa, lam, mu, nu, n, r, l):
    """GT(kappa+l*lam / nu+l*mu) == GT(kappa+r*lam / nu+r*mu) + (l-r) GT(lam/mu)."""
    kappa, lam, mu, nu = _normalize_family(kappa, lam, mu, nu, n)
    _check_r(kappa, lam, mu, nu, n, r)
    if l < r:
        raise InvalidInput(f"l={l} must be at least r={r}")
    direct = gt_polytope(_family_shape(kappa, lam, mu, nu, n, l))
    base = gt_polytope(_family_shape(kappa, lam, mu, nu, n, r))
    step = gt_polytope(SkewShape(lam, mu, n))
    summed = minkowski_sum(Polytope(base.vertices, base.n, canonical=True),
                           dilate(Polytope(step.vertices, step.n, canonical=True), l - r))
    return set(direct.vertices) == set(summed.vertices)


def schur_recursion_check(kappa, lam, mu, nu, n, l_max, r=None):
    """Check that s_{kappa+l*lam / nu+l*mu}, l >= r, satisfies the recursion
    with roots x^{w(v)} over the vertices v of GT(lam/mu).

    Also checks that the vertex-weight multiset sits inside the multiset of
    all tableau weights of lam/mu (the all-tableaux polynomial is then a
    multiple of the vertex polynomial).  When the vertex weights are
    distinct, dropped-root residuals are attached as in the polytope case.
    """
    kappa, lam, mu, nu = _normalize_family(kappa, lam, mu, nu, n)
    if r is None:
        r = corollary_r(kappa, lam, mu, nu, n)
    else:
        _check_r(kappa, lam, mu, nu, n, r)
    base = SkewShape(lam, mu, n)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        weights = vertex_weights(base)
    if any(isinstance(c, Fraction) for w in weights for c in w):
        raise UnsupportedInput("GT(lam/mu) has a vertex with non-integral weight")
    d = len(weights)
    if l_max < r + d:
        raise InvalidInput(f"l_max must be at least r + |V| = {r + d}")
    coeffs = [elementary_symmetric(weights, j, n) * (-1) ** j for j in range(d + 1)]
    seq = [schur_polynomial(_family_shape(kappa, lam, mu, nu, n, l)) for l in range(r, l_max + 1)]
    for k in range(len(seq) - d):
        total = LaurentPoly.zero(n)
        for j, c in enumerate(coeffs):
            total = total + c * seq[k + d - j]
        if not total.is_zero():
            raise VerificationError(
                f"Schur recursion fails at l={r + k}", l=r + k, difference=total.render()
            )
    tableau_weights = schur_polynomial(base)
    counts = Counter(weights)
    contained = all(tableau_weights.coefficient(w) >= c for w, c in counts.items())
    if not contained:
        raise VerificationError("a vertex weight occurs more often than its Kostka number")
    residuals = {}
    minimal = False
    if len(counts) == d and len(seq) >= 2 * d:
        residuals = dropped_root_residuals(seq, weights, n)
        minimal = all(not p.is_zero() for p in residuals.values())
    return RecursionCertificate(
        char_poly_coeffs=coeffs,
        k_range=(r, l_max),
        minimality_residuals=residuals,
        minimal=minimal,
        notes={
            "r": r,
            "vertex_weights": [list(w) for w in sorted(weights, key=grlex_key)],
            "vertex_factors_divide_tableau_factors": contained,
        },
    )


def all_skew_shapes(max_size, n):
    """Every (lam, mu) with |lam| <= max_size, at most n parts, mu inside lam."""
    def partitions(total, parts, cap):
        if parts == 0:
            if total == 0:
                yield ()
            return
        for first in range(min(total, cap), -1, -1):
            for rest in partitions(total - first, parts - 1, first):
                yield (first,) + rest

    lams = [p for s in range(max_size + 1) for p in partitions(s, n, s)]
    for lam in lams:
        for mu in itertools.product(*(range(x + 1) for x in lam)):
            if all(a >= b for a, b in zip(mu, mu[1:])):
                yield SkewShape(lam, mu, n)
