"""Integer point transforms of dilates and the recursion they satisfy.

For a lattice polytope P with vertices v_1..v_r and any polytope Q, the
sequence a_k = sigma(kP + Q) satisfies

    a_{k+r} = sum over nonempty I of (-1)^{1+|I|} x^{sum_{i in I} v_i} a_{k+r-|I|}

whose characteristic polynomial is prod_v (X - x^v).  This module checks
that identity exactly, decides whether the product is the minimal
annihilating polynomial, checks the underlying indicator-function identity
pointwise, and pushes everything forward along integer linear maps.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import LaurentPoly, elementary_symmetric, format_rational, grlex_key
from .errors import DimensionMismatch, InvalidInput, VerificationError
from .polytope import dilate, lattice_points, minkowski_sum

__all__ = [
    "RecursionCertificate",
    "LatticeMap",
    "integer_point_transform",
    "transform_sequence",
    "char_poly",
    "verify_recursion",
    "minimality_residuals",
    "dropped_root_residuals",
    "indicator_recursion_check",
    "specialize",
    "verify_specialized_recursion",
    "ehrhart_sequence",
    "annihilating_power",
    "vertex_key",
]


def vertex_key(v):
    return ",".join(format_rational(c) for c in v)


@dataclass
class RecursionCertificate:
    """Outcome of an exact recursion check.

    ``char_poly_coeffs`` lists the coefficients of the characteristic
    polynomial from X^r down to X^0.  ``minimality_residuals`` maps each
    root's vertex to the residual left when that root's factor is dropped.
    """

    char_poly_coeffs: list
    k_range: tuple
    minimality_residuals: dict = field(default_factory=dict)
    minimal: bool = False
    verified: bool = True
    notes: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "verified": self.verified,
            "k_range": list(self.k_range),
            "minimal": self.minimal,
            "char_poly": [c.render() for c in self.char_poly_coeffs],
            "residuals": {
                vertex_key(v): p.render()
                for v, p in sorted(self.minimality_residuals.items(), key=lambda t: grlex_key(t[0]))
            },
            **({"notes": self.notes} if self.notes else {}),
        }


def integer_point_transform(P):
    """Sum of x^m over the lattice points m of P (zero for the empty set)."""
    return LaurentPoly({m: 1 for m in lattice_points(P)}, P.n)


def _check_pair(P, Q):
    if Q.n != P.n:
        raise DimensionMismatch(f"P lives in R^{P.n} but Q in R^{Q.n}")
    return P.integer_vertices()


def transform_sequence(P, Q, count):
    """[sigma(kP + Q) for k in range(count)]."""
    return [integer_point_transform(minkowski_sum(dilate(P, k), Q)) for k in range(count)]


def char_poly(P):
    """Coefficients of prod_{v in V(P)} (X - x^v), leading 1 first."""
    verts = P.integer_vertices()
    r = len(verts)
    return [elementary_symmetric(verts, j, P.n) * (-1) ** j for j in range(r + 1)]


def _subset_monomial_sums(verts, n):
    # group[j] = sum over |I| = j of x^{sum_{i in I} v_i}, by direct subset walk
    group = [LaurentPoly.one(n)] + [LaurentPoly.zero(n) for _ in verts]
    for size in range(1, len(verts) + 1):
        terms = {}
        for subset in itertools.combinations(verts, size):
            e = tuple(sum(c) for c in zip(*subset))
            terms[e] = terms.get(e, 0) + 1
        group[size] = LaurentPoly(terms, n)
    return group


def verify_recursion(P, Q, k_max, sequence=None):
    """Check the vertex recursion for sigma(kP+Q), k = 0..k_max, exactly.

    Also computes the minimality residuals, so the returned certificate
    says whether prod (X - x^v) is the minimal polynomial of the sequence.
    Raises VerificationError (with ``k`` and ``difference``) if the
    identity fails.
    """
    if k_max < 0:
        raise InvalidInput("k_max must be nonnegative")
    verts = _check_pair(P, Q)
    n, r = P.n, len(verts)
    if r == 0:
        raise InvalidInput("P is empty")
    need = max(k_max + r + 1, 2 * r)
    seq = list(sequence) if sequence is not None else []
    if len(seq) < need:
        seq = transform_sequence(P, Q, need)
    group = _subset_monomial_sums(verts, n)
    for k in range(k_max + 1):
        rhs = LaurentPoly.zero(n)
        for j in range(1, r + 1):
            term = group[j] * seq[k + r - j]
            rhs = rhs + term if j % 2 else rhs - term
        lhs = seq[k + r]
        if lhs != rhs:
            raise VerificationError(
                f"recursion fails at k={k}", k=k, difference=(lhs - rhs).render()
            )
    residuals = minimality_residuals(P, Q, sequence=seq)
    return RecursionCertificate(
        char_poly_coeffs=char_poly(P),
        k_range=(0, k_max),
        minimality_residuals=residuals,
        minimal=all(not p.is_zero() for p in residuals.values()),
    )


def minimality_residuals(P, Q, sequence=None):
    """Residual of the recursion with one root's factor removed, per vertex.

    With distinct roots x^v, a_k = sum_v alpha_v x^{kv}, and dropping the
    factor for u leaves alpha_u x^{ku} prod_{w != u}(x^u - x^w): it vanishes
    for one k iff it vanishes for all k, iff the smaller product still
    annihilates the sequence.  The residual is evaluated at k = 0..r and
    the vanishing pattern must agree; the k = 0 value is returned.
    """
    verts = _check_pair(P, Q)
    need = 2 * len(verts)
    seq = list(sequence) if sequence is not None else []
    if len(seq) < need:
        seq = transform_sequence(P, Q, need)
    return dropped_root_residuals(seq, verts, P.n)


def dropped_root_residuals(seq, roots, n):
    """{root: residual at k = 0} for a sequence annihilated by prod (X - x^root).

    ``roots`` must be pairwise distinct and ``seq`` must have at least
    2 * len(roots) terms.
    """
    r = len(roots)
    if len(set(roots)) != r:
        raise InvalidInput("roots must be pairwise distinct")
    if len(seq) < 2 * r:
        raise InvalidInput(f"need {2 * r} sequence terms, got {len(seq)}")
    # prod_{w != u}(X - x^w) = chi(X) / (X - x^u) has coefficients
    # q_j = sum_{i <= j} chi_i x^{(j-i)u}.  Regrouping by the power m of x^u,
    # R_u(k) = sum_m x^{mu} T[k][m] with T[k][m] = sum_{i < r-m} chi_i a_{k+r-1-m-i}
    # independent of u, evaluated below by Horner in x^u.
    chi = [elementary_symmetric(roots, j, n) * (-1) ** j for j in range(r)]
    T = []
    for k in range(r + 1):
        row = []
        for m in range(r):
            acc = LaurentPoly.zero(n)
            for i in range(r - m):
                acc = acc + chi[i] * seq[k + r - 1 - m - i]
            row.append(acc)
        T.append(row)

    out = {}
    for u in roots:
        values = []
        for k in range(r + 1):
            acc = LaurentPoly.zero(n)
            for m in range(r - 1, -1, -1):
                acc = acc.shift(u) + T[k][m]
            values.append(acc)
        pattern = {v.is_zero() for v in values}
        if len(pattern) != 1:
            raise VerificationError(
                f"residual for root {u} vanishes for some k but not others",
                vertex=u,
                vanishing=[v.is_zero() for v in values],
            )
        out[u] = values[0]
    return out


def _grid(box, n, step):
    if len(box) == 2 and not isinstance(box[0], (tuple, list)):
        box = [tuple(box)] * n
    if len(box) != n:
        raise DimensionMismatch(f"sample box has {len(box)} ranges, expected {n}")
    axes = []
    for lo, hi in box:
        lo, hi = Fraction(lo), Fraction(hi)
        count = int((hi - lo) / step)
        axes.append([lo + i * step for i in range(count + 1)])
    return itertools.product(*axes)


def indicator_recursion_check(P, k, sample_box, step=Fraction(1, 2)):
    """Pointwise check of 1_{(k+r)P} = sum_I (-1)^{1+|I|} 1_{(k+r-|I|)P + v_I}.

    ``P`` may have rational vertices.  Both sides are evaluated as integers
    at every point of the grid with spacing ``step`` over ``sample_box``
    (either one ``(lo, hi)`` for all axes or one pair per axis).  This is the
    expanded form of prod_i (1_P - 1_{v_i}) = 0 under Minkowski product,
    multiplied by 1_{kP}.  Returns True or raises VerificationError.
    """
    if k < 0:
        raise InvalidInput("k must be nonnegative")
    verts = P.vertices
    r = len(verts)
    if r == 0:
        raise InvalidInput("P is empty")
    n = P.n
    hrep = P.hrep
    terms = []
    for size in range(1, r + 1):
        sign = 1 if size % 2 else -1
        for subset in itertools.combinations(verts, size):
            shift = tuple(sum(c) for c in zip(*subset)) if n else ()
            terms.append((sign, k + r - size, shift))

    scaled = {m: hrep.scaled(m) for m in range(1, k + r + 1)}

    def member(x, m, shift):
        y = tuple(a - b for a, b in zip(x, shift))
        if m == 0:
            return all(c == 0 for c in y)
        return scaled[m].contains(y)

    for x in _grid(sample_box, n, Fraction(step)):
        lhs = int(member(x, k + r, (0,) * n))
        rhs = sum(sign * member(x, m, s) for sign, m, s in terms)
        if lhs != rhs:
            raise VerificationError(
                f"indicator identity fails at {x}", point=x, lhs=lhs, rhs=rhs
            )
    return True


@dataclass(frozen=True)
class LatticeMap:
    """Integer l x n matrix, i.e. a linear map sending Z^n into Z^l."""

    matrix: tuple
    n: int

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.matrix)
        for row in rows:
            if len(row) != self.n:
                raise DimensionMismatch(f"matrix row {row} has length {len(row)}, expected {self.n}")
        object.__setattr__(self, "matrix", rows)

    @classmethod
    def zero(cls, n):
        return cls((), n)

    @classmethod
    def identity(cls, n):
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)

    @property
    def l(self):
        return len(self.matrix)

    def __call__(self, m):
        return tuple(sum(a * b for a, b in zip(row, m)) for row in self.matrix)


def specialize(p, f):
    """Image of p under x^m -> x^{f(m)}; colliding terms add up."""
    if p.n != f.n:
        raise DimensionMismatch(f"map expects {f.n} variables, polynomial has {p.n}")
    terms = {}
    for m, c in p.terms():
        e = f(m)
        terms[e] = terms.get(e, 0) + c
    return LaurentPoly(terms, f.l)


def verify_specialized_recursion(P, Q, f, k_max):
    """Check that f(sigma(kP+Q)) satisfies the recursion with roots x^{f(v)}."""
    verts = _check_pair(P, Q)
    r = len(verts)
    images = [f(v) for v in verts]
    coeffs = [elementary_symmetric(images, j, f.l) * (-1) ** j for j in range(r + 1)]
    seq = [specialize(s, f) for s in transform_sequence(P, Q, k_max + r + 1)]
    for k in range(k_max + 1):
        total = LaurentPoly.zero(f.l)
        for j, c in enumerate(coeffs):
            total = total + c * seq[k + r - j]
        if not total.is_zero():
            raise VerificationError(
                f"specialized recursion fails at k={k}", k=k, difference=total.render()
            )
    return RecursionCertificate(char_poly_coeffs=coeffs, k_range=(0, k_max))


def _annihilated(seq, power):
    binom = [(-1) ** j * math.comb(power, j) for j in range(power + 1)]
    return all(
        sum(b * seq[k + power - j] for j, b in enumerate(binom)) == 0
        for k in range(len(seq) - power)
    )


def annihilating_power(seq):
    """Smallest m such that (X - 1)^m kills every window of ``seq``.

    Only meaningful when len(seq) > m; returns None if no power below
    len(seq) works.
    """
    for m in range(len(seq)):
        if _annihilated(seq, m):
            return m
    return None


def ehrhart_sequence(P, k_max):
    """Lattice-point counts of kP for k = 0..k_max.

    Counts are obtained by specialising sigma(kP) along the zero map, and
    the sequence is checked to be annihilated by (X - 1)^{dim P + 1}.
    """
    P.integer_vertices()
    zero = LatticeMap.zero(P.n)
    counts = []
    for k in range(k_max + 1):
        c = specialize(integer_point_transform(dilate(P, k)), zero)
        counts.append(c.coefficient(()))
    power = P.dim + 1
    if not _annihilated(counts, power):
        raise VerificationError(
            f"Ehrhart counts are not annihilated by (X-1)^{power}", counts=counts
        )
    return counts
