"""Exact two-phase simplex over the rationals.

Small dense tableau implementation with Bland's rule, so it always
terminates.  Used for convex-combination membership, redundancy removal
and bounding boxes; sizes here are a few dozen rows and columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: tuple | None = None
    value: Fraction | None = None

    @property
    def feasible(self):
        return self.status != INFEASIBLE


def _pivot(T, obj, basis, r, c):
    row = T[r]
    p = row[c]
    if p != 1:
        row[:] = [v / p for v in row]
    # tableaux are sparse: only touch the pivot row's nonzero columns
    nz = [j for j, v in enumerate(row) if v]
    for i, other in enumerate(T):
        if i != r:
            f = other[c]
            if f:
                for j in nz:
                    other[j] -= f * row[j]
    f = obj[c]
    if f:
        for j in nz:
            obj[j] -= f * row[j]
    basis[r] = c


def _run(T, obj, basis, allowed):
    """Minimise; ``obj`` holds reduced costs and -value in its last slot."""
    while True:
        enter = next((j for j in allowed if obj[j] < 0), None)
        if enter is None:
            return OPTIMAL
        best = None
        for i, row in enumerate(T):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return UNBOUNDED
        _pivot(T, obj, basis, best[1], enter)


def _standard_form(nvars, A_ub, b_ub, A_eq, b_eq, nonneg):
    # columns: x+ (nvars), x- (nvars unless nonneg), slacks (len(A_ub));
    # also returns, per row, a slack column usable as an initial basic
    # variable (None when the row needed negating or is an equality)
    split = 0 if nonneg else nvars
    nslack = len(A_ub)
    ncols = nvars + split + nslack
    rows, start = [], []
    for k, (a, b) in enumerate(zip(A_ub, b_ub)):
        row = [Fraction(v) for v in a]
        if split:
            row += [-v for v in row]
        slack = [Fraction(0)] * nslack
        slack[k] = Fraction(1)
        rows.append(row + slack + [Fraction(b)])
        start.append(nvars + split + k)
    for a, b in zip(A_eq, b_eq):
        row = [Fraction(v) for v in a]
        if split:
            row += [-v for v in row]
        rows.append(row + [Fraction(0)] * nslack + [Fraction(b)])
        start.append(None)
    for i, row in enumerate(rows):
        if row[-1] < 0:
            row[:] = [-v for v in row]
            start[i] = None
    return rows, ncols, split, start


def linprog(c, A_ub=(), b_ub=(), A_eq=(), b_eq=(), nonneg=False):
    """Minimise ``c . x`` subject to ``A_ub x <= b_ub`` and ``A_eq x = b_eq``.

    Variables are free unless ``nonneg``.  All data are converted to
    Fraction, so the answer is exact.
    """
    nvars = len(c)
    A_ub, b_ub, A_eq, b_eq = list(A_ub), list(b_ub), list(A_eq), list(b_eq)
    rows, ncols, split, start = _standard_form(nvars, A_ub, b_ub, A_eq, b_eq, nonneg)

    # phase one: artificials only for rows without a usable slack
    need = [i for i, s in enumerate(start) if s is None]
    art = {i: ncols + k for k, i in enumerate(need)}
    width = ncols + len(need)
    T = []
    for i, row in enumerate(rows):
        extra = [Fraction(0)] * len(need)
        if i in art:
            extra[art[i] - ncols] = Fraction(1)
        T.append(row[:-1] + extra + [row[-1]])
    basis = [start[i] if start[i] is not None else art[i] for i in range(len(rows))]
    if need:
        obj = [Fraction(0)] * (width + 1)
        for i in need:
            row = T[i]
            for j in range(ncols):
                obj[j] -= row[j]
            obj[-1] -= row[-1]
        _run(T, obj, basis, range(ncols))
        if obj[-1] != 0:
            return LPResult(INFEASIBLE)

    # drive artificials out of the basis; drop redundant rows
    keep = []
    for i in range(len(rows)):
        if basis[i] >= ncols:
            j = next((j for j in range(ncols) if T[i][j] != 0), None)
            if j is None:
                continue
            _pivot(T, [Fraction(0)] * (width + 1), basis, i, j)
        keep.append(i)
    T = [T[i][:ncols] + [T[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]

    cost = [Fraction(v) for v in c]
    if split:
        cost += [-v for v in cost]
    cost += [Fraction(0)] * (ncols - len(cost))
    obj = cost + [Fraction(0)]
    for i, b in enumerate(basis):
        if obj[b]:
            f = obj[b]
            obj = [a - f * r for a, r in zip(obj, T[i])]
    status = _run(T, obj, basis, range(ncols))
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)

    values = [Fraction(0)] * ncols
    for i, b in enumerate(basis):
        values[b] = T[i][-1]
    x = [values[j] - (values[nvars + j] if split else 0) for j in range(nvars)]
    value = sum((cv * xv for cv, xv in zip(c, x)), Fraction(0))
    return LPResult(OPTIMAL, tuple(x), value)


def feasible_point(A_ub=(), b_ub=(), A_eq=(), b_eq=(), nvars=None, nonneg=False):
    """A feasible point of the system, or None."""
    if nvars is None:
        nvars = len(next(iter(list(A_ub) + list(A_eq))))
    res = linprog([0] * nvars, A_ub, b_ub, A_eq, b_eq, nonneg=nonneg)
    return res.x if res.status == OPTIMAL else None


def in_convex_hull(point, points):
    """Exact test whether ``point`` is a convex combination of ``points``."""
    points = list(points)
    if not points:
        return False
    n = len(point)
    A_eq = [[p[i] for p in points] for i in range(n)]
    A_eq.append([1] * len(points))
    b_eq = list(point) + [1]
    return feasible_point(A_eq=A_eq, b_eq=b_eq, nvars=len(points), nonneg=True) is not None
