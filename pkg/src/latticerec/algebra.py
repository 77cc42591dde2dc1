"""Sparse multivariate Laurent polynomials with exact integer coefficients.

Every integer point transform, characteristic-polynomial coefficient and
Schur polynomial in this package is a :class:`LaurentPoly`.  Values are
immutable; arithmetic returns new objects.

Text form (bit-exact, used by golden files and the CLI)::

    1 + x1 + x2 + x1*x2
    -x1^-1 + 3*x1^2*x2

Terms are listed in graded-lex ascending order: by total degree, and
within a degree lexicographically with x1 > x2 > ... listed first, so
``x1`` precedes ``x2`` and ``x1^2`` precedes ``x1*x2``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DimensionMismatch, InvalidInput

__all__ = [
    "LaurentPoly",
    "add",
    "mul",
    "monomial_shift",
    "elementary_symmetric",
    "grlex_key",
    "parse_rational",
    "format_rational",
]


def grlex_key(exp):
    # within one total degree, higher powers of x1 come first (x1 before x2)
    return (sum(exp), tuple(-a for a in exp))


class LaurentPoly:
    """Finite map exponent-tuple -> nonzero int, in ``n`` variables."""

    __slots__ = ("_terms", "_n", "_hash")

    def __init__(self, terms=None, n=None):
        if n is None:
            raise InvalidInput("ambient dimension n is required")
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for exp, c in items:
                exp = tuple(int(a) for a in exp)
                if len(exp) != n:
                    raise DimensionMismatch(f"exponent {exp} has length {len(exp)}, expected {n}")
                c = int(c)
                if c:
                    c += clean.get(exp, 0)
                    if c:
                        clean[exp] = c
                    else:
                        clean.pop(exp, None)
        self._terms = clean
        self._n = n
        self._hash = None

    # constructors
    @classmethod
    def zero(cls, n):
        return cls(None, n)

    @classmethod
    def constant(cls, c, n):
        return cls({(0,) * n: c}, n)

    @classmethod
    def one(cls, n):
        return cls.constant(1, n)

    @classmethod
    def monomial(cls, exp, coeff=1):
        exp = tuple(exp)
        return cls({exp: coeff}, len(exp))

    @classmethod
    def _raw(cls, terms, n):
        # trusted constructor: terms already clean
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._n = n
        obj._hash = None
        return obj

    @property
    def n(self):
        return self._n

    def terms(self):
        """(exponent, coefficient) pairs in graded-lex ascending order."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]))

    def support(self):
        return frozenset(self._terms)

    def coefficient(self, exp):
        return self._terms.get(tuple(exp), 0)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self._n)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._n == other._n and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._terms.items())))
        return self._hash

    def _check(self, other):
        if isinstance(other, int):
            return LaurentPoly.constant(other, self._n)
        if not isinstance(other, LaurentPoly):
            raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")
        if other._n != self._n:
            raise DimensionMismatch(f"ambient dimensions differ: {self._n} vs {other._n}")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self._terms)
        for exp, c in other._terms.items():
            c += out.get(exp, 0)
            if c:
                out[exp] = c
            else:
                out.pop(exp, None)
        return LaurentPoly._raw(out, self._n)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()}, self._n)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero(self._n)
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()}, self._n)
        other = self._check(other)
        A, B = self._terms, other._terms
        if not A or not B:
            return LaurentPoly.zero(self._n)
        if len(A) == 1:
            (e, c), = A.items()
            return other.shift(e) * c
        if len(B) == 1:
            (e, c), = B.items()
            return self.shift(e) * c
        # pack exponent vectors into single ints (mixed radix) so the inner
        # loop adds ints instead of building tuples
        n = self._n
        lo_a = [min(e[i] for e in A) for i in range(n)]
        lo_b = [min(e[i] for e in B) for i in range(n)]
        span = [
            max(e[i] for e in A) - lo_a[i] + max(e[i] for e in B) - lo_b[i] + 1
            for i in range(n)
        ]
        strides = []
        s = 1
        for w in span:
            strides.append(s)
            s *= w

        def pack(terms, lo):
            return [
                (sum((e[i] - lo[i]) * strides[i] for i in range(n)), c) for e, c in terms.items()
            ]

        pa, pb = pack(A, lo_a), pack(B, lo_b)
        out = {}
        get = out.get
        for ka, ca in pa:
            for kb, cb in pb:
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        base = [x + y for x, y in zip(lo_a, lo_b)]
        terms = {}
        for k, c in out.items():
            if c:
                e = []
                for i in range(n):
                    k, r = divmod(k, span[i])
                    e.append(r + base[i])
                terms[tuple(e)] = c
        return LaurentPoly._raw(terms, n)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers are only defined for monomials; use shift")
        result = LaurentPoly.one(self._n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, v):
        v = tuple(v)
        if len(v) != self._n:
            raise DimensionMismatch(f"shift vector has length {len(v)}, expected {self._n}")
        for a in v:
            if a != int(a):
                raise InvalidInput(f"shift vector {v} is not integral")
        v = tuple(int(a) for a in v)
        return LaurentPoly._raw(
            {tuple(x + y for x, y in zip(e, v)): c for e, c in self._terms.items()}, self._n
        )

    def __repr__(self):
        return f"LaurentPoly({self.render()!r}, n={self._n})"

    def __str__(self):
        return self.render()

    # text form
    def render(self):
        if not self._terms:
            return "0"
        out = []
        for idx, (exp, c) in enumerate(self.terms()):
            factors = []
            for i, a in enumerate(exp):
                if a == 1:
                    factors.append(f"x{i + 1}")
                elif a:
                    factors.append(f"x{i + 1}^{a}")
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if idx == 0:
                out.append("-" + body if c < 0 else body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    _VAR = re.compile(r"^x(\d+)(?:\^(-?\d+))?$")

    @classmethod
    def parse(cls, text, n):
        text = text.strip()
        if text == "0":
            return cls.zero(n)
        if not text:
            raise InvalidInput("empty polynomial text")
        sign = 1
        if text.startswith("-"):
            sign, text = -1, text[1:]
        chunks = re.split(r" ([+-]) ", text)
        signs = [sign] + [1 if s == "+" else -1 for s in chunks[1::2]]
        terms = {}
        for s, body in zip(signs, chunks[0::2]):
            coeff = 1
            exp = [0] * n
            for k, factor in enumerate(body.split("*")):
                if k == 0 and factor.isdigit():
                    coeff = int(factor)
                    continue
                m = cls._VAR.match(factor)
                if not m:
                    raise InvalidInput(f"cannot parse factor {factor!r} in {body!r}")
                i = int(m.group(1)) - 1
                if not 0 <= i < n:
                    raise InvalidInput(f"variable x{i + 1} out of range for n={n}")
                exp[i] += int(m.group(2)) if m.group(2) is not None else 1
            exp = tuple(exp)
            terms[exp] = terms.get(exp, 0) + s * coeff
        return cls(terms, n)

    def evaluate(self, point):
        """Exact value at a point with nonzero rational coordinates."""
        total = Fraction(0)
        for exp, c in self._terms.items():
            term = Fraction(c)
            for x, a in zip(point, exp):
                term *= Fraction(x) ** a
            total += term
        return total


def add(p, q):
    return p + q


def mul(p, q):
    return p * q


def monomial_shift(p, v):
    return p.shift(v)


def elementary_symmetric(monomials, j, n=None):
    """e_j evaluated at the monomials x^{v} for v in ``monomials``.

    Computed with the standard one-pass recurrence over the list
    (e_j <- e_j + x^v * e_{j-1}), not by subset enumeration.
    """
    monomials = [tuple(v) for v in monomials]
    if n is None:
        if not monomials:
            raise InvalidInput("n is required for an empty monomial list")
        n = len(monomials[0])
    if not 0 <= j <= len(monomials):
        raise InvalidInput(f"j={j} out of range 0..{len(monomials)}")
    e = [LaurentPoly.one(n)] + [LaurentPoly.zero(n)] * j
    for v in monomials:
        for i in range(j, 0, -1):
            e[i] = e[i] + e[i - 1].shift(v)
    return e[j]


def parse_rational(value):
    """Integer or ``"p/q"`` string to Fraction; floats are rejected."""
    if isinstance(value, bool) or isinstance(value, float):
        raise InvalidInput(f"non-exact numeric value {value!r}; use an integer or 'p/q'")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            if "." in value or "e" in value.lower():
                raise ValueError
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise InvalidInput(f"cannot parse rational {value!r}") from None
    raise InvalidInput(f"cannot parse rational {value!r}")


def format_rational(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def product_of_linear_factors(roots, n):
    """Coefficients of prod (X - x^v), degree-descending, via e_j."""
    r = len(roots)
    return [elementary_symmetric(roots, j, n) * (-1) ** j for j in range(r + 1)]

