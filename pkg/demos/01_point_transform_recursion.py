"""
Integer point transforms and their vertex recursion
===================================================

The integer point transform of a polytope is the Laurent polynomial with
one monomial per lattice point.  For dilates kP + Q of a lattice polytope
the transforms obey a linear recursion whose characteristic polynomial
has one root x^v per vertex v of P.
"""

from fractions import Fraction

from latticerec import Polytope, char_poly, integer_point_transform, transform_sequence, verify_recursion

# a pentagon, given by a few points; the hull is computed exactly
P = Polytope([(0, 0), (2, 0), (3, 1), (1, 3), (0, 2), (1, 1)])
print("vertices:", [tuple(int(c) for c in v) for v in P.vertices])
print("sigma(P) =", integer_point_transform(P))

# the characteristic polynomial prod (X - x^v), coefficients from X^5 down
for j, c in enumerate(char_poly(P)):
    print(f"  X^{len(P.vertices) - j}: {c}")

# the first few terms of sigma(kP + Q) for a lattice segment Q
Q = Polytope([(0, 0), (1, 0)])
for k, s in enumerate(transform_sequence(P, Q, 3)):
    print(f"k={k}: {len(s)} lattice points")

# exact check for k = 0..5 plus the minimality residuals
cert = verify_recursion(P, Q, 5)
print("verified:", cert.verified, " minimal:", cert.minimal)

# a non-lattice translate: every kP + Q misses the lattice, so the
# sequence is zero and the recursion is far from minimal
seg = Polytope([(0, 0), (1, 0)])
half = Polytope([(Fraction(1, 2), Fraction(1, 2))])
cert = verify_recursion(seg, half, 5)
print("half-point translate minimal:", cert.minimal)
print("residuals:", {v: str(r) for v, r in cert.minimality_residuals.items()})
