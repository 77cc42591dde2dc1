"""
Brion's identity for simple polytopes
=====================================

The transform of a polytope equals the sum of the rational generating
functions of its vertex cones.  Each cone contributes a parallelepiped
numerator over a product of (1 - x^g) factors; the identity is checked
exactly after clearing all denominators.
"""

from latticerec import Polytope, brion_check, brion_terms

P = Polytope([(0, 0), (2, 0), (0, 3)])
for v, rf in brion_terms(P):
    dens = " ".join(f"(1 - x^{g})" for g in rf.denominator_factors)
    print(f"vertex {v}:  ({rf.numerator}) / {dens}")
print("Brion identity holds:", brion_check(P))

# the standard simplex conv(e1..e4), a 3-dimensional polytope in R^4
simplex = Polytope([tuple(int(i == j) for j in range(4)) for i in range(4)])
print("simplex in R^4:", brion_check(simplex))
