"""
Indicator functions and Ehrhart counts
======================================

Inclusion-exclusion over vertex subsets gives a pointwise identity for
the indicator functions of dilates, valid for rational polytopes too.
Sending every monomial to 1 turns transforms into lattice-point counts,
which is how Ehrhart sequences fall out of the recursion.
"""

from fractions import Fraction

from latticerec import LatticeMap, Polytope, dilate, ehrhart_sequence, indicator_recursion_check
from latticerec import integer_point_transform, specialize

# triangle with a non-lattice vertex, checked on a half-integer grid
T = Polytope([(0, 0), (1, 0), (Fraction(1, 2), Fraction(1, 2))])
for k in range(3):
    ok = indicator_recursion_check(T, k, (-1, k + 4), step=Fraction(1, 2))
    print(f"indicator identity, k={k}:", ok)

# Ehrhart counts of the unit cube via the zero specialization
cube = Polytope([(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)])
print("cube counts:", ehrhart_sequence(cube, 6))

# specializing along a coordinate projection keeps one grading
proj = LatticeMap(((1, 0),), 2)
square = Polytope([(0, 0), (1, 0), (0, 1), (1, 1)])
for k in range(3):
    print(f"k={k}:", specialize(integer_point_transform(dilate(square, k)), proj))
