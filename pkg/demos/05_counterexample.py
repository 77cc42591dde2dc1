"""
A weight that is not the weight of any GT vertex
================================================

For lam = (5,3,1), mu = (3,0,0) and three variables, the weight (4,2,0)
occurs in the skew Schur polynomial and dominates the sorted shape
content (3,2,1), yet no vertex of the GT polytope has that weight.  A
recursion built from the dominant weights therefore does not divide the
one built from the vertices.
"""

from latticerec import GTPattern, SkewShape, counterexample_report, kostka

shape = SkewShape((5, 3, 1), (3, 0, 0), 3)

# a pattern of weight (4,2,0); rows are written weakly increasing
p = GTPattern(((1, 3, 5), (0, 1, 4), (0, 0, 3), (0, 0, 3)))
print("pattern weight:", p.weight(), " Kostka:", kostka(shape, (4, 2, 0)))

report = counterexample_report(shape)
print("vertex coordinates:", [str(v) for v in report.vertex_values])
print("distinct vertex weights:", sorted(set(report.vertex_weights)))
print("W missing from vertex weights:", report.missing)
print("refuted:", report.refuted)
