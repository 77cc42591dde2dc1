"""
Gelfand-Tsetlin patterns and skew Schur polynomials
===================================================

Lattice points of a GT polytope are in bijection with semistandard skew
tableaux, and the pattern weight is a linear function.  Summing x^weight
over lattice points therefore gives the skew Schur polynomial.
"""

from latticerec import SkewShape, gt_polytope, kostka, schur_polynomial, vertex_weights

shape = SkewShape((2, 1, 0), (0, 0, 0), 3)
P = gt_polytope(shape)
print("GT polytope dimension:", P.dim, " vertices:", len(P.vertices))

# schur_polynomial cross-checks the GT count against tableau enumeration
print("s_{21}(x1,x2,x3) =", schur_polynomial(shape))
print("K_{21,111} =", kostka(shape, (1, 1, 1)))
print("vertex weights:", sorted(vertex_weights(shape)))
