"""
Recursions for families of skew Schur polynomials
=================================================

Along a family s_{kappa + l*lam / nu + l*mu}, the GT polytopes grow by
Minkowski addition of GT(lam/mu), so the Schur polynomials satisfy the
vertex recursion with roots x^{w(v)}, v a vertex of GT(lam/mu).
"""

from latticerec import schur_recursion_check
from latticerec.schurgt import gt_minkowski_check

# complete homogeneous polynomials h_l(x1, x2): roots x1 and x2
cert = schur_recursion_check((0, 0), (1, 0), (0, 0), (0, 0), 2, 8)
print("h_l recursion:", cert.verified, " char poly:", [str(c) for c in cert.char_poly_coeffs])
print("minimal:", cert.minimal)

# a shifted family kappa + l*lam with kappa = (1, 0)
cert = schur_recursion_check((1, 0), (1, 1), (0, 0), (0, 0), 2, 6)
print("shifted family verified from l =", cert.notes["r"])

# GT(2lam / 2mu) = GT(lam/mu) + GT(lam/mu)
print("doubling:", gt_minkowski_check((0, 0, 0), (2, 1, 0), (1, 0, 0), (0, 0, 0), 3, 1, 2))
