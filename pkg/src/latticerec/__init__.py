"""Exact linear recursions for integer point transforms of dilated polytopes,
with Brion-identity checks and Gelfand-Tsetlin / Schur polynomial tools."""

from .algebra import LaurentPoly, elementary_symmetric
from .brion import PointedCone, RationalFn, brion_check, brion_terms, cone_transform, tangent_cone
from .errors import (
    DimensionMismatch,
    InfeasibleError,
    InvalidInput,
    LatticeRecError,
    UnboundedError,
    UnsupportedInput,
    VerificationError,
)
from .polytope import HRep, Polytope, dilate, lattice_points, minkowski_sum
from .schurgt import (
    GTPattern,
    SkewShape,
    conjecture_W,
    counterexample_report,
    gt_polytope,
    kostka,
    schur_polynomial,
    schur_recursion_check,
    ssyt_enumerate,
    vertex_weights,
)
from .transform import (
    LatticeMap,
    RecursionCertificate,
    char_poly,
    ehrhart_sequence,
    indicator_recursion_check,
    integer_point_transform,
    minimality_residuals,
    specialize,
    transform_sequence,
    verify_recursion,
    verify_specialized_recursion,
)

__version__ = "0.1.0"
