"""
Exact arithmetic over Q(sqrt 2): scalars, polynomials, matrices, Plücker
vectors, bilinear forms and flags
"""
from algebra.scalar import ONE, SQRT2, ZERO, QuadScalar, ScalarParseError, ScalarZeroDivisionError
from algebra.symbolic import SymPoly
from algebra.matrix import DimensionMismatchError, ExactMatrix, MatrixFormatError
from algebra.plucker import NotAntisymmetricError, PluckerVector, pfaffian, plucker_vector
from algebra.forms import BilinearForm, is_isotropic, perp
from algebra.flags import Flag, intersect_with_interval

__all__ = [
    "ONE",
    "SQRT2",
    "ZERO",
    "BilinearForm",
    "DimensionMismatchError",
    "ExactMatrix",
    "Flag",
    "MatrixFormatError",
    "NotAntisymmetricError",
    "PluckerVector",
    "SymPoly",
    "QuadScalar",
    "ScalarParseError",
    "ScalarZeroDivisionError",
    "intersect_with_interval",
    "is_isotropic",
    "perp",
    "pfaffian",
    "plucker_vector",
]
