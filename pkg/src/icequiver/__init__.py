"""Exact computations with ice quivers with potential and their Jacobian algebras."""

__version__ = "0.1.0"

from .algebra import FinDimAlgebra, find_isomorphism, is_isomorphism
from .dg import build_ginzburg, build_relative_ginzburg, ginzburg_functor, verify_d_squared, verify_functor
from .exactness import CONCENTRATED, INAPPLICABLE, NOT_CONCENTRATED, degree0_verdict
from .fileformat import FormatError, parse_quiver, read_quiver, serialize_quiver
from .jacobian import boundary_algebra, bound_quiver_algebra, relative_jacobian
from .quiver import Arrow, Element, IceQuiver, Path, Potential, Quiver
from .rewriting import JacobiFinite, UnknownUpToDegree

__all__ = [
    "Arrow",
    "CONCENTRATED",
    "Element",
    "FinDimAlgebra",
    "FormatError",
    "INAPPLICABLE",
    "IceQuiver",
    "JacobiFinite",
    "NOT_CONCENTRATED",
    "Path",
    "Potential",
    "Quiver",
    "UnknownUpToDegree",
    "__version__",
    "bound_quiver_algebra",
    "boundary_algebra",
    "build_ginzburg",
    "build_relative_ginzburg",
    "degree0_verdict",
    "find_isomorphism",
    "ginzburg_functor",
    "is_isomorphism",
    "parse_quiver",
    "read_quiver",
    "relative_jacobian",
    "serialize_quiver",
    "verify_d_squared",
    "verify_functor",
]
