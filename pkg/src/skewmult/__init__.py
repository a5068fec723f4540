"""Exact arithmetic for skew polynomials F[x; sigma, delta] and their zeros with multiplicity.

Typical use::

    from skewmult import FiniteField, SkewPoly, lclm

    F9 = FiniteField(3, 2, modulus=(1, 0, 1))
    g, x = F9.gen, SkewPoly.x(F9)
    lclm(x - g, x - 2 * g)          # x^2 + 2
"""

from .errors import (
    BothZero, ContextMismatch, DegreeTooSmall, DimensionMismatch, DivisionByZeroPoly,
    EmptySequence, EmptySet, InvalidSequence, InversionOfZero, LinearSystemError,
    NoFiniteCoordinatization, NonUnique, NoSolution, NotEnumerable, NotPIndependent,
    ParseError, SigmaNotInvertible, SkewError, UnsupportedRing, ValidationMissing,
    ZeroPoint, ZeroPolynomial,
)
from .interp import (
    ConfluentVandermonde, build_vandermonde, hasse_samples, hermite_interpolate,
    lagrange_interpolate, solve_left_linear,
)
from .linalg import solve_left
from .multiplicity import (
    MultSeq, centralizer_dim, class_rank, conjclass_minpoly, conjclass_minpoly_pow,
    conjugacy_class_brute, conjugator, extend_multseq, factor_p_independent,
    hasse_derivative, hasse_witness, hyperplane_dim, in_vspace, mult_I_check,
    mult_II_check, mult_on_class_check, taylor_expand, taylor_reconstruct,
    unique_factorization_check, validate_multseq, validate_multseq_brute,
    validate_multseq_pairwise, validate_multseq_specialized,
)
from .parsing import parse_element, parse_poly, parse_ring, parse_seq
from .ring import (
    Element, SkewContext, apply_delta, apply_sigma, centralizer_contains, conjugate,
    coordinates, dmap_apply, from_coordinates,
)
from .rings import (
    FiniteField, GaussianRationals, Quaternions, RationalFunctions, enumerate_elements,
    find_primitive, is_conjugate, norm, quat_conj, quat_mod_sq, quat_re, trace,
)
from .skewpoly import (
    NEG_INF, PointSet, SkewPoly, eval_high, eval_point, gcrd, gcrd_extended,
    is_p_independent, lclm, left_divmod, linear_product, minimal_poly,
    p_closure_brute, poly_mul, right_divmod, zero_set_brute,
)

__version__ = "0.1.0"
