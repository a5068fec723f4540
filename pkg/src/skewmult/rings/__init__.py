"""The four concrete division rings and their ring-specific helpers."""

from ..errors import NotEnumerable, UnsupportedRing
from .finite_field import FiniteField, first_irreducible, is_irreducible
from .gaussian import GaussianRationals
from .quaternion import Quaternions, quat_conj, quat_mod_sq, quat_re
from .ratfun import RationalFunctions


def _cyclic(a):
    ctx = a.ctx
    if not isinstance(ctx, (FiniteField, GaussianRationals)):
        raise UnsupportedRing(f"norm/trace need a cyclic Galois context, got {ctx.ring_id}")
    return ctx


def norm(a):
    """Product of sigma^i(a), i < order(sigma); lies in the fixed field."""
    return _cyclic(a).norm(a)


def trace(a):
    """Sum of sigma^i(a), i < order(sigma); lies in the fixed field."""
    return _cyclic(a).trace(a)


def enumerate_elements(ctx):
    return ctx.elements()


def find_primitive(ctx):
    if not isinstance(ctx, FiniteField):
        raise NotEnumerable(f"{ctx.ring_id} is not enumerable")
    return ctx.find_primitive()


def is_conjugate(a, b):
    """Ring-specific (sigma, delta)-conjugacy test (not available for ratfun)."""
    ctx = a.ctx
    if not hasattr(ctx, "is_conjugate"):
        raise UnsupportedRing(f"no conjugacy decision procedure for {ctx.ring_id}")
    return ctx.is_conjugate(a, b)


__all__ = [
    "FiniteField", "GaussianRationals", "Quaternions", "RationalFunctions",
    "norm", "trace", "quat_re", "quat_mod_sq", "quat_conj",
    "enumerate_elements", "find_primitive", "is_conjugate",
    "first_irreducible", "is_irreducible",
]
