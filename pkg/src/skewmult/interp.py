"""Confluent Vandermonde matrices and Lagrange/Hermite interpolation.

Polynomials have left coefficients and Hasse derivatives are left linear,
so ``F = sum f_t x^t`` satisfies ``D_{a_{i,j}}(F) = sum_t f_t D_{a_{i,j}}(x^t)``.
Interpolation therefore solves the row-vector system ``f . V = b``.
"""

from dataclasses import dataclass

from . import linalg
from .errors import (
    DimensionMismatch, EmptySet, LinearSystemError, NotPIndependent, ValidationMissing,
)
from .multiplicity import MultSeq, taylor_expand
from .skewpoly import SkewPoly


@dataclass(frozen=True)
class ConfluentVandermonde:
    """N x (r_1 + ... + r_n) matrix with entry (t, (i, j)) = D_{a_{i,j}}(x^t)."""

    order: int
    blocks: tuple
    ctx: object

    @property
    def rows(self):
        return [[e for block in self.blocks for e in block[t]] for t in range(self.order)]

    @property
    def shape(self):
        return self.order, sum(len(b[0]) for b in self.blocks)

    def __str__(self):
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.rows)


def _as_seq(s):
    if isinstance(s, MultSeq):
        return s
    if isinstance(s, (list, tuple)):
        return MultSeq(s)
    return MultSeq((s,))


def build_vandermonde(seqs, N):
    """Confluent Vandermonde matrix of order N for the given sequences."""
    seqs = [_as_seq(s) for s in seqs]
    if not seqs:
        raise EmptySet("no sequences")
    if N < 1:
        raise DimensionMismatch("order must be positive")
    ctx = seqs[0].ctx
    blocks = []
    for s in seqs:
        block = []
        for t in range(N):
            _, ds = taylor_expand(SkewPoly.monomial(ctx, t), s.points)
            block.append(tuple(ds))
        blocks.append(tuple(block))
    return ConfluentVandermonde(N, tuple(blocks), ctx)


def solve_left_linear(M, b, ops=None):
    """Row vector f with f . M = b (see :func:`skewmult.linalg.solve_left`)."""
    if isinstance(M, ConfluentVandermonde):
        ops = ops or M.ctx
        M = M.rows
    return linalg.solve_left(M, b, ops)


def hermite_interpolate(seqs, values):
    """The unique F with deg F < sum r_i and D_{a_{i,j}}(F) = values[i][j].

    Every sequence must be a validated :class:`MultSeq`. Raises
    NotPIndependent when the confluent Vandermonde matrix is singular, which
    happens exactly when the heads are not P-independent.
    """
    seqs = list(seqs)
    if not seqs:
        raise EmptySet("no sequences")
    for s in seqs:
        if not isinstance(s, MultSeq) or not s.validated:
            raise ValidationMissing("hermite_interpolate needs validated sequences")
    if len(values) != len(seqs) or any(len(v) != len(s) for v, s in zip(values, seqs)):
        raise DimensionMismatch("one target per prefix of every sequence is required")
    ctx = seqs[0].ctx
    N = sum(len(s) for s in seqs)
    V = build_vandermonde(seqs, N)
    rhs = [ctx.from_rational(v) if not hasattr(v, "ctx") else v for vs in values for v in vs]
    try:
        f = linalg.solve_left(V.rows, rhs, ctx)
    except LinearSystemError as exc:
        raise NotPIndependent("the heads are not P-independent") from exc
    F = SkewPoly(ctx, f)
    for s, vs in zip(seqs, values):
        _, ds = taylor_expand(F, s.points)
        assert list(ds) == [ctx.from_rational(v) if not hasattr(v, "ctx") else v for v in vs]
    return F


def lagrange_interpolate(points, values):
    """The unique F of degree < n with F(a_i) = values[i]."""
    points = list(points)
    if len(points) != len(values):
        raise DimensionMismatch("one value per point is required")
    seqs = [MultSeq((a,), validated=True) for a in points]
    return hermite_interpolate(seqs, [[v] for v in values])


def hasse_samples(F, seqs):
    """Targets D_{a_{i,j}}(F) for every prefix, in the layout hermite_interpolate reads."""
    return [list(taylor_expand(F, _as_seq(s).points)[1]) for s in seqs]
