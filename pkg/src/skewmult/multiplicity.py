"""Hasse derivatives, multiplicities and multiplicity sequences.

A multiplicity sequence ``a = (a_1, ..., a_r)`` is one where a_1 is the only
right zero of ``P_a = (x - a_r) ... (x - a_1)``. Validity is decided pair by
pair: ``a_{i+1}`` must be a conjugate ``a_i^beta`` and ``beta`` must avoid the
subspace ``V_{a_i}``, the image of ``phi(b) = D_a(b) - a b``.

All linear algebra here runs over the coordinate field k of the ring
(F_p, Q, or F_p(z^p)). Every map involved is right k-linear because k sits
inside each centralizer K_a.
"""

from itertools import product as _cartesian

from . import linalg
from .errors import (
    EmptySequence, InvalidSequence, NotEnumerable, NotPIndependent,
    UnsupportedRing, ValidationMissing, ZeroPolynomial,
)
from .ring import conjugate, dmap_apply
from .rings import FiniteField, GaussianRationals, Quaternions
from .skewpoly import (
    PointSet, SkewPoly, eval_high, eval_point, is_p_independent, lclm,
    linear_product, minimal_poly, right_divmod, zero_set_brute,
)


class MultSeq:
    """A point sequence (a_1, ..., a_r) with its product P_a.

    ``validated`` is only set by :meth:`validate` (or :func:`extend_multseq`),
    never inferred, so operations that need a genuine multiplicity sequence
    can refuse raw input.
    """

    __slots__ = ("points", "poly", "validated")

    def __init__(self, points, validated=False):
        points = tuple(points)
        if not points:
            raise EmptySequence("multiplicity sequence must be non-empty")
        self.points = points
        self.poly = linear_product(points)
        self.validated = validated

    @property
    def ctx(self):
        return self.points[0].ctx

    @property
    def head(self):
        return self.points[0]

    def __len__(self):
        return len(self.points)

    def prefix(self, j):
        return MultSeq(self.points[:j], self.validated)

    def validate(self):
        """Return a validated copy, or raise InvalidSequence."""
        if not validate_multseq(self.points):
            raise InvalidSequence(f"{self} is not a multiplicity sequence")
        return MultSeq(self.points, validated=True)

    def __eq__(self, other):
        return isinstance(other, MultSeq) and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __str__(self):
        return "[" + "; ".join(str(a) for a in self.points) + "]"

    def __repr__(self):
        flag = ", validated" if self.validated else ""
        return f"MultSeq({self}{flag})"


def _points(a_seq):
    pts = tuple(a_seq.points) if isinstance(a_seq, MultSeq) else tuple(a_seq)
    if not pts:
        raise EmptySequence("empty point sequence")
    return pts


# -- Hasse derivatives --------------------------------------------------------------

def taylor_expand(F, a_seq):
    """Return (G, (D_1, ..., D_r)) with F = G P_r + D_r P_{r-1} + ... + D_1.

    ``P_j`` is the product of the first j linear factors; ``D_j`` is the
    Hasse derivative of F at the prefix of length j.
    """
    pts = _points(a_seq)
    Q = F
    ds = []
    for a in pts:
        Q, R = right_divmod(Q, SkewPoly.linear(a))
        ds.append(R[0])
    return Q, tuple(ds)


def hasse_derivative(F, a_seq):
    """D_a(F): the coefficient of x^(r-1) in the remainder of F by P_a."""
    return taylor_expand(F, a_seq)[1][-1]


def hasse_witness(F, a_seq):
    """Return (G, D, H) with F = G P_a + D H, H monic of degree r - 1.

    When D = 0 the remainder itself must vanish; then H is reported as None.
    """
    pts = _points(a_seq)
    G, ds = taylor_expand(F, pts)
    D = ds[-1]
    ctx = F.ctx
    if not D:
        return G, D, None
    R = SkewPoly(ctx)
    for j, dj in enumerate(ds):
        base = linear_product(pts[:j]) if j else SkewPoly.constant(ctx.one)
        R = R + base.left_scale(dj)
    return G, D, R.left_scale(ctx.inv(D))


def taylor_reconstruct(G, ds, a_seq):
    """Inverse of :func:`taylor_expand`."""
    pts = _points(a_seq)
    ctx = pts[0].ctx
    F = G * linear_product(pts)
    for j, dj in enumerate(ds):
        base = linear_product(pts[:j]) if j else SkewPoly.constant(ctx.one)
        F = F + base.left_scale(dj)
    return F


# -- multiplicity I --------------------------------------------------------------

def mult_I_check(F, a, r):
    """True iff (x - a)^r right-divides F.

    Also computes the derivative criterion (all Hasse derivatives at
    (a, ..., a) of lengths 1..r vanish) and checks both agree.
    """
    if not F:
        raise ZeroPolynomial("multiplicity of a zero of the zero polynomial")
    if r < 1:
        raise ValueError("multiplicity must be positive")
    by_division = not eval_high(F, SkewPoly.linear(a) ** r)
    _, ds = taylor_expand(F, (a,) * r)
    by_derivatives = all(not d for d in ds)
    assert by_division == by_derivatives, "derivative criterion disagrees with division"
    return by_division


# -- coordinate linear algebra ---------------------------------------------------------

def _field(ctx):
    if ctx.base_dim is None:
        raise UnsupportedRing(f"{ctx.ring_id} has no finite coordinatization")
    return ctx.base_field


def _columns(ctx, fn):
    """Matrix (as columns of coordinates) of a right k-linear map F -> F."""
    return [list(ctx.coordinates(fn(e))) for e in ctx.basis()]


def _phi(a):
    ctx = a.ctx
    return lambda b: ctx.sub(dmap_apply(a, b), ctx.mul(a, b))


def vspace_columns(a):
    """Coordinate columns spanning V_a, the image of phi_a."""
    return _columns(a.ctx, _phi(a))


def centralizer_basis(a):
    """A k-basis of the centralizer K_a (the kernel of phi_a)."""
    ctx = a.ctx
    k = _field(ctx)
    return [ctx.from_coordinates(v) for v in linalg.kernel(vspace_columns(a), k)]


def centralizer_dim(a):
    """dim_k K_a over the coordinate field k."""
    ctx = a.ctx
    k = _field(ctx)
    return ctx.base_dim - linalg.rank(vspace_columns(a), k)


def class_rank(a):
    """m = dim of F as a right K_a-vector space (the rank of the class of a)."""
    return a.ctx.base_dim // centralizer_dim(a)


def hyperplane_dim(a):
    """dim of V_a as a right K_a-vector space; equals class_rank(a) - 1."""
    ctx = a.ctx
    k = _field(ctx)
    kdim = centralizer_dim(a)
    vdim = linalg.rank(vspace_columns(a), k)
    assert vdim % kdim == 0
    return vdim // kdim


def in_vspace(a, beta):
    """True iff beta lies in V_a = {D_a(b) - a b : b in F}."""
    ctx = a.ctx
    k = _field(ctx)
    return linalg.in_span(vspace_columns(a), list(ctx.coordinates(beta)), k)


def conjugator(a, b):
    """Some beta != 0 with a^beta = b, or None if a and b are not conjugate.

    Solves the right k-linear equation sigma(beta) a + delta(beta) = b beta.
    """
    ctx = a.ctx
    k = _field(ctx)
    cols = _columns(ctx, lambda t: ctx.sub(dmap_apply(a, t), ctx.mul(b, t)))
    ker = linalg.kernel(cols, k)
    if not ker:
        return None
    beta = ctx.from_coordinates(ker[0])
    assert conjugate(a, beta) == b
    return beta


def are_conjugate(a, b):
    return conjugator(a, b) is not None


# -- multiplicity sequences --------------------------------------------------------

def pair_is_valid(a, b):
    """(a, b) is a multiplicity sequence: b = a^beta with beta outside V_a."""
    beta = conjugator(a, b)
    return beta is not None and not in_vspace(a, beta)


def validate_multseq(a_seq):
    """Decide whether (a_1, ..., a_r) is a multiplicity sequence.

    Works on every ring with a finite coordinatization (including F_p(z)).
    """
    pts = _points(a_seq)
    return all(pair_is_valid(pts[i], pts[i + 1]) for i in range(len(pts) - 1))


def _ff_pair(ctx, a, b):
    if not a or not b:
        return not a and not b
    ratio = ctx.mul(b, ctx.inv(a))
    for beta in ctx.elements():
        if beta and ctx.mul(ctx.sigma(beta), ctx.inv(beta)) == ratio:
            return bool(ctx.trace(ctx.mul(beta, ctx.inv(a))))
    return False


def _quat_pair(ctx, a, b):
    if ctx.is_real(a):
        return a == b
    return ctx.is_conjugate(a, b) and ctx.conj(b) != a


def _gauss_pair(ctx, a, b):
    if not a or not b:
        return not a and not b
    return ctx.mod_sq(a) == ctx.mod_sq(b) and ctx.sigma(b) != ctx.neg(a)


def validate_multseq_specialized(a_seq):
    """Closed-form validity test for finite fields, quaternions and Q(i)."""
    pts = _points(a_seq)
    ctx = pts[0].ctx
    if isinstance(ctx, FiniteField):
        test = _ff_pair
    elif isinstance(ctx, Quaternions):
        test = _quat_pair
    elif isinstance(ctx, GaussianRationals):
        test = _gauss_pair
    else:
        raise UnsupportedRing(f"no closed-form criterion for {ctx.ring_id}")
    return all(test(ctx, pts[i], pts[i + 1]) for i in range(len(pts) - 1))


def validate_multseq_brute(a_seq):
    """a_1 is the only right zero of P_a (by enumeration)."""
    pts = _points(a_seq)
    return zero_set_brute(linear_product(pts)) == [pts[0]]


def validate_multseq_pairwise(a_seq):
    """Every consecutive pair is itself a multiplicity sequence (by enumeration)."""
    pts = _points(a_seq)
    return all(validate_multseq_brute(pts[i:i + 2]) for i in range(len(pts) - 1))


def unique_factorization_check(F, a_seq):
    """True iff peeling right roots of F in every possible way always yields a_seq.

    Depth-first over all right roots at each level; F must be P_a.
    """
    pts = _points(a_seq)
    ctx = pts[0].ctx
    if not ctx.enumerable:
        raise NotEnumerable(f"{ctx.ring_id} is not enumerable")

    def peel(P, depth):
        if P.degree == 0:
            return depth == len(pts)
        roots = zero_set_brute(P)
        if not roots:
            return False
        for b in roots:
            if depth >= len(pts) or b != pts[depth]:
                return False
            Q, R = right_divmod(P, SkewPoly.linear(b))
            assert not R
            if not peel(Q, depth + 1):
                return False
        return True

    return peel(F.monic(), 0)


def _candidates(ctx):
    basis = ctx.basis()
    yield from basis
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            yield ctx.add(basis[i], basis[j])


def extend_multseq(a_seq):
    """Append a_{r+1} = a_r^beta for the first candidate beta outside V_{a_r}.

    Candidates are the coordinate basis vectors in order, then sums of two
    of them. The input must be validated.
    """
    if not isinstance(a_seq, MultSeq) or not a_seq.validated:
        raise ValidationMissing("extend_multseq needs a validated MultSeq")
    a = a_seq.points[-1]
    ctx = a.ctx
    cols = vspace_columns(a)
    k = _field(ctx)
    for beta in _candidates(ctx):
        if beta and not linalg.in_span(cols, list(ctx.coordinates(beta)), k):
            return MultSeq(a_seq.points + (conjugate(a, beta),), validated=True)
    raise UnsupportedRing("no witness outside V_a among the candidates")


# -- multiplicity II --------------------------------------------------------------

def mult_II_check(F, a_seq):
    """True iff P_a right-divides F, for a validated sequence a.

    Checked against the derivative criterion (all prefix Hasse derivatives vanish).
    """
    if not isinstance(a_seq, MultSeq) or not a_seq.validated:
        raise ValidationMissing("mult_II_check needs a validated MultSeq")
    by_division = not right_divmod(F, a_seq.poly)[1]
    _, ds = taylor_expand(F, a_seq.points)
    by_derivatives = all(not d for d in ds)
    assert by_division == by_derivatives, "derivative criterion disagrees with division"
    return by_division


# -- conjugacy classes ------------------------------------------------------------

def conjclass_minpoly_generic(a):
    """F_{C(a)} as the LCLM of x - a^e over the coordinate basis vectors e."""
    conj = [conjugate(a, e) for e in a.ctx.basis()]
    return minimal_poly(PointSet.simple(conj))


def conjclass_minpoly(a):
    """Minimal polynomial of the conjugacy class of a.

    Closed forms: x^m - N(a) over a cyclic field extension with sigma of
    order m, x^2 - 2 Re(a) x + |a|^2 for a non-real quaternion, x - a for a
    central point. Rings without a closed form use the LCLM construction.
    """
    ctx = a.ctx
    x = SkewPoly.x(ctx)
    if isinstance(ctx, (FiniteField, GaussianRationals)):
        if not a:
            return x
        return SkewPoly.monomial(ctx, ctx.sigma_order) - ctx.norm(a)
    if isinstance(ctx, Quaternions):
        if ctx.is_real(a):
            return x - a
        return SkewPoly(ctx, [ctx.from_rational(ctx.mod_sq(a)),
                              ctx.from_rational(-2 * ctx.re(a)), ctx.one])
    return conjclass_minpoly_generic(a)


def conjclass_minpoly_pow(a, r):
    if r < 1:
        raise ValueError("power must be positive")
    return conjclass_minpoly(a) ** r


def mult_on_class_check(F, a, r):
    """True iff F_{C(a)}^r right-divides F."""
    if not F:
        raise ZeroPolynomial("zero polynomial")
    return not right_divmod(F, conjclass_minpoly_pow(a, r))[1]


def conjugacy_class_brute(a):
    """All conjugates of a, by enumeration (finite fields)."""
    ctx = a.ctx
    if not ctx.enumerable:
        raise NotEnumerable(f"{ctx.ring_id} is not enumerable")
    found = {conjugate(a, beta) for beta in ctx.elements() if beta}
    return [b for b in ctx.elements() if b in found]


def factor_p_independent(omega):
    """Points (c_1, ..., c_N) with F_Omega = (x - c_N) ... (x - c_1).

    Omega is a P-independent set of powers (x - a_i)^{r_i} (or of simple
    points). The factors come from the chain of sets obtained by raising one
    exponent at a time: each step adds exactly one to the degree of the
    minimal polynomial, and the quotient of consecutive minimal polynomials is
    the next linear factor.
    """
    if not isinstance(omega, PointSet):
        omega = PointSet.simple(omega)
    if not is_p_independent(omega):
        raise NotPIndependent("the point set is not P-independent")
    ctx = omega.ctx
    out = []
    current = None
    for a, kind, data, _P in omega.entries:
        r = data if kind == "power" else 1
        for j in range(1, r + 1):
            step = SkewPoly.linear(a) ** j
            nxt = step.monic() if current is None else lclm(current, step)
            if current is None:
                quotient = nxt
            else:
                quotient, rem = right_divmod(nxt, current)
                assert not rem and quotient.degree == 1
            out.append(ctx.neg(quotient[0]))
            current = nxt
    assert linear_product(out) == current
    return out


def all_sequences(ctx, length):
    """Every point sequence of the given length over an enumerable ring."""
    elems = list(ctx.elements())
    for pts in _cartesian(elems, repeat=length):
        yield pts
