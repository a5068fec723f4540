"""Skew polynomials in F[x; sigma, delta].

Polynomials carry left coefficients, ``F = sum F_i x^i``, and multiply by the
commutation rule ``x a = sigma(a) x + delta(a)``. The ring is right Euclidean,
which gives right division, right evaluation at points and at higher-degree
polynomials, GCRD/LCLM, and minimal polynomials of finite point sets.
"""

from itertools import product as _cartesian

from .errors import (
    BothZero, ContextMismatch, DegreeTooSmall, DivisionByZeroPoly, EmptySet,
    NotEnumerable, SigmaNotInvertible, ZeroPolynomial,
)
from .ring import Element, dmap_apply

#: degree of the zero polynomial; compares below every natural number
NEG_INF = float("-inf")


class SkewPoly:
    """An immutable element of F[x; sigma, delta].

    ``coeffs[i]`` is the left coefficient of ``x^i``; the tuple is trimmed so
    the last entry is nonzero, and the zero polynomial has no coefficients.
    """

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs=()):
        coeffs = list(coeffs)
        zero = ctx.zero
        while coeffs and coeffs[-1] == zero:
            coeffs.pop()
        self.ctx = ctx
        self.coeffs = tuple(c if isinstance(c, Element) else ctx.from_rational(c) for c in coeffs)

    # -- constructors -----------------------------------------------------------------
    @classmethod
    def constant(cls, c):
        return cls(c.ctx, [c])

    @classmethod
    def x(cls, ctx):
        return cls(ctx, [ctx.zero, ctx.one])

    @classmethod
    def monomial(cls, ctx, n, c=None):
        c = ctx.one if c is None else c
        return cls(ctx, [ctx.zero] * n + [c])

    @classmethod
    def linear(cls, a):
        """The polynomial x - a."""
        ctx = a.ctx
        return cls(ctx, [ctx.neg(a), ctx.one])

    # -- basic properties -----------------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ctx.zero

    @property
    def lc(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.ctx.one

    def monic(self):
        """Left-multiply by the inverse of the leading coefficient."""
        inv = self.ctx.inv(self.lc)
        return self.left_scale(inv)

    def left_scale(self, c):
        mul = self.ctx.mul
        return SkewPoly(self.ctx, [mul(c, a) for a in self.coeffs])

    def __eq__(self, other):
        if isinstance(other, SkewPoly):
            return self.ctx == other.ctx and self.coeffs == other.coeffs
        if isinstance(other, (Element, int)):
            return self == _as_poly(self.ctx, other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"SkewPoly({format_poly(self)!r})"

    # -- arithmetic -------------------------------------------------------------------
    def _other(self, other):
        if isinstance(other, SkewPoly):
            if other.ctx != self.ctx:
                raise ContextMismatch("polynomials over different contexts")
            return other
        return _as_poly(self.ctx, other)

    def __add__(self, other):
        other = self._other(other)
        n = max(len(self.coeffs), len(other.coeffs))
        add = self.ctx.add
        return SkewPoly(self.ctx, [add(self[i], other[i]) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        neg = self.ctx.neg
        return SkewPoly(self.ctx, [neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        return poly_mul(self, self._other(other))

    def __rmul__(self, other):
        return poly_mul(self._other(other), self)

    def __pow__(self, n):
        result = SkewPoly.constant(self.ctx.one)
        for _ in range(n):
            result = poly_mul(result, self)
        return result

    def __call__(self, a):
        """Right evaluation at a point or a polynomial."""
        if isinstance(a, SkewPoly):
            return eval_high(self, a)
        return eval_point(self, a)


def _as_poly(ctx, c):
    if isinstance(c, SkewPoly):
        return c
    if not isinstance(c, Element):
        c = ctx.from_rational(c)
    return SkewPoly(ctx, [c])


def x_times(F):
    """x * F, using x a = sigma(a) x + delta(a)."""
    ctx = F.ctx
    if not F.coeffs:
        return F
    out = [ctx.zero] + [ctx.sigma(c) for c in F.coeffs]
    if not ctx.delta_is_zero:
        for i, c in enumerate(F.coeffs):
            out[i] = ctx.add(out[i], ctx.delta(c))
    return SkewPoly(ctx, out)


def poly_mul(F, G):
    """Product F*G in F[x; sigma, delta]."""
    if F.ctx != G.ctx:
        raise ContextMismatch("polynomials over different contexts")
    ctx = F.ctx
    if not F.coeffs or not G.coeffs:
        return SkewPoly(ctx)
    out = [ctx.zero] * (len(F.coeffs) + len(G.coeffs) - 1)
    add, mul = ctx.add, ctx.mul
    xg = G
    for i, f in enumerate(F.coeffs):
        if i:
            xg = x_times(xg)
        if f != ctx.zero:
            for j, c in enumerate(xg.coeffs):
                out[j] = add(out[j], mul(f, c))
    return SkewPoly(ctx, out)


def linear_product(points):
    """P_a = (x - a_r) ... (x - a_2)(x - a_1) for points (a_1, ..., a_r)."""
    points = list(points)
    if not points:
        raise EmptySet("empty point sequence")
    P = SkewPoly.linear(points[0])
    for a in points[1:]:
        P = poly_mul(SkewPoly.linear(a), P)
    return P


# -- Euclidean structure ---------------------------------------------------------------

def right_divmod(F, P):
    """Return (Q, R) with F = Q*P + R and deg R < deg P."""
    if F.ctx != P.ctx:
        raise ContextMismatch("polynomials over different contexts")
    if not P.coeffs:
        raise DivisionByZeroPoly("division by the zero polynomial")
    ctx = F.ctx
    d = P.degree
    R = list(F.coeffs)
    if len(R) - 1 < d:
        return SkewPoly(ctx), F
    # xP[k] = x^k * P
    shifts = [P]
    for _ in range(len(R) - 1 - d):
        shifts.append(x_times(shifts[-1]))
    Q = [ctx.zero] * (len(R) - d)
    add, sub, mul, inv, sigma = ctx.add, ctx.sub, ctx.mul, ctx.inv, ctx.sigma
    lead = P.lc
    lead_pows = [lead]
    for _ in range(len(R) - 1 - d):
        lead_pows.append(sigma(lead_pows[-1]))
    for top in range(len(R) - 1, d - 1, -1):
        r = R[top]
        if r == ctx.zero:
            continue
        k = top - d
        c = mul(r, inv(lead_pows[k]))
        Q[k] = add(Q[k], c)
        for j, s in enumerate(shifts[k].coeffs):
            R[j] = sub(R[j], mul(c, s))
    return SkewPoly(ctx, Q), SkewPoly(ctx, R[:d])


def left_divmod(F, P):
    """Return (Q, R) with F = P*Q + R and deg R < deg P; needs sigma invertible."""
    ctx = F.ctx
    if F.ctx != P.ctx:
        raise ContextMismatch("polynomials over different contexts")
    if not ctx.sigma_inverse_available:
        raise SigmaNotInvertible(f"sigma is not invertible on {ctx.ring_id}")
    if not P.coeffs:
        raise DivisionByZeroPoly("division by the zero polynomial")
    d = P.degree
    R = F
    Q = SkewPoly(ctx)
    lead_inv = ctx.inv(P.lc)
    while R.coeffs and R.degree >= d:
        k = R.degree - d
        # P * (c x^k) has leading coefficient lc(P) sigma^d(c)
        c = ctx.mul(lead_inv, R.lc)
        for _ in range(d):
            c = ctx.sigma_inv(c)
        term = SkewPoly.monomial(ctx, k, c)
        Q = Q + term
        R = R - poly_mul(P, term)
    return Q, R


def eval_point(F, a):
    """Right evaluation F(a): the remainder of F by x - a.

    Uses F(a) = sum F_i N_i(a) with N_0 = 1, N_{i+1} = D_a(N_i).
    """
    ctx = F.ctx
    total = ctx.zero
    n = ctx.one
    add, mul = ctx.add, ctx.mul
    for i, c in enumerate(F.coeffs):
        if i:
            n = dmap_apply(a, n)
        total = add(total, mul(c, n))
    return total


def eval_high(F, P):
    """F(P): remainder of F by right division by P (deg P >= 1)."""
    if not P.coeffs or P.degree < 1:
        raise DegreeTooSmall("evaluation polynomial must have degree >= 1")
    return right_divmod(F, P)[1]


def right_divides(P, F):
    """True iff F = Q*P for some Q."""
    return not right_divmod(F, P)[1]


def _check_pair(F, G):
    if F.ctx != G.ctx:
        raise ContextMismatch("polynomials over different contexts")


def _euclid(F, G, want_u=True, want_v=True):
    """Extended right Euclidean algorithm.

    Returns (r0, u0, v0, u1) where r0 = u0 F + v0 G is a GCRD (not yet
    monic) and u1 F is a common left multiple of F and G of least degree.
    Cofactors that are not wanted are left as None.
    """
    ctx = F.ctx
    one, zero = SkewPoly.constant(ctx.one), SkewPoly(ctx)
    r0, r1 = F, G
    u0, u1 = (one, zero) if want_u else (None, None)
    v0, v1 = (zero, one) if want_v else (None, None)
    while r1.coeffs:
        q, r = right_divmod(r0, r1)
        r0, r1 = r1, r
        if want_u:
            u0, u1 = u1, u0 - q * u1
        if want_v:
            v0, v1 = v1, v0 - q * v1
    return r0, u0, v0, u1


def gcrd_extended(F, G):
    """Extended right Euclid: (D, U, V) with D = U*F + V*G and D the monic GCRD."""
    _check_pair(F, G)
    if not F.coeffs and not G.coeffs:
        raise BothZero("gcrd of two zero polynomials")
    r0, u0, v0, _ = _euclid(F, G)
    inv = F.ctx.inv(r0.lc)
    return r0.left_scale(inv), u0.left_scale(inv), v0.left_scale(inv)


def gcrd(F, G):
    """Monic greatest common right divisor."""
    _check_pair(F, G)
    if not F.coeffs and not G.coeffs:
        raise BothZero("gcrd of two zero polynomials")
    return _euclid(F, G, want_u=False, want_v=False)[0].monic()


def lclm(F, G):
    """Monic least left common multiple."""
    _check_pair(F, G)
    if not F.coeffs or not G.coeffs:
        raise BothZero("lclm needs two nonzero polynomials")
    # the final cofactors satisfy u1 F + v1 G = 0, so u1 F is the LCLM
    u1 = _euclid(F, G, want_v=False)[3]
    return poly_mul(u1, F).monic()


def gcrd_lclm(F, G):
    """(gcrd, lclm) from a single run of the Euclidean algorithm."""
    _check_pair(F, G)
    if not F.coeffs or not G.coeffs:
        raise BothZero("lclm needs two nonzero polynomials")
    r0, _, _, u1 = _euclid(F, G, want_v=False)
    return r0.monic(), poly_mul(u1, F).monic()


# -- point sets --------------------------------------------------------------------

class PointSet:
    """A finite set Omega of evaluation polynomials.

    Entries are ``(point, kind, data, P)`` with kind ``"simple"`` (x - a),
    ``"power"`` ((x - a)^r, data = r) or ``"sequence"`` (P_a, data = the
    point tuple). Entries whose polynomials coincide are merged, keeping the
    first one, since Omega is a set of polynomials.
    """

    def __init__(self, ctx, entries=()):
        self.ctx = ctx
        self.entries = []
        seen = set()
        for entry in entries:
            P = entry[3]
            if P.ctx != ctx:
                raise ContextMismatch("point set entries over different contexts")
            if P in seen:
                continue
            seen.add(P)
            self.entries.append(entry)

    @classmethod
    def simple(cls, points):
        points = list(points)
        if not points:
            raise EmptySet("empty point set")
        return cls(points[0].ctx, [(a, "simple", 1, SkewPoly.linear(a)) for a in points])

    @classmethod
    def powers(cls, pairs):
        """From (a, r) pairs, the set {(x - a)^r}."""
        pairs = list(pairs)
        if not pairs:
            raise EmptySet("empty point set")
        return cls(pairs[0][0].ctx,
                   [(a, "power", r, SkewPoly.linear(a) ** r) for a, r in pairs])

    @classmethod
    def sequences(cls, seqs):
        """From multiplicity sequences (anything with ``points`` and ``poly``)."""
        seqs = list(seqs)
        if not seqs:
            raise EmptySet("empty point set")
        return cls(seqs[0].ctx,
                   [(s.points[0], "sequence", tuple(s.points), s.poly) for s in seqs])

    @property
    def polys(self):
        return [e[3] for e in self.entries]

    @property
    def points(self):
        return [e[0] for e in self.entries]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.polys)

    def union(self, other):
        return PointSet(self.ctx, self.entries + other.entries)

    def __repr__(self):
        return f"PointSet([{', '.join(str(P) for P in self.polys)}])"


def _as_pointset(omega):
    if isinstance(omega, PointSet):
        return omega
    omega = list(omega)
    if not omega:
        raise EmptySet("empty point set")
    if isinstance(omega[0], SkewPoly):
        return PointSet(omega[0].ctx, [(None, "poly", None, P) for P in omega])
    return PointSet.simple(omega)


def minimal_poly(omega):
    """F_Omega, the monic LCLM of the polynomials in Omega (left fold in order)."""
    omega = _as_pointset(omega)
    polys = omega.polys
    if not polys:
        raise EmptySet("empty point set")
    M = polys[0].monic()
    for P in polys[1:]:
        M = lclm(M, P)
    return M


def is_p_independent(omega):
    """deg F_Omega equals the sum of the degrees in Omega."""
    omega = _as_pointset(omega)
    return minimal_poly(omega).degree == sum(P.degree for P in omega.polys)


# -- brute force over finite rings -------------------------------------------------------

def _require_enumerable(ctx):
    if not ctx.enumerable:
        raise NotEnumerable(f"{ctx.ring_id} is not enumerable")


def zero_set_brute(F):
    """All right zeros of F in enumeration order."""
    _require_enumerable(F.ctx)
    if not F.coeffs:
        raise ZeroPolynomial("every element is a zero of 0")
    return [a for a in F.ctx.elements() if eval_point(F, a) == F.ctx.zero]


def p_closure_brute(omega):
    """Zeros of the minimal polynomial of a finite set of points."""
    omega = list(omega)
    if not omega:
        raise EmptySet("empty point set")
    _require_enumerable(omega[0].ctx)
    return zero_set_brute(minimal_poly(omega))


def all_polys(ctx, max_degree):
    """Every polynomial of degree <= max_degree over an enumerable ring."""
    _require_enumerable(ctx)
    elems = list(ctx.elements())
    for cs in _cartesian(elems, repeat=max_degree + 1):
        yield SkewPoly(ctx, cs)


def random_poly(ctx, rng, degree, monic=False):
    """Random polynomial of exact degree ``degree``."""
    coeffs = [ctx.random_element(rng) for _ in range(degree)]
    coeffs.append(ctx.one if monic else ctx.random_nonzero(rng))
    return SkewPoly(ctx, coeffs)


# -- printing ---------------------------------------------------------------------

def _is_atomic(text):
    body = text[1:] if text.startswith("-") else text
    return not any(ch in body for ch in "+-/")


def format_poly(F, var="x"):
    """Canonical text, e.g. ``(2+g)*x^3 + x + 1``; re-parses to the same polynomial."""
    if not F.coeffs:
        return "0"
    ctx = F.ctx
    parts = []
    for i in range(len(F.coeffs) - 1, -1, -1):
        c = F.coeffs[i]
        if c == ctx.zero:
            continue
        text = ctx.format_element(c)
        neg = False
        if text.startswith("-") and _is_atomic(text):
            neg, text = True, text[1:]
        if i == 0:
            body = f"({text})" if parts and text.startswith("-") else text
        else:
            mono = var if i == 1 else f"{var}^{i}"
            if text == "1":
                body = mono
            elif _is_atomic(text):
                body = f"{text}*{mono}"
            else:
                body = f"({text})*{mono}"
        if not parts:
            parts.append("-" + body if neg else body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)
