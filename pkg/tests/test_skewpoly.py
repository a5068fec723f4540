import pytest

import oracle
from helpers import F9, F27, GAUSS, QUAT, RATFUN, RINGS, frozen, rand_poly, rand_poly_or_zero, rng, x_of
from skewmult import (
    NEG_INF, BothZero, ContextMismatch, DegreeTooSmall, DivisionByZeroPoly, EmptySet,
    NotEnumerable, PointSet, SigmaNotInvertible, SkewPoly, ZeroPolynomial, conjugate,
    dmap_apply, eval_high, eval_point, gcrd, gcrd_extended, is_p_independent, lclm,
    left_divmod, linear_product, minimal_poly, p_closure_brute, poly_mul, right_divmod,
    zero_set_brute,
)
from skewmult.skewpoly import gcrd_lclm

N_RANDOM = 200


def strs(elems):
    return [str(a) for a in elems]


# -- arithmetic -------------------------------------------------------------------

def test_zero_degree_sentinel():
    zero = SkewPoly(F9)
    assert zero.degree == NEG_INF
    assert zero.degree < 0 and zero.degree != -1
    with pytest.raises(ZeroPolynomial):
        zero.lc


def test_mul_examples():
    g = F9.gen
    x = x_of(F9)
    assert x * g == (-g) * x
    z = RATFUN.gen
    xr = x_of(RATFUN)
    assert xr * z == z * xr + 1
    a = GAUSS.make(0, 2)
    xg = x_of(GAUSS)
    assert (xg - a) * (xg - a) == xg ** 2 - 4


def test_mul_context_mismatch():
    with pytest.raises(ContextMismatch):
        poly_mul(x_of(F9), x_of(F27))


@pytest.mark.parametrize("name", sorted(RINGS))
def test_mul_matches_naive_oracle(name):
    ctx = RINGS[name]
    r = rng(11)
    for _ in range(60):
        F, G = rand_poly(ctx, r, 4), rand_poly(ctx, r, 4)
        FG = F * G
        assert oracle.as_dict(FG) == oracle.naive_mul(ctx, oracle.as_dict(F), oracle.as_dict(G))
        assert FG.degree == F.degree + G.degree


@pytest.mark.parametrize("name", sorted(RINGS))
def test_ring_axioms(name):
    ctx = RINGS[name]
    r = rng(12)
    for _ in range(40):
        F, G, H = (rand_poly(ctx, r, 3) for _ in range(3))
        assert (F * G) * H == F * (G * H)
        assert F * (G + H) == F * G + F * H
        assert (G + H) * F == G * F + H * F


# -- division and evaluation --------------------------------------------------------

def test_right_divmod_examples():
    g = F9.gen
    x = x_of(F9)
    F = (x ** 3 + g * x + 1).monic()
    Q, R = right_divmod(F, F)
    assert Q == 1 and R.is_zero()
    assert right_divmod(x ** 2 + 2, x - g)[1].is_zero()
    xg = x_of(GAUSS)
    assert right_divmod(xg ** 2, xg - 1)[1] == 1
    with pytest.raises(DivisionByZeroPoly):
        right_divmod(x, SkewPoly(F9))


@pytest.mark.parametrize("name", sorted(RINGS))
def test_right_division_roundtrip(name):
    ctx = RINGS[name]
    r = rng(13)
    for _ in range(N_RANDOM):
        F, P = rand_poly_or_zero(ctx, r), rand_poly(ctx, r)
        Q, R = right_divmod(F, P)
        assert Q * P + R == F
        assert R.degree < P.degree


@pytest.mark.parametrize("name", sorted(RINGS))
def test_left_division_roundtrip(name):
    ctx = RINGS[name]
    r = rng(14)
    for _ in range(N_RANDOM):
        F, P = rand_poly_or_zero(ctx, r), rand_poly(ctx, r)
        Q, R = left_divmod(F, P)
        assert P * Q + R == F
        assert R.degree < P.degree


def test_left_divmod_examples():
    x = x_of(QUAT)
    F = x ** 2 + QUAT.make(0, 1) * x + 3
    assert left_divmod(F, F) == (1, SkewPoly(QUAT))
    P = x ** 3
    assert left_divmod(F, P) == (SkewPoly(QUAT), F)


def test_left_divmod_needs_sigma_inverse():
    from skewmult import FiniteField

    class NoInverse(FiniteField):
        sigma_inverse_available = False

    ctx = NoInverse(3, 2, modulus=(1, 0, 1))
    x = SkewPoly.x(ctx)
    with pytest.raises(SigmaNotInvertible):
        left_divmod(x ** 2, x)


def test_eval_examples():
    z = RATFUN.gen
    x = x_of(RATFUN)
    assert eval_point(x ** 2, z.inverse()) == 0
    for name, ctx in RINGS.items():
        a = ctx.random_element(rng(15))
        assert eval_point(SkewPoly.linear(a), a) == 0


def test_eval_f9_frozen_zero_set():
    data = frozen()["F9_zeros"]
    x = x_of(F9)
    # brute force finds four zeros: x^2 + 2 = x^2 - 1 and the class of 2g is {g, 2g, 1, 2}
    assert strs(zero_set_brute(x ** 2 + 2)) == data["x^2+2"] == ["g", "2*g", "1", "2"]
    assert strs(zero_set_brute(x ** 2)) == data["x^2"]


@pytest.mark.parametrize("name", sorted(RINGS))
def test_eval_matches_remainder_oracle(name):
    ctx = RINGS[name]
    r = rng(16)
    for _ in range(80):
        F, a = rand_poly_or_zero(ctx, r, 4), ctx.random_element(r)
        expected = oracle.naive_eval(ctx, oracle.as_dict(F), a)
        assert eval_point(F, a) == expected
        R = right_divmod(F, SkewPoly.linear(a))[1]
        assert R[0] == expected


@pytest.mark.parametrize("name", sorted(RINGS))
def test_connecting_evaluations(name):
    ctx = RINGS[name]
    r = rng(17)
    for _ in range(N_RANDOM):
        F, a, beta = rand_poly_or_zero(ctx, r), ctx.random_element(r), ctx.random_nonzero(r)
        acc, d = ctx.zero, beta
        for i, c in enumerate(F.coeffs):
            if i:
                d = dmap_apply(a, d)
            acc = acc + c * d
        assert eval_point(F, conjugate(a, beta)) * beta == acc


@pytest.mark.parametrize("name", sorted(RINGS))
def test_product_rule(name):
    ctx = RINGS[name]
    r = rng(18)
    for n in range(N_RANDOM):
        F, G, a = rand_poly(ctx, r, 4), rand_poly(ctx, r, 4), ctx.random_element(r)
        if n % 5 == 0:
            G = rand_poly(ctx, r, 3) * SkewPoly.linear(a)
        Ga = eval_point(G, a)
        if not Ga:
            assert eval_point(F * G, a) == 0
        else:
            assert eval_point(F * G, a) == eval_point(F, conjugate(a, Ga)) * Ga


def test_eval_high():
    g = F9.gen
    x = x_of(F9)
    F = x ** 2 + g
    assert eval_high(F, x ** 3 + 1) == F
    G = x ** 2 + 2 * x
    P = x - g
    assert eval_high(G * P, P).is_zero()
    P2 = (x - g) * (x - 2 * g)
    assert P2 != x ** 2
    assert eval_high(x ** 2, P2) == x ** 2 - P2
    assert not eval_high(x ** 2, P2).is_zero()
    with pytest.raises(DegreeTooSmall):
        eval_high(F, SkewPoly.constant(g))


@pytest.mark.parametrize("name", sorted(RINGS))
def test_eval_high_consistent_with_division(name):
    ctx = RINGS[name]
    r = rng(19)
    for n in range(100):
        P = rand_poly(ctx, r, 3)
        if P.degree < 1:
            continue
        F = rand_poly(ctx, r, 3) * P if n % 2 else rand_poly(ctx, r)
        assert eval_high(F, P).is_zero() == right_divmod(F, P)[1].is_zero()


# -- gcrd / lclm ----------------------------------------------------------------

def test_gcrd_lclm_examples():
    g = F9.gen
    x = x_of(F9)
    F = 2 * x ** 2 + g * x + 1
    assert gcrd(F, F) == F.monic() and lclm(F, F) == F.monic()
    M = lclm(x - g, x - 2 * g)
    assert M.degree == 2 and M == x ** 2 + 2
    assert right_divmod(M, x - g)[1].is_zero() and right_divmod(M, x - 2 * g)[1].is_zero()
    assert gcrd(x - g, x - 2 * g) == 1
    with pytest.raises(BothZero):
        gcrd(SkewPoly(F9), SkewPoly(F9))
    with pytest.raises(BothZero):
        lclm(SkewPoly(F9), x)


@pytest.mark.parametrize("name", sorted(RINGS))
def test_gcrd_lclm_properties(name):
    ctx = RINGS[name]
    r = rng(20)
    for n in range(100):
        C = rand_poly(ctx, r, 2)
        F, G = rand_poly(ctx, r, 3) * C, rand_poly(ctx, r, 3) * C
        D, U, V = gcrd_extended(F, G)
        assert D.is_monic() and U * F + V * G == D
        assert right_divmod(F, D)[1].is_zero() and right_divmod(G, D)[1].is_zero()
        assert right_divmod(D, C)[1].is_zero()
        M = lclm(F, G)
        assert M.is_monic()
        assert right_divmod(M, F)[1].is_zero() and right_divmod(M, G)[1].is_zero()
        assert (D, M) == gcrd_lclm(F, G)
        assert D.degree + M.degree == F.degree + G.degree


def test_gcrd_with_zero():
    x = x_of(QUAT)
    F = 2 * x + QUAT.make(0, 1)
    assert gcrd(F, SkewPoly(QUAT)) == F.monic()
    assert gcrd(SkewPoly(QUAT), F) == F.monic()


# -- point sets ---------------------------------------------------------------------

def test_minimal_poly_examples():
    g = F9.gen
    x = x_of(F9)
    a = F9.from_rational(2) + g
    assert minimal_poly([a]) == x - a
    assert minimal_poly([g, 2 * g]) == x ** 2 + 2
    i = QUAT.make(0, 1)
    xq = x_of(QUAT)
    assert minimal_poly([i, -i]) == xq ** 2 + 1
    with pytest.raises(EmptySet):
        minimal_poly([])


@pytest.mark.parametrize("name", ["F27", "quat", "gauss"])
def test_minimal_poly_order_independent(name):
    ctx = RINGS[name]
    r = rng(21)
    for _ in range(30):
        pts = [ctx.random_element(r) for _ in range(r.randint(2, 4))]
        M = minimal_poly(pts)
        shuffled = pts[:]
        r.shuffle(shuffled)
        assert minimal_poly(shuffled) == M
        for a in pts:
            assert eval_point(M, a) == 0
        assert M.degree <= len(set(pts))


def test_p_independence_examples():
    g = F9.gen
    a, b = 2 * g, g
    assert is_p_independent([a]) and is_p_independent([QUAT.make(1, 2)])
    assert is_p_independent([a, b])
    assert not is_p_independent(PointSet.powers([(a, 2), (b, 3)]))
    with pytest.raises(EmptySet):
        is_p_independent([])


def test_pointset_dedupes_by_polynomial():
    g = F9.gen
    a, b = 2 * g, g
    # (x - a)^2 = (x - b)^2, so the two entries are one polynomial
    omega = PointSet.powers([(a, 2), (b, 2)])
    assert len(omega) == 1
    assert is_p_independent(omega)


def test_zero_set_brute():
    x = x_of(F9)
    g = F9.gen
    assert zero_set_brute(x - g) == [g]
    with pytest.raises(ZeroPolynomial):
        zero_set_brute(SkewPoly(F9))
    with pytest.raises(NotEnumerable):
        zero_set_brute(x_of(QUAT))
    cls = zero_set_brute(x ** 2 - 1)
    assert strs(cls) == frozen()["F9_table"]["2*g"]["class"]
    assert len(cls) == 4


def test_zero_sets_match_oracle():
    r = rng(22)
    for ctx in (F9, F27):
        for _ in range(40):
            F = rand_poly(ctx, r, 4)
            assert zero_set_brute(F) == oracle.zeros(ctx, oracle.as_dict(F))


def test_p_closure():
    g = F9.gen
    gamma = g + 1
    assert p_closure_brute([g]) == [g]
    # {g, 2g} closes to all zeros of x^2 + 2, which are four points
    assert strs(p_closure_brute([g, 2 * g])) == ["g", "2*g", "1", "2"]
    closure = p_closure_brute([gamma, gamma ** 3])
    assert set(closure) == set(oracle.conj_class(F9, gamma)) and len(closure) == 4
    with pytest.raises(EmptySet):
        p_closure_brute([])


def test_monotonicity_f9():
    """Lowering exponents of a P-independent U1-set keeps it P-independent."""
    r = rng(23)
    elems = list(F27.elements())
    checked = 0
    for _ in range(150):
        pts = r.sample(elems, r.randint(1, 3))
        exps = [r.randint(1, 3) for _ in pts]
        omega = PointSet.powers(list(zip(pts, exps)))
        if not is_p_independent(omega):
            continue
        lowered = [r.randint(1, e) for e in exps]
        assert is_p_independent(PointSet.powers(list(zip(pts, lowered))))
        checked += 1
    assert checked > 20


def test_degree_bound_property():
    r = rng(24)
    elems = list(F27.elements())
    for _ in range(60):
        omega = PointSet.simple(r.sample(elems, r.randint(1, 3)))
        if not is_p_independent(omega):
            continue
        FO = minimal_poly(omega)
        total = sum(P.degree for P in omega.polys)
        G = rand_poly(F27, r, 2)
        F = G * FO
        assert total <= F.degree
        is_multiple = F == FO.left_scale(F.lc)
        assert (total == F.degree) == is_multiple == (G.degree == 0)


def test_linear_product_order():
    g = F9.gen
    x = x_of(F9)
    assert linear_product([g, 2 * g]) == (x - 2 * g) * (x - g)
