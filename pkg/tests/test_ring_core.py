from fractions import Fraction

import pytest

from helpers import F9, GAUSS, QUAT, RATFUN, RINGS, rng
from skewmult import (
    ContextMismatch, InversionOfZero, NoFiniteCoordinatization, apply_delta, apply_sigma,
    centralizer_contains, conjugate, coordinates, dmap_apply, from_coordinates,
)
from skewmult.multiplicity import centralizer_basis

N_RANDOM = 1000


def test_arith_examples():
    i, j, k = QUAT.make(0, 1), QUAT.make(0, 0, 1), QUAT.make(0, 0, 0, 1)
    assert i * j == k and j * i == -k
    g = F9.gen
    assert g * g == F9.from_rational(2) == -1
    z = RATFUN.gen
    assert z * z.inverse() == 1
    assert str(z.inverse()) == "1/z"


def test_inverse_of_zero():
    for ctx in RINGS.values():
        with pytest.raises(InversionOfZero):
            ctx.inv(ctx.zero)


def test_twist_examples():
    g = F9.gen
    assert apply_sigma(g) == -g
    assert apply_sigma(GAUSS.make(3, 2)) == GAUSS.make(3, -2)
    z = RATFUN.gen
    assert apply_delta(z * z) == 2 * z
    assert apply_delta(z ** 3) == 0


def test_conjugate_examples():
    i, j = QUAT.make(0, 1), QUAT.make(0, 0, 1)
    assert conjugate(i, j) == -i
    z = RATFUN.gen
    assert conjugate(RATFUN.zero, z) == z.inverse()
    for ctx in RINGS.values():
        a = ctx.random_element(rng(1))
        assert conjugate(a, ctx.one) == a
        with pytest.raises(InversionOfZero):
            conjugate(a, ctx.zero)


def test_centralizer_examples():
    g = F9.gen
    for ctx in RINGS.values():
        a = ctx.random_element(rng(2))
        assert centralizer_contains(a, ctx.zero) and centralizer_contains(a, ctx.one)
    inside = [c for c in F9.elements() if centralizer_contains(g, c)]
    assert inside == [F9.from_rational(n) for n in (0, 1, 2)]
    assert not centralizer_contains(QUAT.make(0, 1), QUAT.make(0, 0, 1))


def test_dmap_examples():
    g = F9.gen
    assert dmap_apply(g, g) == 1
    for ctx in RINGS.values():
        a = ctx.random_element(rng(3))
        assert dmap_apply(a, ctx.one) == a
    beta = RATFUN.random_element(rng(4))
    assert dmap_apply(RATFUN.zero, beta) == RATFUN.delta(beta)


def test_coordinate_examples():
    assert coordinates(F9.from_rational(2) + F9.gen) == (2, 1)
    assert coordinates(QUAT.make(1, 0, 0, -1)) == (1, 0, 0, -1)
    assert from_coordinates(GAUSS, (0, 5)) == GAUSS.make(0, 5)


@pytest.mark.parametrize("name", sorted(RINGS))
def test_coordinate_roundtrip(name):
    ctx = RINGS[name]
    r = rng(5)
    for _ in range(200):
        a = ctx.random_element(r)
        v = coordinates(a)
        assert len(v) == ctx.base_dim
        assert from_coordinates(ctx, v) == a


@pytest.mark.parametrize("name", sorted(RINGS))
def test_sigma_is_ring_endomorphism(name):
    ctx = RINGS[name]
    r = rng(6)
    assert ctx.sigma(ctx.one) == ctx.one
    for _ in range(300):
        a, b = ctx.random_element(r), ctx.random_element(r)
        assert ctx.sigma(a + b) == ctx.sigma(a) + ctx.sigma(b)
        assert ctx.sigma(a * b) == ctx.sigma(a) * ctx.sigma(b)
        assert ctx.sigma(ctx.sigma_inv(a)) == a


@pytest.mark.parametrize("name", sorted(RINGS))
def test_sigma_derivation_law(name):
    ctx = RINGS[name]
    r = rng(7)
    for _ in range(N_RANDOM):
        a, b = ctx.random_element(r), ctx.random_element(r)
        assert ctx.delta(a * b) == ctx.sigma(a) * ctx.delta(b) + ctx.delta(a) * b


@pytest.mark.parametrize("name", sorted(RINGS))
def test_conjugation_is_left_action(name):
    ctx = RINGS[name]
    r = rng(8)
    for _ in range(200):
        a = ctx.random_element(r)
        beta, gamma = ctx.random_nonzero(r), ctx.random_nonzero(r)
        assert conjugate(a, beta * gamma) == conjugate(conjugate(a, gamma), beta)


@pytest.mark.parametrize("name", sorted(RINGS))
def test_centralizer_iff_fixed_by_conjugation(name):
    ctx = RINGS[name]
    r = rng(9)
    for _ in range(200):
        a, beta = ctx.random_element(r), ctx.random_nonzero(r)
        assert centralizer_contains(a, beta) == (conjugate(a, beta) == a)
    for a in [ctx.random_element(r) for _ in range(10)]:
        for k in centralizer_basis(a):
            assert conjugate(a, k) == a


@pytest.mark.parametrize("name", sorted(RINGS))
def test_dmap_right_linear_over_centralizer(name):
    ctx = RINGS[name]
    r = rng(10)
    for _ in range(30):
        a, beta = ctx.random_element(r), ctx.random_element(r)
        for k in centralizer_basis(a):
            assert centralizer_contains(a, k)
            assert dmap_apply(a, beta * k) == dmap_apply(a, beta) * k


def test_element_coercion_and_mismatch():
    g = F9.gen
    assert 1 + g == F9.from_rational(1) + g
    assert (g / g) == 1
    assert QUAT.make(Fraction(1, 2)) == Fraction(1, 2)
    with pytest.raises(ContextMismatch):
        g + QUAT.one


def test_no_coordinates_for_abstract_default():
    from skewmult.ring import SkewContext

    class Bare(SkewContext):
        def _params(self):
            return ()

        def _zero_val(self):
            return 0

        def _one_val(self):
            return 1

        def from_rational(self, q):
            return self._wrap(q)

        def add(self, a, b):
            return self._wrap(a.val + b.val)

        def neg(self, a):
            return self._wrap(-a.val)

        def mul(self, a, b):
            return self._wrap(a.val * b.val)

        def inv(self, a):
            return self._wrap(Fraction(1, a.val))

        def random_element(self, r):
            return self._wrap(r.randint(0, 5))

        def format_element(self, a):
            return str(a.val)

    with pytest.raises(NoFiniteCoordinatization):
        coordinates(Bare().one)
