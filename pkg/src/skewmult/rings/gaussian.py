"""Gaussian rationals Q(i) twisted by complex conjugation."""

from fractions import Fraction

from ..errors import InversionOfZero
from ..ring import QQ, SkewContext
from .quaternion import _signed_terms


class GaussianRationals(SkewContext):
    """Q(i) with sigma = complex conjugation (order 2) and delta = 0.

    The fixed field of sigma is Q, the coordinate field, with basis (1, i).
    """

    ring_id = "gaussian"
    sigma_is_identity = False
    sigma_desc = "conjugation"
    sigma_order = 2
    base_dim = 2
    base_field = QQ

    def _params(self):
        return ("gaussian",)

    def _zero_val(self):
        return (Fraction(0), Fraction(0))

    def _one_val(self):
        return (Fraction(1), Fraction(0))

    def from_rational(self, q):
        return self._wrap((Fraction(q), Fraction(0)))

    def make(self, re=0, im=0):
        return self._wrap((Fraction(re), Fraction(im)))

    def generators(self):
        return {"i": self.make(0, 1)}

    def add(self, x, y):
        return self._wrap((x.val[0] + y.val[0], x.val[1] + y.val[1]))

    def sub(self, x, y):
        return self._wrap((x.val[0] - y.val[0], x.val[1] - y.val[1]))

    def neg(self, x):
        return self._wrap((-x.val[0], -x.val[1]))

    def mul(self, x, y):
        a, b = x.val
        c, d = y.val
        return self._wrap((a * c - b * d, a * d + b * c))

    def inv(self, x):
        a, b = x.val
        n = a * a + b * b
        if n == 0:
            raise InversionOfZero("0 has no inverse")
        return self._wrap((a / n, -b / n))

    def sigma(self, x):
        return self._wrap((x.val[0], -x.val[1]))

    sigma_inv = sigma

    def coordinates(self, x):
        return x.val

    def from_coordinates(self, v):
        if len(v) != 2:
            raise ValueError("expected 2 coordinates")
        return self._wrap((Fraction(v[0]), Fraction(v[1])))

    def random_element(self, rng, bound=4, den=2):
        return self._wrap(tuple(Fraction(rng.randint(-bound, bound), rng.randint(1, den))
                                for _ in range(2)))

    # helpers ------------------------------------------------------------------
    def trace(self, x):
        return self.add(x, self.sigma(x))

    def norm(self, x):
        return self.mul(x, self.sigma(x))

    def mod_sq(self, x):
        return x.val[0] ** 2 + x.val[1] ** 2

    def is_conjugate(self, a, b):
        """a ~ b iff both zero, or N(b/a) = 1 (equivalently |a| = |b|, both nonzero)."""
        if not a or not b:
            return not a and not b
        return self.norm(self.mul(b, self.inv(a))) == self.one

    def format_element(self, x):
        return _signed_terms([(x.val[0], ""), (x.val[1], "i")])

    def spec(self):
        return "gaussian"
