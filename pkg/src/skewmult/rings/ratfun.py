"""Rational function fields F_p(z) with the derivation delta = c * d/dz."""

from flint import nmod_poly
from sympy import isprime

from ..errors import InversionOfZero
from ..ring import SkewContext
from .finite_field import _format_fp_poly


def _key(f):
    return tuple(int(c) for c in f.coeffs())


class RationalFunctions(SkewContext):
    """F_p(z), sigma = Id, delta = c * d/dz for a nonzero c in F_p(z).

    Values are ``(num, den)`` pairs of low-to-high coefficient tuples,
    coprime with ``den`` monic; the polynomial arithmetic is done by
    :class:`flint.nmod_poly`.

    The constants of delta form K = F_p(z^p); F_p(z) has basis
    1, z, ..., z^(p-1) over K and coordinates are elements of K.
    """

    ring_id = "ratfun"
    delta_is_zero = False

    def __init__(self, p, c=None):
        if not isprime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.base_dim = p
        self.base_field = self
        if c is None:
            cval = ((1,), (1,))
        elif hasattr(c, "val"):
            cval = c.val
        else:
            cval = self._normalize(self._poly(c[0]), self._poly(c[1]))
        if not cval[0]:
            raise ValueError("derivation scale c must be nonzero")
        self._cval = cval
        super().__init__()
        self.c = self._wrap(cval)
        self.delta_desc = f"({self.format_element(self.c)})*d/dz"
        self.gen = self._wrap(((0, 1), (1,)))

    def _params(self):
        return ("ratfun", self.p, self._cval)

    def _poly(self, coeffs):
        return nmod_poly([int(c) for c in coeffs], self.p)

    def _parts(self, a):
        n, d = a.val
        return self._poly(n), self._poly(d)

    def _normalize(self, num, den):
        """Canonical (num, den) from two nmod_poly values."""
        if num.is_zero():
            return ((), (1,))
        if den.is_zero():
            raise InversionOfZero("zero denominator")
        g = num.gcd(den)
        if g.degree() > 0:
            num, den = num // g, den // g
        lead = int(den.coeffs()[-1])
        if lead != 1:
            inv = pow(lead, -1, self.p)
            num, den = num * inv, den * inv
        return (_key(num), _key(den))

    def _zero_val(self):
        return ((), (1,))

    def _one_val(self):
        return ((1,), (1,))

    def from_rational(self, q):
        if isinstance(q, int):
            return self._wrap(self._normalize(self._poly([q % self.p]), self._poly([1])))
        num, den = q.numerator % self.p, q.denominator % self.p
        if den == 0:
            raise InversionOfZero(f"denominator divisible by {self.p}")
        return self._wrap(self._normalize(self._poly([num]), self._poly([den])))

    def from_polys(self, num, den=(1,)):
        """Build num/den from low-to-high coefficient sequences."""
        return self._wrap(self._normalize(self._poly([c % self.p for c in num]),
                                          self._poly([c % self.p for c in den])))

    def generators(self):
        return {"z": self.gen}

    # arithmetic ------------------------------------------------------------------
    def add(self, a, b):
        if not a.val[0]:
            return b
        if not b.val[0]:
            return a
        n1, d1 = self._parts(a)
        n2, d2 = self._parts(b)
        if a.val[1] == b.val[1]:
            return self._wrap(self._normalize(n1 + n2, d1))
        return self._wrap(self._normalize(n1 * d2 + n2 * d1, d1 * d2))

    def neg(self, a):
        n, d = a.val
        return self._wrap((tuple(-c % self.p for c in n), d))

    def mul(self, a, b):
        if not a.val[0] or not b.val[0]:
            return self.zero
        n1, d1 = self._parts(a)
        n2, d2 = self._parts(b)
        return self._wrap(self._normalize(n1 * n2, d1 * d2))

    def inv(self, a):
        if not a.val[0]:
            raise InversionOfZero("0 has no inverse")
        n, d = self._parts(a)
        return self._wrap(self._normalize(d, n))

    def derivative(self, a):
        """Plain d/dz via the quotient rule."""
        if not a.val[0]:
            return self.zero
        n, d = self._parts(a)
        return self._wrap(self._normalize(n.derivative() * d - n * d.derivative(), d * d))

    def delta(self, a):
        return self.mul(self.c, self.derivative(a))

    # coordinates over K = F_p(z^p) ------------------------------------------------
    def coordinates(self, a):
        p = self.p
        if not a.val[0]:
            return (self.zero,) * p
        n, d = self._parts(a)
        dp = d ** p
        low = _key(n * d ** (p - 1))
        coords = []
        for i in range(p):
            part = [low[k] if k < len(low) else 0 for k in range(i, len(low), p)]
            spread = [0] * (p * len(part))
            for j, c in enumerate(part):
                spread[p * j] = c
            coords.append(self._wrap(self._normalize(self._poly(spread), dp)))
        return tuple(coords)

    def from_coordinates(self, v):
        if len(v) != self.p:
            raise ValueError(f"expected {self.p} coordinates")
        total = self.zero
        zk = self.one
        for c in v:
            total = self.add(total, self.mul(zk, c))
            zk = self.mul(zk, self.gen)
        return total

    def in_constants(self, a):
        """True iff a lies in K = F_p(z^p)."""
        return all(i % self.p == 0 for part in a.val for i, c in enumerate(part) if c)

    def random_element(self, rng, num_deg=2, den_deg=1):
        p = self.p
        num = [rng.randrange(p) for _ in range(rng.randint(0, num_deg) + 1)]
        dd = rng.randint(0, den_deg)
        den = [rng.randrange(p) for _ in range(dd)] + [1]
        return self.from_polys(num, den)

    def format_element(self, a):
        n, d = a.val
        num = _format_fp_poly(n, "z")
        if d == (1,):
            return num
        den = _format_fp_poly(d, "z")
        if "+" in num:
            num = f"({num})"
        if "+" in den or "*" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def spec(self):
        if self._cval == ((1,), (1,)):
            return f"ratfun({self.p})"
        return f"ratfun({self.p}; c={self.format_element(self.c)})"
