"""Rational quaternions Q + Qi + Qj + Qk with sigma = Id, delta = 0."""

from fractions import Fraction

from ..errors import InversionOfZero, UnsupportedRing
from ..ring import QQ, SkewContext


def _signed_terms(parts):
    """Join (coefficient, unit) pairs as ``1-2i+3/2*j``."""
    out = []
    for c, unit in parts:
        if c == 0:
            continue
        if unit == "":
            body = str(abs(c))
        elif abs(c) == 1:
            body = unit
        elif abs(c).denominator == 1:
            body = f"{abs(c)}{unit}"
        else:
            body = f"{abs(c)}*{unit}"
        sign = "-" if c < 0 else "+"
        if not out:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append(sign + body)
    return "".join(out) if out else "0"


class Quaternions(SkewContext):
    """Hamilton quaternions over Q; i^2 = j^2 = k^2 = ijk = -1.

    Coordinates are the four rational components in the basis (1, i, j, k).
    """

    ring_id = "quaternion"
    base_dim = 4
    base_field = QQ

    def _params(self):
        return ("quat",)

    def _zero_val(self):
        return (Fraction(0),) * 4

    def _one_val(self):
        return (Fraction(1), Fraction(0), Fraction(0), Fraction(0))

    def from_rational(self, q):
        return self._wrap((Fraction(q), Fraction(0), Fraction(0), Fraction(0)))

    def make(self, a=0, b=0, c=0, d=0):
        return self._wrap((Fraction(a), Fraction(b), Fraction(c), Fraction(d)))

    def generators(self):
        return {"i": self.make(0, 1), "j": self.make(0, 0, 1), "k": self.make(0, 0, 0, 1)}

    def add(self, x, y):
        return self._wrap(tuple(u + v for u, v in zip(x.val, y.val)))

    def sub(self, x, y):
        return self._wrap(tuple(u - v for u, v in zip(x.val, y.val)))

    def neg(self, x):
        return self._wrap(tuple(-u for u in x.val))

    def mul(self, x, y):
        a1, b1, c1, d1 = x.val
        a2, b2, c2, d2 = y.val
        return self._wrap((
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ))

    def inv(self, x):
        n = self.mod_sq(x)
        if n == 0:
            raise InversionOfZero("0 has no inverse")
        a, b, c, d = x.val
        return self._wrap((a / n, -b / n, -c / n, -d / n))

    def coordinates(self, x):
        return x.val

    def from_coordinates(self, v):
        if len(v) != 4:
            raise ValueError("expected 4 coordinates")
        return self._wrap(tuple(Fraction(c) for c in v))

    def random_element(self, rng, bound=3, den=2):
        return self._wrap(tuple(Fraction(rng.randint(-bound, bound), rng.randint(1, den))
                                for _ in range(4)))

    # helpers ------------------------------------------------------------------
    def re(self, x):
        return x.val[0]

    def mod_sq(self, x):
        return sum(c * c for c in x.val)

    def conj(self, x):
        a, b, c, d = x.val
        return self._wrap((a, -b, -c, -d))

    def is_real(self, x):
        return not any(x.val[1:])

    def is_conjugate(self, x, y):
        """Conjugate in the division-ring sense iff real parts and moduli agree."""
        return self.re(x) == self.re(y) and self.mod_sq(x) == self.mod_sq(y)

    def format_element(self, x):
        a, b, c, d = x.val
        return _signed_terms([(a, ""), (b, "i"), (c, "j"), (d, "k")])

    def spec(self):
        return "quat"


def _require(x):
    if not isinstance(x.ctx, Quaternions):
        raise UnsupportedRing(f"quaternion helper used on {x.ctx.ring_id}")
    return x.ctx


def quat_re(x):
    return _require(x).re(x)


def quat_mod_sq(x):
    return _require(x).mod_sq(x)


def quat_conj(x):
    return _require(x).conj(x)
