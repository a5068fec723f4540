"""Finite fields F_{p^m} = F_p[g]/(modulus) with a Frobenius power as sigma."""

import itertools
from math import gcd

from sympy import isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_gcdex, gf_rem

from ..errors import InversionOfZero, UnsupportedRing
from ..ring import PrimeField, SkewContext


def _monic_polys(p, d):
    """All monic polynomials of degree d over F_p, low-to-high coefficient tuples."""
    for low in itertools.product(range(p), repeat=d):
        yield tuple(low) + (1,)


def is_irreducible(modulus, p):
    """Trial division by every monic polynomial of degree 1 .. deg/2."""
    m = len(modulus) - 1
    if m < 1:
        return False
    f = [int(c) for c in reversed(modulus)]
    for d in range(1, m // 2 + 1):
        for h in _monic_polys(p, d):
            if not gf_rem(f, list(reversed(h)), p, ZZ):
                return False
    return True


def first_irreducible(p, m):
    """Smallest monic irreducible of degree m in enumeration order."""
    for h in _monic_polys(p, m):
        if is_irreducible(h, p):
            return h
    raise ValueError(f"no irreducible polynomial of degree {m} over F_{p}")


class FiniteField(SkewContext):
    """F_{p^m} with sigma(a) = a^(p^s) and delta = 0.

    Elements are stored as coefficient tuples ``(c_0, ..., c_{m-1})`` in the
    basis ``1, g, ..., g^(m-1)``; these are also the coordinates over F_p.

    >>> F9 = FiniteField(3, 2, modulus=(1, 0, 1))
    >>> g = F9.gen
    >>> str(g * g)
    '2'
    """

    ring_id = "finite-field"
    enumerable = True
    delta_desc = "zero"

    def __init__(self, p, m=1, modulus=None, frob=1):
        if not isprime(p):
            raise ValueError(f"{p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be positive")
        if modulus is None:
            modulus = (0, 1) if m == 1 else first_irreducible(p, m)
        modulus = tuple(int(c) % p for c in modulus)
        while len(modulus) > 1 and modulus[-1] == 0:
            modulus = modulus[:-1]
        if len(modulus) - 1 != m:
            raise ValueError(f"modulus must have degree {m}")
        lead_inv = pow(modulus[-1], -1, p)
        modulus = tuple(c * lead_inv % p for c in modulus)
        if not is_irreducible(modulus, p):
            raise ValueError("modulus is not irreducible")
        self.p, self.m, self.modulus, self.frob = p, m, modulus, frob
        self.order = p ** m
        self.base_dim = m
        self.base_field = PrimeField(p)
        s = frob % m
        self.sigma_order = m // gcd(s, m)
        self.sigma_is_identity = self.sigma_order == 1
        self.sigma_desc = "identity" if self.sigma_is_identity else f"frobenius^{frob}"
        # g^k mod modulus for k = m .. 2m-2, used to fold products back
        self._fold = []
        cur = [0] * (m - 1) + [1] if m > 1 else [1]
        for _ in range(m - 1):
            cur = self._times_g(cur)
            self._fold.append(tuple(cur))
        if m == 1:
            self._fold = []
        super().__init__()
        self.gen = self._wrap(tuple([0, 1] + [0] * (m - 2)) if m > 1 else (-modulus[0] % p,))
        self._frob_cols = self._power_map(p ** s)
        self._frob_inv_cols = self._power_map(p ** ((m - s) % m))

    def _times_g(self, v):
        """Multiply coefficient vector v (length m) by g, reducing by the modulus."""
        p, mod = self.p, self.modulus
        top = v[-1]
        out = [0] + list(v[:-1])
        return [(out[i] - top * mod[i]) % p for i in range(self.m)]

    def _power_map(self, e):
        """Images of the basis g^j under a -> a^e (a linear map when e is a power of p)."""
        cols = []
        for j in range(self.m):
            basis = self._wrap(tuple(1 if i == j else 0 for i in range(self.m)))
            cols.append((basis ** e).val)
        return cols

    def _params(self):
        return ("gf", self.p, self.m, self.modulus, self.frob % self.m)

    def _zero_val(self):
        return (0,) * self.m

    def _one_val(self):
        return (1,) + (0,) * (self.m - 1)

    def from_rational(self, q):
        q = q if isinstance(q, int) else _as_mod_p(q, self.p)
        return self._wrap((q % self.p,) + (0,) * (self.m - 1))

    def generators(self):
        return {"g": self.gen}

    # arithmetic ------------------------------------------------------------
    def add(self, a, b):
        p = self.p
        return self._wrap(tuple((x + y) % p for x, y in zip(a.val, b.val)))

    def sub(self, a, b):
        p = self.p
        return self._wrap(tuple((x - y) % p for x, y in zip(a.val, b.val)))

    def neg(self, a):
        p = self.p
        return self._wrap(tuple(-x % p for x in a.val))

    def mul(self, a, b):
        p, m = self.p, self.m
        av, bv = a.val, b.val
        if m == 1:
            return self._wrap((av[0] * bv[0] % p,))
        conv = [0] * (2 * m - 1)
        for i, x in enumerate(av):
            if x:
                for j, y in enumerate(bv):
                    if y:
                        conv[i + j] += x * y
        out = conv[:m]
        for k, c in enumerate(conv[m:]):
            if c:
                fold = self._fold[k]
                for i in range(m):
                    out[i] += c * fold[i]
        return self._wrap(tuple(x % p for x in out))

    def inv(self, a):
        if not any(a.val):
            raise InversionOfZero("0 has no inverse")
        f = [int(c) for c in reversed(a.val)]
        while f and f[0] == 0:
            f.pop(0)
        s, _, h = gf_gcdex(f, list(reversed(self.modulus)), self.p, ZZ)
        hinv = pow(int(h[0]), -1, self.p)
        coeffs = [int(c) * hinv % self.p for c in reversed(s)]
        coeffs += [0] * (self.m - len(coeffs))
        return self._wrap(tuple(coeffs))

    def _apply_cols(self, cols, a):
        p, m = self.p, self.m
        out = [0] * m
        for c, col in zip(a.val, cols):
            if c:
                for i in range(m):
                    out[i] += c * col[i]
        return self._wrap(tuple(x % p for x in out))

    def sigma(self, a):
        if self.sigma_is_identity:
            return a
        return self._apply_cols(self._frob_cols, a)

    def sigma_inv(self, a):
        if self.sigma_is_identity:
            return a
        return self._apply_cols(self._frob_inv_cols, a)

    # coordinates / enumeration --------------------------------------------------
    def coordinates(self, a):
        return a.val

    def from_coordinates(self, v):
        v = tuple(int(c) % self.p for c in v)
        if len(v) != self.m:
            raise ValueError(f"expected {self.m} coordinates")
        return self._wrap(v)

    def elements(self):
        """All p^m elements, lexicographic in the coordinate vector."""
        for v in itertools.product(range(self.p), repeat=self.m):
            yield self._wrap(v)

    def random_element(self, rng):
        return self._wrap(tuple(rng.randrange(self.p) for _ in range(self.m)))

    # ring-specific helpers ---------------------------------------------------
    def trace(self, a):
        """Sum of sigma^i(a) over the cyclic group generated by sigma."""
        total, cur = self.zero, a
        for _ in range(self.sigma_order):
            total = self.add(total, cur)
            cur = self.sigma(cur)
        assert self.sigma(total) == total
        return total

    def norm(self, a):
        """Product of sigma^i(a) over the cyclic group generated by sigma."""
        total, cur = self.one, a
        for _ in range(self.sigma_order):
            total = self.mul(total, cur)
            cur = self.sigma(cur)
        assert self.sigma(total) == total
        return total

    def multiplicative_order(self, a):
        if not a:
            raise InversionOfZero("0 has no multiplicative order")
        n, cur = 1, a
        while cur != self.one:
            cur = self.mul(cur, a)
            n += 1
        return n

    def find_primitive(self):
        """First element (in enumeration order) generating the multiplicative group."""
        target = self.order - 1
        for a in self.elements():
            if a and self.multiplicative_order(a) == target:
                return a
        raise UnsupportedRing("no primitive element found")  # unreachable for a field

    def is_conjugate(self, a, b):
        """a ~ b iff both zero, or both nonzero with N(b/a) = 1."""
        if not a or not b:
            return not a and not b
        return self.norm(self.mul(b, self.inv(a))) == self.one

    # text -------------------------------------------------------------------
    def format_element(self, a):
        terms = []
        for k, c in enumerate(a.val):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "g" if k == 1 else f"g^{k}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(terms) if terms else "0"

    def spec(self):
        mod = _format_fp_poly(self.modulus, "g")
        return f"gf({self.p}^{self.m}; mod={mod}; frob={self.frob})"


def _as_mod_p(q, p):
    num, den = q.numerator, q.denominator
    if den % p == 0:
        raise InversionOfZero(f"denominator divisible by {p}")
    return num * pow(den, -1, p) % p


def _format_fp_poly(coeffs, var):
    """Descending-degree text for a low-to-high coefficient sequence."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            mono = var if k == 1 else f"{var}^{k}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms) if terms else "0"
