"""Division rings with a (sigma, delta) pair.

A :class:`SkewContext` bundles a division ring F with an endomorphism sigma and
a sigma-derivation delta, so that ``x*a = sigma(a)*x + delta(a)`` in F[x; sigma, delta].
Every concrete ring in :mod:`skewmult.rings` subclasses it; the polynomial,
multiplicity and interpolation layers only talk to this interface.

Elements are immutable :class:`Element` wrappers around a canonical, hashable
value owned by the concrete context.
"""

from abc import ABC, abstractmethod
from fractions import Fraction
from numbers import Integral, Rational

from .errors import ContextMismatch, InversionOfZero, NoFiniteCoordinatization, NotEnumerable


class Element:
    """An exact element of a :class:`SkewContext`.

    ``val`` is the canonical internal form, so equality is structural.
    Arithmetic operators delegate to the owning context; ``a / b`` means
    ``a * b**-1`` (right division).
    """

    __slots__ = ("ctx", "val")

    def __init__(self, ctx, val):
        self.ctx = ctx
        self.val = val

    def _coerce(self, other):
        if isinstance(other, Element):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ContextMismatch(f"{self.ctx!r} vs {other.ctx!r}")
            return other
        if isinstance(other, (Integral, Rational)):
            return self.ctx.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.ctx.add(self, other)

    def __radd__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.ctx.add(other, self)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.ctx.sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.ctx.sub(other, self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.ctx.mul(self, other)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.ctx.mul(other, self)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.ctx.mul(self, self.ctx.inv(other))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.ctx.mul(other, self.ctx.inv(self))

    def __neg__(self):
        return self.ctx.neg(self)

    def __pos__(self):
        return self

    def __pow__(self, n):
        if not isinstance(n, Integral):
            return NotImplemented
        base = self
        if n < 0:
            base, n = self.ctx.inv(self), -n
        result = self.ctx.one
        while n:
            if n & 1:
                result = self.ctx.mul(result, base)
            base = self.ctx.mul(base, base)
            n >>= 1
        return result

    def inverse(self):
        return self.ctx.inv(self)

    def __bool__(self):
        return not self.ctx.is_zero(self)

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.val == other.val and (other.ctx is self.ctx or other.ctx == self.ctx)
        if isinstance(other, (Integral, Rational)):
            try:
                return self.val == self.ctx.from_rational(other).val
            except (ValueError, InversionOfZero):
                return False
        return NotImplemented

    def __hash__(self):
        return hash(self.val)

    def __str__(self):
        return self.ctx.format_element(self)

    def __repr__(self):
        return f"<{self.ctx.ring_id} {self.ctx.format_element(self)}>"


class PrimeField:
    """Arithmetic of F_p on plain ints in ``range(p)``; used for coordinates."""

    def __init__(self, p):
        self.p = p
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise InversionOfZero("0 has no inverse")
        return pow(a, -1, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def __repr__(self):
        return f"PrimeField({self.p})"


class RationalField:
    """Arithmetic of Q on :class:`fractions.Fraction`."""

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise InversionOfZero("0 has no inverse")
        return 1 / Fraction(a)

    def is_zero(self, a):
        return a == 0

    def __repr__(self):
        return "RationalField()"


QQ = RationalField()


class SkewContext(ABC):
    """A division ring F together with (sigma, delta).

    Concrete subclasses set the descriptive attributes below and implement
    the abstract arithmetic. The context itself also satisfies the scalar
    field protocol used by :mod:`skewmult.linalg` (``zero``, ``one``, ``add``,
    ``sub``, ``neg``, ``mul``, ``inv``, ``is_zero``), which is how the
    division-ring linear solver runs directly on elements.
    """

    ring_id = "abstract"
    #: human-readable descriptors of the twist
    sigma_desc = "identity"
    delta_desc = "zero"
    sigma_is_identity = True
    delta_is_zero = True
    sigma_inverse_available = True
    enumerable = False
    #: dimension of F as a right vector space over ``base_field``; None if infinite
    base_dim = None
    #: scalar-field object for coordinates (see PrimeField / RationalField)
    base_field = None

    def __init__(self):
        self.zero = self._wrap(self._zero_val())
        self.one = self._wrap(self._one_val())

    # -- identity ---------------------------------------------------------
    @abstractmethod
    def _params(self):
        """Hashable tuple identifying the context."""

    def __eq__(self, other):
        return type(self) is type(other) and self._params() == other._params()

    def __hash__(self):
        return hash((type(self).__name__, self._params()))

    def _wrap(self, val):
        return Element(self, val)

    def _check(self, *elems):
        for e in elems:
            if e.ctx is not self and e.ctx != self:
                raise ContextMismatch(f"element of {e.ctx!r} used in {self!r}")

    # -- construction -----------------------------------------------------
    @abstractmethod
    def _zero_val(self): ...

    @abstractmethod
    def _one_val(self): ...

    @abstractmethod
    def from_rational(self, q):
        """Image of an integer or rational number (raises if undefined)."""

    def from_int(self, n):
        return self.from_rational(n)

    def generators(self):
        """Mapping of literal names (e.g. ``"g"``, ``"i"``) to elements."""
        return {}

    # -- arithmetic -------------------------------------------------------
    @abstractmethod
    def add(self, a, b): ...

    @abstractmethod
    def neg(self, a): ...

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    @abstractmethod
    def mul(self, a, b): ...

    @abstractmethod
    def inv(self, a): ...

    def is_zero(self, a):
        return a.val == self.zero.val

    # -- twist ------------------------------------------------------------
    def sigma(self, a):
        return a

    def sigma_inv(self, a):
        return a

    def delta(self, a):
        return self.zero

    # -- coordinates --------------------------------------------------------
    def coordinates(self, a):
        raise NoFiniteCoordinatization(f"{self.ring_id} has no finite coordinatization")

    def from_coordinates(self, v):
        raise NoFiniteCoordinatization(f"{self.ring_id} has no finite coordinatization")

    def basis(self):
        """The fixed right basis over ``base_field`` used by :meth:`coordinates`."""
        f = self.base_field
        n = self.base_dim
        if n is None:
            raise NoFiniteCoordinatization(f"{self.ring_id} has no finite coordinatization")
        return [self.from_coordinates([f.one if i == j else f.zero for j in range(n)])
                for i in range(n)]

    # -- enumeration / sampling --------------------------------------------
    def elements(self):
        raise NotEnumerable(f"{self.ring_id} is not enumerable")

    @abstractmethod
    def random_element(self, rng): ...

    def random_nonzero(self, rng):
        while True:
            a = self.random_element(rng)
            if a:
                return a

    # -- text -------------------------------------------------------------
    @abstractmethod
    def format_element(self, a): ...

    def spec(self):
        """Ring-spec string understood by :func:`skewmult.parsing.parse_ring`."""
        raise NotImplementedError

    def __repr__(self):
        return f"SkewContext({self.spec()!r})"


def apply_sigma(a):
    return a.ctx.sigma(a)


def apply_delta(a):
    return a.ctx.delta(a)


def conjugate(a, beta):
    """The (sigma, delta)-conjugate ``a^beta = sigma(beta) a beta^-1 + delta(beta) beta^-1``."""
    ctx = a.ctx
    binv = ctx.inv(beta)
    return ctx.mul(ctx.add(ctx.mul(ctx.sigma(beta), a), ctx.delta(beta)), binv)


def dmap_apply(a, beta):
    """D_a(beta) = sigma(beta) a + delta(beta)."""
    ctx = a.ctx
    return ctx.add(ctx.mul(ctx.sigma(beta), a), ctx.delta(beta))


def centralizer_contains(a, beta):
    """True iff beta lies in the (sigma, delta)-centralizer K_a of a."""
    return dmap_apply(a, beta) == a.ctx.mul(a, beta)


def coordinates(a):
    return a.ctx.coordinates(a)


def from_coordinates(ctx, v):
    return ctx.from_coordinates(v)
