"""Coefficient rings and exact scalar arithmetic.

The engine supports five coefficient rings: the integers, the integers
modulo n, the rationals, one-variable polynomials with rational
coefficients, and prime fields.  Scalars are plain Python values (``int``,
``fractions.Fraction``, or :class:`QPoly`) and every arithmetic question is
answered by the ring object, so all representations stay exact and
canonical (fractions in lowest terms, residues in ``[0, n)``, polynomials
with no trailing zero coefficients).

``Zmod(n)`` is *not* treated as a Euclidean domain here.  Matrix
algorithms lift it to the integers and adjoin ``n * e_i`` relations; the
ring object only provides the residue arithmetic used to store tables.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class QPoly:
    """A polynomial in one variable ``t`` with Fraction coefficients.

    Immutable and hashable; ``coeffs`` never has a trailing zero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c):
        return cls((Fraction(c),))

    @classmethod
    def t(cls):
        return cls((Fraction(0), Fraction(1)))

    @property
    def degree(self):
        # degree of the zero polynomial is -1 by convention
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    def __neg__(self):
        return QPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quo = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.leading()
        d = other.degree
        while len(rem) - 1 >= d and rem:
            c = rem[-1] / lead
            k = len(rem) - 1 - d
            quo[k] = c
            for i, b in enumerate(other.coeffs):
                rem[k + i] -= c * b
            while rem and rem[-1] == 0:
                rem.pop()
        return QPoly(quo), QPoly(rem)

    def height(self):
        # max absolute numerator/denominator; used for pivot selection
        h = 0
        for c in self.coeffs:
            h = max(h, abs(c.numerator), c.denominator)
        return h

    def __eq__(self, other):
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*t" if c != 1 else "t")
            else:
                parts.append(f"{c}*t^{i}" if c != 1 else f"t^{i}")
        return " + ".join(parts)


class Ring:
    """Base for ring objects; subclasses define exact arithmetic on values."""

    name = "?"
    is_field = False
    euclidean = True
    contains_rationals = False
    # modulus is not None exactly for Zmod(n); those rings are handled by
    # lifting to the integers in linalg.
    modulus = None

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def from_int(self, k):
        raise NotImplementedError

    def is_zero(self, a):
        return a == self.zero()

    def eq(self, a, b):
        return self.is_zero(self.sub(a, b))

    def is_unit(self, a):
        raise NotImplementedError

    def inv_unit(self, a):
        raise NotImplementedError

    def divmod(self, a, b):
        raise NotImplementedError

    def exact_div(self, a, b):
        q, r = self.divmod(a, b)
        if not self.is_zero(r):
            return None
        return q

    def canonical_unit(self, a):
        """Unit u such that a/u is the canonical associate of a."""
        raise NotImplementedError

    def pivot_key(self, a):
        """Sort key for pivot selection among nonzero entries."""
        raise NotImplementedError

    def scale_vec(self, c, v):
        return [self.mul(c, x) for x in v]

    def parse(self, s):
        raise NotImplementedError

    def to_json(self, a):
        raise NotImplementedError

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return type(self) is type(other) and self.__dict__ == other.__dict__

    def __hash__(self):
        return hash((type(self).__name__, tuple(sorted(self.__dict__.items()))))


class IntegerRing(Ring):
    name = "Z"

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, k):
        return k

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a in (1, -1)

    def inv_unit(self, a):
        return a

    def divmod(self, a, b):
        q, r = divmod(a, b)
        # symmetric remainder keeps coefficient growth down
        if r and 2 * r > abs(b):
            r -= abs(b)
            q += 1 if b > 0 else -1
        return q, r

    def canonical_unit(self, a):
        return -1 if a < 0 else 1

    def pivot_key(self, a):
        return abs(a)

    def parse(self, s):
        return int(s)

    def to_json(self, a):
        return str(a)


class RationalField(Ring):
    name = "Q"
    is_field = True
    contains_rationals = True

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, k):
        return Fraction(k)

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a != 0

    def inv_unit(self, a):
        return 1 / a

    def divmod(self, a, b):
        return a / b, Fraction(0)

    def canonical_unit(self, a):
        return a if a != 0 else Fraction(1)

    def pivot_key(self, a):
        return (max(abs(a.numerator), a.denominator),)

    def parse(self, s):
        return Fraction(s)

    def to_json(self, a):
        return str(a)


class PrimeField(Ring):
    is_field = True

    def __init__(self, p):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"F{p}"

    def zero(self):
        return 0

    def one(self):
        return 1 % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def from_int(self, k):
        return k % self.p

    def is_zero(self, a):
        return a % self.p == 0

    def is_unit(self, a):
        return a % self.p != 0

    def inv_unit(self, a):
        return pow(a, -1, self.p)

    def divmod(self, a, b):
        return (a * pow(b, -1, self.p)) % self.p, 0

    def canonical_unit(self, a):
        return a % self.p if a % self.p else 1

    def pivot_key(self, a):
        return (0,)

    def parse(self, s):
        return int(s) % self.p

    def to_json(self, a):
        return str(a % self.p)


class Zmod(Ring):
    """Integers modulo n, n >= 2.  Linear algebra lifts to the integers."""

    euclidean = False

    def __init__(self, n):
        if n < 2:
            raise ValueError("modulus must be >= 2")
        self.n = n
        self.modulus = n
        self.name = f"Z/{n}"

    def zero(self):
        return 0

    def one(self):
        return 1 % self.n

    def add(self, a, b):
        return (a + b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def from_int(self, k):
        return k % self.n

    def is_zero(self, a):
        return a % self.n == 0

    def is_unit(self, a):
        return gcd(a, self.n) == 1

    def inv_unit(self, a):
        return pow(a, -1, self.n)

    def canonical_unit(self, a):
        # canonical associate of a mod n is gcd(a, n)
        a = a % self.n
        if a == 0:
            return 1
        g = gcd(a, self.n)
        # a = u * g with u a unit mod n/g; lift to a unit mod n
        u = a // g
        m = self.n // g
        while gcd(u, self.n) != 1:
            u += m
        return u

    def pivot_key(self, a):
        return gcd(a % self.n, self.n)

    def parse(self, s):
        return int(s) % self.n

    def to_json(self, a):
        return str(a % self.n)


class RationalPolynomialRing(Ring):
    """Q[t]: a Euclidean domain under polynomial division."""

    name = "Q[t]"
    contains_rationals = True

    def zero(self):
        return QPoly()

    def one(self):
        return QPoly.const(1)

    def t(self):
        return QPoly.t()

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, k):
        return QPoly.const(k)

    def is_zero(self, a):
        return a.is_zero()

    def is_unit(self, a):
        return a.degree == 0

    def inv_unit(self, a):
        return QPoly.const(1 / a.leading())

    def divmod(self, a, b):
        return a.divmod(b)

    def canonical_unit(self, a):
        # canonical associate is the monic polynomial
        if a.is_zero():
            return QPoly.const(1)
        return QPoly.const(a.leading())

    def pivot_key(self, a):
        return (a.degree, a.height())

    def parse(self, s):
        if isinstance(s, (list, tuple)):
            return QPoly([Fraction(c) for c in s])
        return QPoly.const(Fraction(s))

    def to_json(self, a):
        return [str(c) for c in a.coeffs]


ZZ = IntegerRing()
QQ = RationalField()
QT = RationalPolynomialRing()


_RING_NAMES = {"Z": ZZ, "Q": QQ, "Q[t]": QT}


def ring_from_name(name):
    """Parse a ring spec string: Z | Q | Q[t] | Z/<n> | F<p>."""
    if name in _RING_NAMES:
        return _RING_NAMES[name]
    if name.startswith("Z/"):
        return Zmod(int(name[2:]))
    if name.startswith("F"):
        return PrimeField(int(name[1:]))
    raise ValueError(f"unknown ring {name!r}")
