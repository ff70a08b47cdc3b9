"""Exact arithmetic in Z/p^e and in quotient rings Z/p^e[c]/(g).

The quotient rings are unramified extensions (g is a monic lift of an
irreducible polynomial over F_p), so an element is a unit exactly when its
image mod p is nonzero in the residue field.  Sums and elementary symmetric
functions over the roots of g are reached through traces and characteristic
polynomials of multiplication operators; the roots themselves are never
enumerated.

All values are immutable after construction and all operations are pure, so
contexts, rings and elements can be shared freely across workers.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _gfpoly, kernels
from .errors import DenominatorNotUnit, NotAUnit
from .primes import is_prime

# Largest modulus M with M*(M+1) < 2**63: products of reduced residues and
# one further addition stay inside int64 inside the kernels.
MAX_MODULUS = 3_037_000_498

#: Rational evaluation points are plain fractions; any int or (num, den)
#: pair is accepted wherever a RationalInput is expected.
RationalInput = Fraction


def as_rational(x):
    """Coerce an int, Fraction, (num, den) pair or 'a/b' string to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, tuple) and len(x) == 2:
        return Fraction(x[0], x[1])
    raise TypeError(f"cannot interpret {x!r} as a rational number")


@dataclass(frozen=True)
class ModulusCtx:
    """The ambient ring Z/p^e for an odd prime p and 1 <= e <= 3."""

    p: int
    e: int

    def __post_init__(self):
        if not (1 <= self.e <= 3):
            raise ValueError(f"precision exponent must be 1..3, got {self.e}")
        if self.p < 3 or self.p % 2 == 0 or not is_prime(self.p):
            raise ValueError(f"{self.p} is not an odd prime")
        if self.p ** self.e > MAX_MODULUS:
            raise ValueError(
                f"p^e = {self.p ** self.e} exceeds the overflow-safe "
                f"modulus bound {MAX_MODULUS}"
            )

    @property
    def modulus(self):
        return self.p ** self.e

    def reduce(self, e):
        """The context at a lower (or equal) precision."""
        if e > self.e:
            raise ValueError(f"cannot raise precision {self.e} -> {e}")
        return ModulusCtx(self.p, e)


def residue_from_rational(q, ctx):
    """num * den^-1 mod p^e for a p-integral rational."""
    q = as_rational(q)
    if q.denominator % ctx.p == 0:
        raise DenominatorNotUnit(f"{q} has denominator divisible by {ctx.p}")
    m = ctx.modulus
    value = q.numerator % m
    if q.denominator != 1:
        value = value * pow(q.denominator, -1, m) % m
    return ResidueInt(value, ctx)


@dataclass(frozen=True)
class ResidueInt:
    """An element of Z/p^e; the type all congruence comparisons bottom out in."""

    value: int
    ctx: ModulusCtx

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.ctx.modulus)

    def _coerce(self, other):
        if isinstance(other, ResidueInt):
            if other.ctx != self.ctx:
                raise ValueError("mixed moduli")
            return other.value
        if isinstance(other, int):
            return other % self.ctx.modulus
        raise TypeError(f"cannot combine ResidueInt with {type(other).__name__}")

    def __add__(self, other):
        v = self._coerce(other)
        return ResidueInt(self.value + v, self.ctx)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        return ResidueInt(self.value - v, self.ctx)

    def __rsub__(self, other):
        v = self._coerce(other)
        return ResidueInt(v - self.value, self.ctx)

    def __mul__(self, other):
        v = self._coerce(other)
        return ResidueInt(self.value * v, self.ctx)

    __rmul__ = __mul__

    def __neg__(self):
        return ResidueInt(-self.value, self.ctx)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return ResidueInt(pow(self.value, n, self.ctx.modulus), self.ctx)

    def inverse(self):
        if self.value % self.ctx.p == 0:
            raise NotAUnit(f"{self.value} is not a unit mod {self.ctx.p}^{self.ctx.e}")
        return ResidueInt(pow(self.value, -1, self.ctx.modulus), self.ctx)

    def __truediv__(self, other):
        v = self._coerce(other)
        return self * ResidueInt(v, self.ctx).inverse()

    def __eq__(self, other):
        if isinstance(other, ResidueInt):
            return self.ctx == other.ctx and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.ctx.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.ctx.p, self.ctx.e))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"ResidueInt({self.value} mod {self.ctx.p}^{self.ctx.e})"


@dataclass(frozen=True)
class MonicPoly:
    """Monic polynomial over Z/p^e, coefficients lowest degree first."""

    coeffs: tuple
    ctx: ModulusCtx

    def __post_init__(self):
        m = self.ctx.modulus
        coeffs = tuple(int(ci) % m for ci in self.coeffs)
        if not coeffs or coeffs[-1] != 1 % m:
            raise ValueError(f"not monic: {coeffs}")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def as_array(self):
        return np.array(self.coeffs, dtype=np.int64)

    def reduce(self, e):
        ctx = self.ctx.reduce(e)
        return MonicPoly(tuple(ci % ctx.modulus for ci in self.coeffs), ctx)

    def evaluate(self, x):
        m = self.ctx.modulus
        acc = 0
        for coef in reversed(self.coeffs):
            acc = (acc * x + coef) % m
        return ResidueInt(acc, self.ctx)

    def __mul__(self, other):
        if not isinstance(other, MonicPoly) or other.ctx != self.ctx:
            return NotImplemented
        m = self.ctx.modulus
        out = [0] * (self.degree + other.degree + 1)
        for i, ai in enumerate(self.coeffs):
            if ai == 0:
                continue
            for j, bj in enumerate(other.coeffs):
                out[i + j] = (out[i + j] + ai * bj) % m
        return MonicPoly(tuple(out), self.ctx)


class GaloisRing:
    """The quotient Z/p^e[c]/(g) for a monic g irreducible mod p.

    Elements are coefficient vectors of length deg(g); the class of c is the
    image of every root of g, so Tr(F(c)) is the sum of F over those roots.
    """

    def __init__(self, modpoly):
        self.modpoly = modpoly
        self.ctx = modpoly.ctx
        self.degree = modpoly.degree
        self._g = modpoly.as_array()
        self._g_mod_p = _gfpoly.trim([ci % self.ctx.p for ci in modpoly.coeffs])
        self._fl_inverses = np.array(
            [pow(k, -1, self.ctx.modulus) for k in range(1, self.degree + 1)],
            dtype=np.int64,
        )

    def elt(self, coeffs):
        m = self.ctx.modulus
        arr = np.zeros(self.degree, dtype=np.int64)
        for i, ci in enumerate(coeffs):
            arr[i] = int(ci) % m
        return GaloisElt(self, arr)

    def scalar(self, k):
        return self.elt([k])

    def zero(self):
        return self.elt([])

    def one(self):
        return self.elt([1])

    def gen(self):
        """The class of c (for a linear g this is the root itself)."""
        if self.degree == 1:
            return self.elt([-self.modpoly.coeffs[0]])
        return self.elt([0, 1])

    def mul(self, a, b):
        return GaloisElt(
            self, kernels.poly_mulmod(a.coeffs, b.coeffs, self._g, self.ctx.modulus)
        )

    def pow(self, a, n):
        if n < 0:
            return self.pow(self.inv(a), -n)
        return GaloisElt(
            self, kernels.poly_powmod(a.coeffs, n, self._g, self.ctx.modulus)
        )

    def inv(self, a):
        """Inverse via extended Euclid mod p, then Newton lifting to p^e."""
        p = self.ctx.p
        a_mod_p = _gfpoly.trim([int(v) % p for v in a.coeffs])
        v0 = _gfpoly.invert_mod(a_mod_p, self._g_mod_p, p)
        if v0 is None:
            raise NotAUnit(f"non-unit element {list(a.coeffs)} in {self!r}")
        v = self.elt(v0)
        two = self.scalar(2)
        precision = 1
        while precision < self.ctx.e:
            v = self.mul(v, two - self.mul(a, v))
            precision *= 2
        return v

    def trace(self, a):
        """Trace of multiplication by a: the sum of a over the roots of g."""
        return ResidueInt(
            int(kernels.trace_mult(a.coeffs, self._g, self.ctx.modulus)), self.ctx
        )

    def charpoly(self, a):
        """Characteristic polynomial of multiplication by a.

        Its coefficients are the signed elementary symmetric functions of a
        evaluated at the roots of g.  Faddeev-LeVerrier divides only by
        1..deg(g), all units mod p^e since deg(g) < p.
        """
        mat = kernels.mult_matrix(a.coeffs, self._g, self.ctx.modulus)
        coeffs = kernels.fl_charpoly(mat, self._fl_inverses, self.ctx.modulus)
        return MonicPoly(tuple(int(v) for v in coeffs), self.ctx)

    def weighted_powers(self, a, weights):
        """sum_k weights[k-1] * a^k; the workhorse behind finite polylogarithms."""
        return GaloisElt(
            self,
            kernels.weighted_powers_poly(a.coeffs, weights, self._g, self.ctx.modulus),
        )

    def reduce(self, e):
        return GaloisRing(self.modpoly.reduce(e))

    def __repr__(self):
        return f"GaloisRing(deg={self.degree}, mod {self.ctx.p}^{self.ctx.e})"


class GaloisElt:
    """An element of a GaloisRing, wrapping an int64 coefficient vector."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, GaloisElt):
            if other.ring is not self.ring and other.ring.modpoly != self.ring.modpoly:
                raise ValueError("mixed Galois rings")
            return other
        if isinstance(other, (int, ResidueInt)):
            return self.ring.scalar(int(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaloisElt(self.ring, (self.coeffs + o.coeffs) % self.ring.ctx.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaloisElt(self.ring, (self.coeffs - o.coeffs) % self.ring.ctx.modulus)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaloisElt(self.ring, (o.coeffs - self.coeffs) % self.ring.ctx.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.ring.mul(self, o)

    __rmul__ = __mul__

    def __neg__(self):
        return GaloisElt(self.ring, (-self.coeffs) % self.ring.ctx.modulus)

    def __pow__(self, n):
        return self.ring.pow(self, n)

    def inverse(self):
        return self.ring.inv(self)

    def trace(self):
        return self.ring.trace(self)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return bool(np.all(self.coeffs == o.coeffs))

    def __repr__(self):
        return f"GaloisElt({list(self.coeffs)} in {self.ring!r})"


def galois_mul(a, b):
    return a * b


def galois_inv(a):
    return a.inverse()


def galois_pow(a, n):
    return a ** n


def mult_trace(a):
    return a.trace()


def mult_charpoly(a):
    return a.ring.charpoly(a)
