"""Exact arithmetic in GF(q), q prime, and in extension fields GF(q^m).

Extension-field elements are stored in the polynomial basis as length-m
int64 vectors. Multiplication is a convolution followed by a reduction
through a precomputed matrix holding y^(m+j) mod f for j = 0..m-2, so the
hot paths (Horner evaluation, products of linear factors) reduce to small
integer matrix products.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd, lcm

import numpy as np
from sympy import factorint, isprime

# Exponents up to q^m - 1 are Python ints, so they never overflow; this cap
# keeps field sizes at desk scale and bounds the int64 intermediate products.
MAX_FIELD_BITS = 1024


def multiplicative_order(q: int, n: int) -> int:
    """Smallest m >= 1 with q^m = 1 (mod n)."""
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    if gcd(q, n) != 1:
        raise ValueError(f"gcd(q, n) = gcd({q}, {n}) != 1")
    m, t = 1, q % n
    while t != 1:
        t = (t * q) % n
        m += 1
    return m


def order_via_factors(q: int, n1: int, n2: int) -> int:
    """Order of q modulo n1*n2 for coprime n1, n2, as an lcm."""
    return lcm(multiplicative_order(q, n1), multiplicative_order(q, n2))


@dataclass(frozen=True)
class PrimeField:
    q: int

    def __post_init__(self):
        if self.q < 2 or not isprime(self.q):
            raise ValueError(f"q = {self.q} is not prime")

    @property
    def p(self) -> int:
        return self.q

    def inv(self, a: int) -> int:
        a %= self.q
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.q)
        return pow(a, -1, self.q)

    def neg_one(self) -> int:
        return self.q - 1

    def __str__(self):
        return f"GF({self.q})"


def _trim(v: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(v)
    return v[: nz[-1] + 1] if nz.size else v[:0]


def _poly_mod(a: np.ndarray, f: np.ndarray, q: int) -> np.ndarray:
    """Remainder of a modulo monic f, both ascending int arrays over GF(q)."""
    a = a.copy() % q
    df = len(f) - 1
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i]
        if c:
            a[i - df : i + 1] = (a[i - df : i + 1] - c * f) % q
    return a[:df]


def _poly_gcd(a: np.ndarray, b: np.ndarray, q: int) -> np.ndarray:
    a, b = _trim(a % q), _trim(b % q)
    while b.size:
        inv = pow(int(b[-1]), -1, q)
        b = (b * inv) % q
        a, b = b, _trim(_poly_mod(a, b, q))
    if a.size:
        a = (a * pow(int(a[-1]), -1, q)) % q
    return a


class _Quotient:
    """GF(q)[y] / (f) for monic f of degree m (a field iff f is irreducible)."""

    def __init__(self, q: int, modulus: np.ndarray):
        self.q = q
        self.f = np.asarray(modulus, dtype=np.int64) % q
        self.m = len(self.f) - 1
        m = self.m
        if self.f[-1] != 1:
            raise ValueError("modulus must be monic")
        # row j: y^(m+j) mod f
        red = np.zeros((max(m - 1, 0), m), dtype=np.int64)
        if m > 1:
            red[0] = (-self.f[:m]) % q
            for j in range(1, m - 1):
                prev = red[j - 1]
                row = np.zeros(m, dtype=np.int64)
                row[1:] = prev[:-1]
                row = (row + prev[-1] * red[0]) % q
                red[j] = row
        self._red = red

    def reduce(self, c: np.ndarray) -> np.ndarray:
        """Reduce along the last axis from length <= 2m-1 to m."""
        m, q = self.m, self.q
        c = c % q
        if c.shape[-1] <= m:
            pad = [(0, 0)] * (c.ndim - 1) + [(0, m - c.shape[-1])]
            return np.pad(c, pad)
        hi = c[..., m:]
        return (c[..., :m] + hi @ self._red[: hi.shape[-1]]) % q

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.m == 1:
            return (a * b) % self.q
        return self.reduce(np.convolve(a, b))

    def mul_matrix(self, b: np.ndarray) -> np.ndarray:
        """Matrix M with a @ M == a*b for row vectors a."""
        m = self.m
        t = np.zeros((m, 2 * m - 1), dtype=np.int64)
        for j in range(m):
            t[j, j : j + m] = b
        return self.reduce(t)

    def pow(self, a: np.ndarray, e: int) -> np.ndarray:
        result = self.one()
        base = a % self.q
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def one(self) -> np.ndarray:
        v = np.zeros(self.m, dtype=np.int64)
        v[0] = 1
        return v

    def gen(self) -> np.ndarray:
        """Class of y."""
        if self.m == 1:
            return (-self.f[:1]) % self.q
        v = np.zeros(self.m, dtype=np.int64)
        v[1] = 1
        return v


def _int_digits(v: int, q: int, width: int) -> np.ndarray:
    out = np.zeros(width, dtype=np.int64)
    for i in range(width):
        v, out[i] = divmod(v, q)
    return out


def is_irreducible(q: int, f) -> bool:
    """Rabin's irreducibility test for a monic f over GF(q)."""
    f = np.asarray(f, dtype=np.int64) % q
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    ring = _Quotient(q, f)
    y = ring.gen()
    frob = [y]
    h = y
    for _ in range(m):
        h = ring.pow(h, q)
        frob.append(h)
    if not np.array_equal(frob[m], y):
        return False
    for r in factorint(m):
        d = m // r
        diff = frob[d].copy()
        diff[1] = (diff[1] - 1) % q
        g = _poly_gcd(diff, f, q)
        if len(g) > 1:
            return False
    return True


@lru_cache(maxsize=None)
def _find_irreducible_coeffs(q: int, m: int) -> tuple:
    base = q**m
    for v in range(q**m):
        coeffs = _int_digits(base + v, q, m + 1)
        if coeffs[0] == 0 and m > 1:
            continue
        if m > 1 and _has_root(coeffs, q):
            continue
        if is_irreducible(q, coeffs):
            return tuple(int(c) for c in coeffs)
    raise AssertionError(f"no irreducible of degree {m} over GF({q})")


def _has_root(coeffs: np.ndarray, q: int) -> bool:
    if q > 64:
        return False
    xs = np.arange(q, dtype=np.int64)
    acc = np.zeros(q, dtype=np.int64)
    for c in coeffs[::-1]:
        acc = (acc * xs + c) % q
    return bool((acc == 0).any())


def find_irreducible(q: int, m: int):
    """First monic irreducible of degree m over GF(q).

    Candidates are ordered by the integer whose base-q digits are the
    coefficients (constant term least significant), so over GF(2) the
    cubic returned is x^3 + x + 1.
    """
    from .polyring import Poly

    if m < 1:
        raise ValueError("degree must be >= 1")
    PrimeField(q)
    return Poly(_find_irreducible_coeffs(q, m), PrimeField(q))


class ExtField:
    """GF(q^m) realised as GF(q)[y]/(modulus)."""

    def __init__(self, base: PrimeField | int, m: int, modulus=None):
        if isinstance(base, int):
            base = PrimeField(base)
        self.base = base
        self.q = base.q
        self.m = m
        if (self.q**m - 1).bit_length() > MAX_FIELD_BITS:
            raise ValueError(
                f"GF({self.q}^{m}) exceeds the exact-arithmetic capacity "
                f"({MAX_FIELD_BITS} bits)"
            )
        if self.q * self.q * m >= 2**62:
            raise ValueError("q too large for int64 reduction")
        if modulus is None:
            coeffs = np.array(_find_irreducible_coeffs(self.q, m), dtype=np.int64)
        else:
            coeffs = np.asarray(getattr(modulus, "coeffs", modulus), dtype=np.int64)
            if len(coeffs) - 1 != m:
                raise ValueError("modulus degree does not match m")
            if not is_irreducible(self.q, coeffs):
                raise ValueError("modulus is not irreducible")
        self._ring = _Quotient(self.q, coeffs)
        self.modulus_coeffs = tuple(int(c) for c in coeffs)

    @property
    def order(self) -> int:
        return self.q**self.m

    @property
    def modulus(self):
        from .polyring import Poly

        return Poly(self.modulus_coeffs, self.base)

    def __eq__(self, other):
        return (
            isinstance(other, ExtField)
            and self.q == other.q
            and self.modulus_coeffs == other.modulus_coeffs
        )

    def __hash__(self):
        return hash((self.q, self.modulus_coeffs))

    def __repr__(self):
        return f"ExtField(GF({self.q}^{self.m}))"

    # vector-level operations, used by polyring hot loops
    def mul_vec(self, a, b):
        return self._ring.mul(a, b)

    def mul_matrix(self, b):
        if self.m == 1:
            return np.array([[int(b[0]) % self.q]], dtype=np.int64)
        return self._ring.mul_matrix(b)

    def reduce(self, c):
        return self._ring.reduce(c)

    def pow_vec(self, a, e: int):
        if e < 0:
            a = self.inv_vec(a)
            e = -e
        return self._ring.pow(a, e)

    def inv_vec(self, a):
        if not np.any(a % self.q):
            raise ZeroDivisionError("inverse of zero in %r" % self)
        return self._ring.pow(a, self.order - 2)

    # element constructors
    def element(self, coeffs) -> ExtFieldElement:
        v = np.zeros(self.m, dtype=np.int64)
        coeffs = np.asarray(coeffs, dtype=np.int64).ravel()
        if len(coeffs) > self.m:
            raise ValueError("too many coefficients for this field")
        v[: len(coeffs)] = coeffs % self.q
        return ExtFieldElement(self, v)

    def from_int(self, v: int) -> ExtFieldElement:
        return ExtFieldElement(self, _int_digits(v, self.q, self.m))

    def zero(self) -> ExtFieldElement:
        return self.element([0])

    def one(self) -> ExtFieldElement:
        return self.element([1])

    def scalar(self, c: int) -> ExtFieldElement:
        return self.element([c % self.q])

    def gen(self) -> ExtFieldElement:
        return ExtFieldElement(self, self._ring.gen())

    def elements(self):
        for v in range(self.order):
            yield self.from_int(v)

    @cached_property
    def group_order_factors(self) -> tuple:
        return tuple(sorted(factorint(self.order - 1)))


class ExtFieldElement:
    __slots__ = ("field", "vec")

    def __init__(self, field: ExtField, vec: np.ndarray):
        self.field = field
        self.vec = vec

    @property
    def coeffs(self) -> tuple:
        return tuple(int(c) for c in self.vec)

    def _coerce(self, other):
        if isinstance(other, ExtFieldElement):
            if other.field != self.field:
                raise ValueError("elements from different fields")
            return other.vec
        if isinstance(other, (int, np.integer)):
            return self.field.scalar(int(other)).vec
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ExtFieldElement(self.field, (self.vec + o) % self.field.q)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ExtFieldElement(self.field, (self.vec - o) % self.field.q)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return ExtFieldElement(self.field, (-self.vec) % self.field.q)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ExtFieldElement(self.field, self.field.mul_vec(self.vec, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ExtFieldElement(self.field, self.field.mul_vec(self.vec, self.field.inv_vec(o)))

    def __pow__(self, e: int):
        return ExtFieldElement(self.field, self.field.pow_vec(self.vec, e))

    def inv(self) -> ExtFieldElement:
        return ExtFieldElement(self.field, self.field.inv_vec(self.vec))

    def frobenius(self, times: int = 1) -> ExtFieldElement:
        return self ** (self.field.q**times)

    def is_zero(self) -> bool:
        return not self.vec.any()

    def is_one(self) -> bool:
        return self.vec[0] == 1 and not self.vec[1:].any()

    def is_minus_one(self) -> bool:
        return self.vec[0] == self.field.q - 1 and not self.vec[1:].any()

    def in_base_field(self) -> bool:
        return not self.vec[1:].any()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return bool(np.array_equal(self.vec, o))

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"ExtFieldElement({list(self.coeffs)})"

    def order(self) -> int:
        """Multiplicative order, via the factorisation of q^m - 1."""
        if self.is_zero():
            raise ZeroDivisionError("zero has no multiplicative order")
        F = self.field
        n = F.order - 1
        for r in F.group_order_factors:
            while n % r == 0 and (self ** (n // r)).is_one():
                n //= r
        return n


def has_exact_order(a: ExtFieldElement, n: int) -> bool:
    """a^n = 1 and a^(n/r) != 1 for every prime r dividing n."""
    if not (a**n).is_one():
        return False
    return all(not (a ** (n // r)).is_one() for r in factorint(n))


def primitive_element(F: ExtField) -> ExtFieldElement:
    """First nonzero element, in integer-encoding order, of order q^m - 1."""
    n = F.order - 1
    for v in range(1, F.order):
        a = F.from_int(v)
        if all(not (a ** (n // r)).is_one() for r in F.group_order_factors):
            return a
    raise AssertionError("no primitive element found")


def nth_root_of_unity(F: ExtField, n: int, alpha: ExtFieldElement | None = None):
    """beta = alpha^((q^m - 1)/n) for the primitive element alpha."""
    total = F.order - 1
    if n < 1 or total % n:
        raise ValueError(f"n = {n} does not divide q^m - 1 = {total}")
    if alpha is None:
        alpha = primitive_element(F)
    return alpha ** (total // n)


def splitting_field(q: int, n: int) -> tuple[ExtField, ExtFieldElement]:
    """GF(q^m) with m = ord_n(q) and a primitive n-th root of unity in it."""
    m = multiplicative_order(q, n)
    F = ExtField(PrimeField(q), m)
    return F, nth_root_of_unity(F, n)
