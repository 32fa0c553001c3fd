"""Dense univariate polynomials over GF(q) or GF(q^m).

Coefficients are ascending. Over GF(q) they form a 1-D int64 array; over
GF(q^m) a 2-D array of shape (degree + 1, m) whose rows are field elements
in the polynomial basis. The zero polynomial has no coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from .field_core import ExtField, ExtFieldElement, PrimeField, has_exact_order

Field = Union[PrimeField, ExtField]


def _trim(c: np.ndarray) -> np.ndarray:
    if c.ndim == 1:
        nz = np.flatnonzero(c)
    else:
        nz = np.flatnonzero(c.any(axis=1))
    return c[: nz[-1] + 1] if nz.size else c[:0]


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, coeffs, field: Field | int):
        if isinstance(field, int):
            field = PrimeField(field)
        self.field = field
        q = field.q
        if isinstance(field, ExtField):
            c = np.asarray(coeffs, dtype=np.int64)
            if c.ndim == 1:
                c = c.reshape(-1, field.m) if c.size else np.zeros((0, field.m), np.int64)
            if c.shape[1] != field.m:
                raise ValueError("extension coefficients must have width m")
        else:
            c = np.asarray(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs, dtype=np.int64)
            c = c.ravel()
        self.coeffs = _trim(c % q)

    # constructors
    @classmethod
    def zero(cls, field) -> Poly:
        return cls([], field)

    @classmethod
    def one(cls, field) -> Poly:
        return cls.monomial(0, field)

    @classmethod
    def monomial(cls, k: int, field, c: int = 1) -> Poly:
        if isinstance(field, ExtField):
            arr = np.zeros((k + 1, field.m), dtype=np.int64)
            arr[k, 0] = c
        else:
            arr = np.zeros(k + 1, dtype=np.int64)
            arr[k] = c
        return cls(arr, field)

    @classmethod
    def from_roots(cls, roots: Iterable[ExtFieldElement], field: ExtField) -> Poly:
        """prod (x - r) over the given roots, computed in `field`."""
        m, q = field.m, field.q
        acc = np.zeros((1, m), dtype=np.int64)
        acc[0, 0] = 1
        for r in roots:
            nxt = np.zeros((acc.shape[0] + 1, m), dtype=np.int64)
            nxt[1:] = acc
            nxt[:-1] -= acc @ field.mul_matrix(r.vec)
            acc = nxt % q
        return cls(acc, field)

    # basic properties
    @property
    def is_ext(self) -> bool:
        return isinstance(self.field, ExtField)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    def lead(self):
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        if self.is_zero():
            return False
        lc = self.coeffs[-1]
        return bool(lc[0] == 1 and not lc[1:].any()) if self.is_ext else lc == 1

    def weight(self) -> int:
        if self.is_ext:
            return int(self.coeffs.any(axis=1).sum())
        return int(np.count_nonzero(self.coeffs))

    def coefficient_list(self) -> list:
        if self.is_ext:
            return [tuple(int(v) for v in row) for row in self.coeffs]
        return [int(v) for v in self.coeffs]

    # arithmetic
    def _check(self, other: Poly):
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.field != self.field:
            raise ValueError("polynomials over different fields")

    def _padded(self, length: int) -> np.ndarray:
        shape = (length,) + self.coeffs.shape[1:]
        out = np.zeros(shape, dtype=np.int64)
        out[: len(self.coeffs)] = self.coeffs
        return out

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        L = max(len(self.coeffs), len(other.coeffs))
        return Poly(self._padded(L) + other._padded(L), self.field)

    def __sub__(self, other: Poly) -> Poly:
        self._check(other)
        L = max(len(self.coeffs), len(other.coeffs))
        return Poly(self._padded(L) - other._padded(L), self.field)

    def __neg__(self) -> Poly:
        return Poly(-self.coeffs, self.field)

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, np.integer)):
            return Poly(self.coeffs * int(other), self.field)
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.field)
        if not self.is_ext:
            return Poly(np.convolve(self.coeffs, other.coeffs), self.field)
        return Poly(_ext_polymul(self.coeffs, other.coeffs, self.field), self.field)

    __rmul__ = __mul__

    def scale(self, c) -> Poly:
        """Multiply every coefficient by a field element."""
        if self.is_ext:
            vec = c.vec if isinstance(c, ExtFieldElement) else np.asarray(c)
            return Poly(self.coeffs @ self.field.mul_matrix(vec), self.field)
        return Poly(self.coeffs * int(c), self.field)

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        return divrem(self, other)

    def __floordiv__(self, other: Poly) -> Poly:
        return divrem(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divrem(self, other)[1]

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs.tobytes(), self.coeffs.shape))

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        if self.is_ext:
            inv = self.field.inv_vec(self.coeffs[-1])
            return Poly(self.coeffs @ self.field.mul_matrix(inv), self.field)
        return self * self.field.inv(int(self.coeffs[-1]))

    def divides(self, other: Poly) -> bool:
        return divrem(other, self)[1].is_zero()

    # change of coefficient field
    def embed(self, F: ExtField) -> Poly:
        if self.is_ext:
            if self.field != F:
                raise ValueError("cannot move between different extensions")
            return self
        if F.q != self.field.q:
            raise ValueError("characteristic mismatch")
        arr = np.zeros((len(self.coeffs), F.m), dtype=np.int64)
        arr[:, 0] = self.coeffs
        return Poly(arr, F)

    def descends(self) -> bool:
        """True if every coefficient lies in the prime field."""
        return (not self.is_ext) or not self.coeffs[:, 1:].any()

    def descend(self) -> Poly:
        if not self.is_ext:
            return self
        if not self.descends():
            raise ValueError("coefficients do not lie in the base field")
        return Poly(self.coeffs[:, 0], self.field.base)

    # evaluation
    def eval(self, pt: ExtFieldElement) -> ExtFieldElement:
        """Horner evaluation at a point of the extension field."""
        F = pt.field
        if self.is_ext and self.field != F:
            raise ValueError("point lies in a different field")
        if not self.is_ext and F.q != self.field.q:
            raise ValueError("characteristic mismatch")
        q = F.q
        M = F.mul_matrix(pt.vec)
        acc = np.zeros(F.m, dtype=np.int64)
        if self.is_ext:
            for c in self.coeffs[::-1]:
                acc = (acc @ M + c) % q
        else:
            for c in self.coeffs[::-1]:
                acc = acc @ M % q
                acc[0] = (acc[0] + c) % q
        return ExtFieldElement(F, acc)

    def __call__(self, pt):
        if isinstance(pt, ExtFieldElement):
            return self.eval(pt)
        q = self.field.q
        acc = 0
        for c in self.coeffs[::-1]:
            acc = (acc * pt + int(c)) % q
        return acc

    # text forms
    def to_comma(self) -> str:
        if self.is_ext:
            raise ValueError("comma form is defined for base-field polynomials only")
        if self.is_zero():
            return "0"
        return ",".join(str(int(c)) for c in self.coeffs)

    def to_pretty(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if self.is_ext:
                if not c.any():
                    continue
                coef = "[" + ",".join(str(int(v)) for v in c) + "]"
                if i == 0:
                    terms.append(coef)
                    continue
            else:
                if c == 0:
                    continue
                if i == 0:
                    terms.append(str(int(c)))
                    continue
                coef = "" if c == 1 else str(int(c))
            mono = "x" if i == 1 else f"x^{i}"
            terms.append(coef + mono)
        return "+".join(terms)

    @classmethod
    def from_comma(cls, text: str, field) -> Poly:
        text = text.strip()
        if not text:
            raise ValueError("empty polynomial string")
        return cls([int(t) for t in text.split(",")], field)

    def __repr__(self):
        return f"Poly({self.to_pretty()} over {self.field})"


def _ext_polymul(a: np.ndarray, b: np.ndarray, F: ExtField) -> np.ndarray:
    if len(a) < len(b):
        a, b = b, a
    out = np.zeros((len(a) + len(b) - 1, F.m), dtype=np.int64)
    for i, c in enumerate(b):
        if c.any():
            out[i : i + len(a)] += a @ F.mul_matrix(c)
            out[i : i + len(a)] %= F.q
    return out


def divrem(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder with deg(r) < deg(b)."""
    a._check(b)
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    F = a.field
    q = F.q
    db = b.degree
    if a.degree < db:
        return Poly.zero(F), a
    r = a.coeffs.copy()
    if not a.is_ext:
        inv = F.inv(int(b.coeffs[-1]))
        bc = b.coeffs
        quot = np.zeros(a.degree - db + 1, dtype=np.int64)
        for i in range(a.degree, db - 1, -1):
            c = (r[i] * inv) % q
            if c:
                quot[i - db] = c
                r[i - db : i + 1] = (r[i - db : i + 1] - c * bc) % q
        return Poly(quot, F), Poly(r[:db], F)
    bc = b.coeffs
    monic = b.is_monic()
    inv_m = None if monic else F.mul_matrix(F.inv_vec(bc[-1]))
    quot = np.zeros((a.degree - db + 1, F.m), dtype=np.int64)
    for i in range(a.degree, db - 1, -1):
        c = r[i] if monic else (r[i] @ inv_m) % q
        if c.any():
            quot[i - db] = c
            r[i - db : i + 1] = (r[i - db : i + 1] - bc @ F.mul_matrix(c)) % q
    return Poly(quot, F), Poly(r[:db], F)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm."""
    a._check(b)
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, divrem(a, b)[1]
    return a.monic()


def x_n_minus_1(n: int, field) -> Poly:
    return Poly.monomial(n, field) - Poly.one(field)


def support_poly(support: Iterable[int], n: int, field) -> Poly:
    """sum of x^i over a set of exponents in [0, n)."""
    idx = sorted(set(int(i) for i in support))
    if idx and (idx[0] < 0 or idx[-1] >= n):
        raise ValueError("exponents must lie in [0, n)")
    arr = np.zeros(n, dtype=np.int64)
    arr[idx] = 1
    return Poly(arr, field)


@dataclass(frozen=True)
class IndexSupportPoly:
    """Formal sum of x^i over a residue set; materialised on demand."""

    support: tuple
    n: int

    def __post_init__(self):
        s = tuple(sorted(set(self.support)))
        if s and (s[0] < 0 or s[-1] >= self.n):
            raise ValueError("exponents must lie in [0, n)")
        object.__setattr__(self, "support", s)

    def to_poly(self, field) -> Poly:
        return support_poly(self.support, self.n, field)


def power_table(beta: ExtFieldElement, n: int) -> np.ndarray:
    """Rows beta^0 .. beta^(n-1)."""
    F = beta.field
    M = F.mul_matrix(beta.vec)
    out = np.zeros((n, F.m), dtype=np.int64)
    out[0, 0] = 1
    for i in range(1, n):
        out[i] = out[i - 1] @ M % F.q
    return out


@dataclass(frozen=True)
class DaFactor:
    index: int
    poly: Poly  # over GF(q) when descended, else over GF(q^m)
    descended: bool


def build_d_a(sys, a: int, F: ExtField, beta: ExtFieldElement) -> DaFactor:
    """prod over i in D_a of (x - beta^i), descended to GF(q) when possible."""
    n = sys.n
    if not (0 <= a < 6):
        raise ValueError("class index must be in 0..5")
    if not has_exact_order(beta, n):
        raise ValueError("beta is not a primitive n-th root of unity")
    table = _cached_powers(beta, n)
    roots = [ExtFieldElement(F, table[i]) for i in sys.classes[a]]
    ext = Poly.from_roots(roots, F)
    if ext.descends():
        return DaFactor(a, ext.descend(), True)
    return DaFactor(a, ext, False)


_POWER_CACHE: dict = {}


def _cached_powers(beta: ExtFieldElement, n: int) -> np.ndarray:
    key = (beta.field, beta.coeffs, n)
    if key not in _POWER_CACHE:
        _POWER_CACHE[key] = power_table(beta, n)
    return _POWER_CACHE[key]
