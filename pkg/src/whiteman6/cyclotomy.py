"""Whiteman generalized cyclotomic classes of order 6 modulo n1*n2."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd

import numpy as np
from sympy import isprime

from .field_core import multiplicative_order

LABELS = ("R", "N1", "N2", "D0", "D1", "D2", "D3", "D4", "D5")
R, N1, N2 = 0, 1, 2  # membership codes; D_i is coded as 3 + i


class InvalidParameters(ValueError):
    pass


@dataclass(frozen=True)
class TwoPrimeParams:
    """An ordered pair of primes (n1, n2) with gcd(n1 - 1, n2 - 1) = 6."""

    n1: int
    n2: int

    def __post_init__(self):
        for name, v in (("n1", self.n1), ("n2", self.n2)):
            if not isprime(v):
                raise InvalidParameters(f"{name} = {v} is not prime")
            if v == 2:
                raise InvalidParameters(f"{name} = 2 is not an odd prime")
        if self.n1 == self.n2:
            raise InvalidParameters("n1 and n2 must be distinct")
        g = gcd(self.n1 - 1, self.n2 - 1)
        if g != 6:
            raise InvalidParameters(
                f"gcd(n1-1, n2-1) = gcd({self.n1 - 1}, {self.n2 - 1}) = {g} != 6"
            )

    @property
    def n(self) -> int:
        return self.n1 * self.n2

    @property
    def e(self) -> int:
        return (self.n1 - 1) * (self.n2 - 1) // 6


def common_primitive_root(n1: int, n2: int) -> int:
    """Smallest g >= 2 that is a primitive root of both n1 and n2."""
    g = 2
    while True:
        if (
            g % n1
            and g % n2
            and multiplicative_order(g, n1) == n1 - 1
            and multiplicative_order(g, n2) == n2 - 1
        ):
            return g
        g += 1


def crt_witness(g: int, n1: int, n2: int) -> int:
    """The x in [0, n1*n2) with x = g (mod n1) and x = 1 (mod n2)."""
    n = n1 * n2
    # x = 1 + n2 * t, with n2 * t = g - 1 (mod n1)
    t = ((g - 1) * pow(n2, -1, n1)) % n1
    return (1 + n2 * t) % n


@dataclass(frozen=True)
class WhitemanSystem:
    params: TwoPrimeParams
    g: int
    x: int
    classes: tuple  # six sorted tuples D_0 .. D_5
    membership: np.ndarray = field(repr=False, compare=False)

    @property
    def n1(self) -> int:
        return self.params.n1

    @property
    def n2(self) -> int:
        return self.params.n2

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def e(self) -> int:
        return self.params.e

    @cached_property
    def N1(self) -> tuple:
        return tuple(k * self.n1 for k in range(1, self.n2))

    @cached_property
    def N2(self) -> tuple:
        return tuple(k * self.n2 for k in range(1, self.n1))

    @cached_property
    def units(self) -> tuple:
        return tuple(sorted(r for D in self.classes for r in D))

    def class_of(self, a: int) -> str:
        return class_of(self, a)

    def class_index(self, a: int) -> int:
        """i if a lies in D_i, else -1."""
        code = int(self.membership[a % self.n])
        return code - 3 if code >= 3 else -1

    def summary(self, full: bool = False) -> dict:
        out = {
            "n1": self.n1,
            "n2": self.n2,
            "n": self.n,
            "g": self.g,
            "x": self.x,
            "e": self.e,
            "class_sizes": [len(D) for D in self.classes],
            "N1_size": len(self.N1),
            "N2_size": len(self.N2),
        }
        if full:
            out["classes"] = [list(D) for D in self.classes]
        return out


def build_classes(params: TwoPrimeParams, g: int | None = None) -> WhitemanSystem:
    """Build D_i = {g^s x^i : 0 <= s < e} and the residue membership table."""
    n1, n2, n, e = params.n1, params.n2, params.n, params.e
    if g is None:
        g = common_primitive_root(n1, n2)
    x = crt_witness(g, n1, n2)
    classes = []
    for i in range(6):
        xi = pow(x, i, n)
        cls = set()
        t = xi
        for _ in range(e):
            cls.add(t)
            t = (t * g) % n
        classes.append(tuple(sorted(cls)))

    membership = np.full(n, -1, dtype=np.int8)
    membership[0] = R
    for k in range(1, n2):
        membership[k * n1] = N1
    for k in range(1, n1):
        membership[k * n2] = N2
    problems = []
    for i, D in enumerate(classes):
        if len(D) != e:
            problems.append(f"|D_{i}| = {len(D)} != e = {e}")
        for r in D:
            if membership[r] != -1:
                problems.append(f"{r} lies in D_{i} and in {LABELS[membership[r]]}")
                break
            membership[r] = 3 + i
    if (membership == -1).any():
        missing = int(np.flatnonzero(membership == -1)[0])
        problems.append(f"residue {missing} is not covered")
    if problems:
        raise InvalidParameters("class partition check failed: " + "; ".join(problems))
    membership.setflags(write=False)
    return WhitemanSystem(params, g, x, tuple(classes), membership)


def class_of(sys: WhitemanSystem, a: int) -> str:
    """One of 'R', 'N1', 'N2', 'D0' .. 'D5'."""
    if not 0 <= a < sys.n:
        raise ValueError(f"residue {a} outside [0, {sys.n})")
    return LABELS[int(sys.membership[a])]


def system_for(n1: int, n2: int) -> WhitemanSystem:
    return build_classes(TwoPrimeParams(n1, n2))
