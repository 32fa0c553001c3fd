"""The binary order-6 Whiteman sequence and its polynomials S(x), T(x), M(x)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd

import numpy as np

from .cyclotomy import InvalidParameters, TwoPrimeParams, WhitemanSystem, build_classes
from .field_core import ExtField, ExtFieldElement, PrimeField, splitting_field
from .polyring import Poly, support_poly

# classes contributing to each polynomial besides N1
STM_CLASSES = {"S": (0, 1, 2), "T": (1, 2, 3), "M": (2, 3, 4)}


@dataclass(frozen=True)
class CyclotomicSequence:
    sys: WhitemanSystem
    C0: tuple
    C1: tuple
    bits: np.ndarray

    @property
    def n(self) -> int:
        return self.sys.n

    @property
    def weight(self) -> int:
        return len(self.C1)


def build_sequence(sys: WhitemanSystem) -> CyclotomicSequence:
    D = sys.classes
    C1 = tuple(sorted(set(sys.N1).union(D[0], D[1], D[2])))
    C0 = tuple(sorted({0}.union(sys.N2, D[3], D[4], D[5])))
    bits = np.zeros(sys.n, dtype=np.int8)
    bits[list(C1)] = 1
    bits.setflags(write=False)
    return CyclotomicSequence(sys, C0, C1, bits)


def stm_support(sys: WhitemanSystem, which: str) -> tuple:
    D = sys.classes
    idx = set(sys.N1)
    for a in STM_CLASSES[which]:
        idx.update(D[a])
    return tuple(sorted(idx))


def stm_polys(seq: CyclotomicSequence, q: int) -> tuple[Poly, Poly, Poly]:
    """S(x), T(x), M(x) over GF(q)."""
    F = PrimeField(q)
    return tuple(support_poly(stm_support(seq.sys, w), seq.n, F) for w in "STM")


@dataclass(frozen=True)
class OmegaTriple:
    omega1: int
    omega2: int
    omega: int

    def as_tuple(self) -> tuple:
        return (self.omega1, self.omega2, self.omega)


def omega_triple(params: TwoPrimeParams, p: int) -> OmegaTriple:
    n1, n2 = params.n1, params.n2
    return OmegaTriple(
        ((n1 + 1) // 2) % p,
        ((n2 - 1) // 2) % p,
        ((n1 + 1) * (n2 - 1) // 2) % p,
    )


@dataclass(eq=False)
class Setting:
    """Everything needed to build codes for one (n1, n2, q)."""

    sys: WhitemanSystem
    q: int
    field: ExtField
    beta: ExtFieldElement

    @property
    def n(self) -> int:
        return self.sys.n

    @property
    def n1(self) -> int:
        return self.sys.n1

    @property
    def n2(self) -> int:
        return self.sys.n2

    @property
    def m(self) -> int:
        return self.field.m

    @cached_property
    def seq(self) -> CyclotomicSequence:
        return build_sequence(self.sys)

    @cached_property
    def polys(self) -> dict:
        return dict(zip("STM", stm_polys(self.seq, self.q)))

    @cached_property
    def omegas(self) -> OmegaTriple:
        return omega_triple(self.sys.params, self.q)

    @property
    def q_class(self) -> int:
        return self.sys.class_index(self.q % self.n)

    def value_at_beta(self, which: str) -> ExtFieldElement:
        return self._beta_values[which]

    @cached_property
    def _beta_values(self) -> dict:
        return {w: self.polys[w].eval(self.beta) for w in "STM"}

    @cached_property
    def d_factors(self) -> tuple:
        from .polyring import build_d_a

        return tuple(build_d_a(self.sys, a, self.field, self.beta) for a in range(6))


def make_setting(n1: int, n2: int, q: int, g: int | None = None) -> Setting:
    params = TwoPrimeParams(n1, n2)
    PrimeField(q)
    if gcd(q, params.n) != 1:
        raise InvalidParameters(f"gcd(q, n) = gcd({q}, {params.n}) != 1")
    sys = build_classes(params, g)
    F, beta = splitting_field(q, params.n)
    return Setting(sys, q, F, beta)


def eval_at_class(setting: Setting, which: str, a: int) -> ExtFieldElement:
    """which(beta^a), evaluated directly by Horner."""
    if which not in STM_CLASSES:
        raise ValueError(f"unknown polynomial {which!r}")
    if not 0 <= a < setting.n:
        raise ValueError(f"residue {a} outside [0, {setting.n})")
    return setting.polys[which].eval(setting.beta**a)


def class_closed_form(setting: Setting, which: str, a: int) -> ExtFieldElement:
    """Predicted value of which(beta^a) from the class of a.

    On units the six classes permute the values S, T, M, -(S+1), -(T+1),
    -(M+1) cyclically: a in D_j sends S to entry j, T to entry j+1, M to
    entry j+2 of that cycle.
    """
    F, p = setting.field, setting.q
    n1, n2 = setting.n1, setting.n2
    label = setting.sys.class_of(a)
    if label == "R":
        return F.scalar(len(stm_support(setting.sys, which)))
    if label == "N1":
        return F.scalar(-((n1 + 1) // 2))
    if label == "N2":
        return F.scalar((n2 - 1) // 2)
    j = int(label[1])
    S, T, M = (setting.value_at_beta(w) for w in "STM")
    cycle = [S, T, M, -(S + 1), -(T + 1), -(M + 1)]
    shift = "STM".index(which)
    return cycle[(j + shift) % 6]


def membership(v: ExtFieldElement) -> str:
    if v.is_zero():
        return "zero"
    if v.is_minus_one():
        return "minus-one"
    return "neither"
