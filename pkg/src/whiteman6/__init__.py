"""Cyclic codes defined by two-prime Whiteman generalized cyclotomic
sequences of order 6 over prime fields."""

from .codegen import CyclicCode, classify, construct, cross_check, generator_via_gcd, generator_via_theorem
from .cyclotomy import InvalidParameters, TwoPrimeParams, WhitemanSystem, build_classes, system_for
from .field_core import ExtField, ExtFieldElement, PrimeField, find_irreducible, splitting_field
from .polyring import Poly, poly_gcd
from .sequence import Setting, make_setting, omega_triple

__all__ = [
    "CyclicCode",
    "ExtField",
    "ExtFieldElement",
    "InvalidParameters",
    "Poly",
    "PrimeField",
    "Setting",
    "TwoPrimeParams",
    "WhitemanSystem",
    "build_classes",
    "classify",
    "construct",
    "cross_check",
    "find_irreducible",
    "generator_via_gcd",
    "generator_via_theorem",
    "make_setting",
    "omega_triple",
    "poly_gcd",
    "splitting_field",
    "system_for",
]
