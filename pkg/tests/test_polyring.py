import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from whiteman6.field_core import ExtField, ExtFieldElement, PrimeField
from whiteman6.polyring import (
    IndexSupportPoly,
    Poly,
    build_d_a,
    divrem,
    poly_gcd,
    power_table,
    support_poly,
    x_n_minus_1,
)

from conftest import IDENTITY_SETS, cached_setting

X = sympy.Symbol("x")
EXAMPLE1_GEN = "1,1,1,1,1,1,1,0,0,0,0,0,0,1,1,1,1,1,1,1"


def base_polys(q, max_deg=25):
    return st.lists(st.integers(0, q - 1), max_size=max_deg + 1).map(lambda c: Poly(c, q))


def to_sym(p):
    return sympy.Poly(list(reversed(p.coefficient_list())) or [0], X, modulus=p.field.q)


@settings(max_examples=80)
@given(st.data())
def test_divrem_reconstructs(data):
    q = data.draw(st.sampled_from([2, 3, 5, 7]))
    a = data.draw(base_polys(q))
    b = data.draw(base_polys(q).filter(lambda p: not p.is_zero()))
    quo, rem = divrem(a, b)
    assert quo * b + rem == a
    assert rem.is_zero() or rem.degree < b.degree


@settings(max_examples=40)
@given(st.data())
def test_divrem_in_extension(data):
    F = ExtField(3, 3)
    elt = st.lists(st.integers(0, 2), min_size=3, max_size=3)
    a = Poly(np.array(data.draw(st.lists(elt, max_size=8)), dtype=np.int64).reshape(-1, 3), F)
    b = Poly(np.array(data.draw(st.lists(elt, min_size=1, max_size=5)), dtype=np.int64).reshape(-1, 3), F)
    if b.is_zero():
        return
    quo, rem = divrem(a, b)
    assert quo * b + rem == a
    assert rem.is_zero() or rem.degree < b.degree


@settings(max_examples=80)
@given(st.data())
def test_gcd_matches_sympy(data):
    q = data.draw(st.sampled_from([2, 3, 5]))
    common = data.draw(base_polys(q, 6))
    a = data.draw(base_polys(q, 12)) * common
    b = data.draw(base_polys(q, 12)) * common
    if a.is_zero() and b.is_zero():
        return
    g = poly_gcd(a, b)
    assert g.is_monic()
    assert g.divides(a) and g.divides(b)
    want = sympy.gcd(to_sym(a), to_sym(b)).monic()
    assert to_sym(g) == want


def test_division_by_zero_reported():
    with pytest.raises(ZeroDivisionError):
        divrem(Poly([1, 1], 2), Poly.zero(2))


def test_canonical_form_trims():
    p = Poly([1, 0, 1, 0, 0], 2)
    assert p.degree == 2
    assert Poly([0, 0], 2).is_zero() and Poly([0, 0], 2).degree == -1


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        Poly([1, 1], 2) + Poly([1, 1], 3)


@settings(max_examples=60)
@given(st.sampled_from([2, 3, 5]).flatmap(base_polys))
def test_comma_round_trip(p):
    assert Poly.from_comma(p.to_comma(), p.field) == p


def test_text_forms():
    p = Poly.from_comma("1,1,0,1", 2)
    assert p.to_pretty() == "1+x+x^3"
    assert Poly([0, 2, 1], 3).to_pretty() == "2x+x^2"
    with pytest.raises(ValueError):
        Poly.from_comma("", 2)


def test_example1_polynomial_factors():
    # (x^7 - 1) * sum_{i<13} x^i over GF(2)
    F = PrimeField(2)
    p = x_n_minus_1(7, F) * support_poly(range(13), 13, F)
    assert p.to_comma() == EXAMPLE1_GEN
    assert p.degree == 19


def test_evaluation_examples():
    s = cached_setting(7, 13, 2)
    F2 = PrimeField(2)
    assert x_n_minus_1(91, F2).eval(s.beta).is_zero()
    assert support_poly(range(91), 91, F2)(1) == 91 % 2
    assert support_poly(range(10), 10, PrimeField(3))(1) == 10 % 3
    for n1, n2 in IDENTITY_SETS:
        s = cached_setting(n1, n2, 2)
        assert s.polys["S"](1) == s.omegas.omega
        assert s.polys["S"].eval(s.field.one()) == s.omegas.omega


def test_horner_matches_power_sums():
    s = cached_setting(13, 19, 2)
    table = power_table(s.beta, s.n)
    S = s.polys["S"]
    for a in (1, 2, 5, 19, 13, 100):
        pt = s.beta**a
        idx = (np.flatnonzero(S.coeffs) * a) % s.n
        assert np.array_equal(S.eval(pt).vec, table[idx].sum(0) % 2)


def test_support_poly_and_index_form():
    F = PrimeField(2)
    with pytest.raises(ValueError):
        support_poly([0, 7], 7, F)
    isp = IndexSupportPoly((0, 2, 5), 7)
    assert isp.to_poly(F).to_comma() == "1,0,1,0,0,1"
    with pytest.raises(ValueError):
        IndexSupportPoly((0, 9), 7)


def test_from_roots_and_descent():
    F = ExtField(2, 3)
    y = F.gen()
    # the three conjugates of y give back the modulus
    p = Poly.from_roots([y, y**2, y**4], F)
    assert p.descends()
    assert p.descend().coefficient_list() == list(F.modulus_coeffs)
    assert not Poly.from_roots([y], F).descends()


@pytest.mark.parametrize("pair", IDENTITY_SETS)
def test_d_a_degrees_and_factorisation(pair):
    s = cached_setting(*pair, 2)
    F = s.field
    e = s.sys.e
    acc = (x_n_minus_1(s.n1, 2) * x_n_minus_1(s.n2, 2) // x_n_minus_1(1, 2)).embed(F)
    for f in s.d_factors:
        assert f.poly.degree == e
        assert f.poly.is_monic()
        acc = acc * (f.poly.embed(F) if f.descended else f.poly)
    assert acc == x_n_minus_1(s.n, 2).embed(F)
    if s.q_class == 0:
        assert all(f.descended for f in s.d_factors)


def test_d_a_rejects_degenerate_beta():
    s = cached_setting(7, 13, 2)
    with pytest.raises(ValueError):
        build_d_a(s.sys, 0, s.field, s.beta**7)
    with pytest.raises(ValueError):
        build_d_a(s.sys, 6, s.field, s.beta)


def test_example4_generator_from_shifted_root():
    # with beta^u for u in D_2, d_0 d_1 d_2 is the oracle generator
    s = cached_setting(19, 13, 2)
    u = s.sys.classes[2][0]
    beta_u = s.beta**u
    prod = Poly.one(2)
    for a in range(3):
        f = build_d_a(s.sys, a, s.field, beta_u)
        assert f.descended
        prod = prod * f.poly
    xn1 = x_n_minus_1(s.n, 2)
    oracle = xn1 // poly_gcd(xn1, s.polys["S"])
    assert prod.degree == 108
    assert prod == oracle
