from collections import Counter
from math import gcd

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from whiteman6.cyclotomy import (
    InvalidParameters,
    TwoPrimeParams,
    build_classes,
    class_of,
    common_primitive_root,
    crt_witness,
    system_for,
)

from conftest import IDENTITY_SETS

PRIMES = [p for p in sympy.primerange(5, 200)]
VALID_PAIRS = [(a, b) for a in PRIMES for b in PRIMES if a != b and gcd(a - 1, b - 1) == 6 and a * b < 3000]


def brute_common_root(n1, n2):
    g = 2
    while not (
        g % n1 and g % n2 and sympy.n_order(g, n1) == n1 - 1 and sympy.n_order(g, n2) == n2 - 1
    ):
        g += 1
    return g


@pytest.mark.parametrize(
    "n1,n2,msg",
    [(7, 15, "15 is not prime"), (7, 7, "distinct"), (2, 7, "odd"), (7, 11, "gcd(n1-1, n2-1)"), (5, 11, "!= 6")],
)
def test_invalid_parameters_name_the_constraint(n1, n2, msg):
    with pytest.raises(InvalidParameters, match=msg.replace("(", r"\(").replace(")", r"\)")):
        TwoPrimeParams(n1, n2)


@pytest.mark.parametrize("pair,g", [((7, 13), 19), ((13, 7), 19), ((13, 19), 2), ((31, 19), 3)])
def test_common_primitive_root(pair, g):
    assert common_primitive_root(*pair) == g == brute_common_root(*pair)


def test_crt_witness_example():
    assert crt_witness(19, 7, 13) == 40


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(VALID_PAIRS))
def test_crt_and_root_properties(pair):
    n1, n2 = pair
    g = common_primitive_root(n1, n2)
    assert sympy.n_order(g, n1) == n1 - 1 and sympy.n_order(g, n2) == n2 - 1
    x = crt_witness(g, n1, n2)
    assert 0 <= x < n1 * n2 and x % n2 == 1 and x % n1 == g % n1


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(VALID_PAIRS))
def test_partition(pair):
    sys = system_for(*pair)
    n, e = sys.n, sys.e
    seen = Counter()
    for D in sys.classes:
        assert len(D) == e
        seen.update(D)
    units = {a for a in range(n) if gcd(a, n) == 1}
    assert set(seen) == units and max(seen.values()) == 1
    assert 1 + len(sys.N1) + len(sys.N2) + 6 * e == n
    labels = Counter(class_of(sys, a) for a in range(n))
    assert labels["R"] == 1 and labels["N1"] == sys.n2 - 1 and labels["N2"] == sys.n1 - 1


def test_counts_for_7_13():
    sys = system_for(7, 13)
    assert (len(sys.N1), len(sys.N2), len(sys.units)) == (12, 6, 72)


@pytest.mark.parametrize("pair", IDENTITY_SETS + [(31, 19), (13, 31)])
def test_reduction_multiplicity(pair):
    sys = system_for(*pair)
    n1, n2 = pair
    for D in sys.classes:
        assert Counter(d % n1 for d in D) == {r: (n2 - 1) // 6 for r in range(1, n1)}
        assert Counter(d % n2 for d in D) == {r: (n1 - 1) // 6 for r in range(1, n2)}


@pytest.mark.parametrize("pair", IDENTITY_SETS)
def test_class_multiplication_by_sets(pair):
    sys = system_for(*pair)
    sets = [frozenset(D) for D in sys.classes]
    for i, Di in enumerate(sets):
        for r in Di:
            for j, Dj in enumerate(sets):
                assert frozenset(r * d % sys.n for d in Dj) == sets[(i + j) % 6]


def test_class_of_examples():
    sys = system_for(7, 13)
    assert class_of(sys, 0) == "R"
    assert class_of(sys, 7) == "N1"
    assert class_of(sys, 13) == "N2"
    assert class_of(sys, sys.g % sys.n) == "D0"
    assert class_of(sys, sys.x) == "D1"
    with pytest.raises(ValueError):
        class_of(sys, 91)


@pytest.mark.parametrize("pair", IDENTITY_SETS)
@pytest.mark.parametrize("q", [2, 3, 5, 11])
def test_q_lands_in_a_d_class(pair, q):
    sys = system_for(*pair)
    if gcd(q, sys.n) == 1:
        assert class_of(sys, q % sys.n).startswith("D")


def test_explicit_g_must_be_a_common_root():
    with pytest.raises(InvalidParameters):
        build_classes(TwoPrimeParams(7, 13), g=2)


def test_summary_fields():
    s = system_for(7, 13).summary(full=True)
    assert (s["g"], s["x"], s["e"]) == (19, 40, 12)
    assert s["class_sizes"] == [12] * 6 and len(s["classes"]) == 6
