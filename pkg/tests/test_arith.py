from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from flexcurves.arith import (
    BoundKind,
    evaluate_bound,
    factorize,
    format_rational,
    is_prime,
    largest_prime_power,
    mp_sequence,
    p_adic_valuation,
    vz_minus_s,
)
from flexcurves.errors import NotPrime, OutOfDomain
from oracles import h_oracle, vz_oracle


def test_valuations():
    assert p_adic_valuation(2, 12) == 2
    assert p_adic_valuation(3, 1287) == 2
    assert p_adic_valuation(5, 7) == 0
    with pytest.raises(NotPrime):
        p_adic_valuation(4, 12)
    with pytest.raises(OutOfDomain):
        p_adic_valuation(3, 0)


def test_largest_prime_power_examples():
    assert largest_prime_power(7) == 7
    assert largest_prime_power(15) == 5
    assert largest_prime_power(552123) == 169
    for m in (0, 1, -5):
        with pytest.raises(OutOfDomain):
            largest_prime_power(m)


def test_primality_matches_sympy():
    for n in range(-3, 5000):
        assert is_prime(n) == sympy.isprime(n)
    for n in (3215031751, 2152302898747, 3474749660383, 341550071728321,
              3825123056546413051, 318665857834031151167461, 3317044064679887385961981,
              2**89 - 1, 2**127 - 1, (2**61 - 1) * (2**67 - 1), 2**128 + 1):
        assert is_prime(n) == sympy.isprime(n), n


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=2, max_value=2**200))
def test_primality_random_bigints(n):
    assert is_prime(n) == sympy.isprime(n)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=10**14))
def test_factorize_matches_sympy(m):
    assert factorize(m) == sympy.factorint(m)


def test_factorize_semiprime_beyond_trial_division():
    p, q = 1000000007, 998244353
    assert factorize(p * q * 9) == {3: 2, q: 1, p: 1}


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=2, max_value=10**12))
def test_h_divides_and_cofactor_coprime(m):
    h = largest_prime_power(m)
    assert h == h_oracle(m)
    assert m % h == 0
    assert sympy.gcd(m // h, h) == 1


def test_bound_examples():
    assert evaluate_bound("s", m=7).value == 9
    assert evaluate_bound("vz", m=15).value == 38
    assert evaluate_bound("hyperboloid", a=1, b=1).value == 1
    assert evaluate_bound("novz", m=5, chi=-10).value == 4
    assert evaluate_bound("zvonilov", m=7).value == 6
    assert evaluate_bound("ellipsoid", m=3).value == 5
    assert evaluate_bound("harnack", m=4).value == 4
    assert evaluate_bound("harnack-no", chi=-10).value == 13


@pytest.mark.parametrize(
    "kind, params",
    [("s", {"m": 4}), ("vz", {"m": 1}), ("vz", {"m": 8}), ("hyperboloid", {"a": 2, "b": 1}),
     ("ellipsoid", {"m": 0}), ("novz", {"m": 5, "chi": -3}), ("harnack", {"m": 0}),
     ("harnack-no", {"chi": 2}), ("s", {})],
)
def test_bound_domains(kind, params):
    with pytest.raises(OutOfDomain):
        evaluate_bound(kind, **params)


def test_bounds_nonnegative_where_defined():
    for m in range(1, 400, 2):
        for kind in (BoundKind.S, BoundKind.ZVONILOV, BoundKind.ELLIPSOID, BoundKind.HARNACK):
            assert evaluate_bound(kind, m=m).value >= 0
        if m >= 3:
            assert evaluate_bound(BoundKind.VZ, m=m).value >= 0
        assert evaluate_bound(BoundKind.S, m=m).value.denominator == 1


def test_vz_against_oracle_and_closed_form():
    for m in range(3, 2000, 2):
        vz = evaluate_bound("vz", m=m).value
        assert vz == vz_oracle(m)
        assert vz_minus_s(m) == vz - evaluate_bound("s", m=m).value


def test_vz_minus_s_examples():
    assert vz_minus_s(7) == -5
    assert vz_minus_s(9) == -7
    assert vz_minus_s(552123) > 2 * 10**6
    with pytest.raises(OutOfDomain):
        vz_minus_s(10)


def test_prime_power_degrees_have_vz_below_s():
    for m in (3, 5, 7, 9, 11, 13, 25, 27, 49, 121, 125, 243, 343, 2187):
        assert evaluate_bound("vz", m=m).value == Fraction((m - 3) ** 2, 4)
        assert evaluate_bound("vz", m=m).value < evaluate_bound("s", m=m).value


def test_mp_certificates():
    c0 = mp_sequence(0)
    assert (c0.m, c0.h) == (552123, 169)
    assert c0.divisible_by_5 and c0.divisible_by_7 and c0.odd
    for p in range(4):
        c = mp_sequence(p)
        assert (c.m + 2) % 35 == 0 and c.odd
        assert c.h == h_oracle(c.m)
        assert c.vz_minus_s > 0
    with pytest.raises(OutOfDomain):
        mp_sequence(-1)


def test_format_rational():
    assert format_rational(Fraction(9, 1)) == "9"
    assert format_rational(Fraction(-5, 4)) == "-5/4"
