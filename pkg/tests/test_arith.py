import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from primegraphs.arithmetic import (
    MAX_SUPPORTED,
    Factorization,
    PrimeSet,
    as_prime_power,
    factor,
    is_mersenne_prime_exponent,
    is_prime,
    prime_set,
)


def test_factor_examples():
    assert dict(factor(65).factors) == {5: 1, 13: 1}
    assert dict(factor(63).factors) == {3: 2, 7: 1}
    assert factor(1).factors == ()


def test_factor_rejects_zero():
    with pytest.raises(ValueError):
        factor(0)
    with pytest.raises(OverflowError):
        factor(2**64)


def test_factor_exhaustive_reconstruction():
    for n in range(1, 10**6 + 1):
        f = factor(n)
        prod = 1
        prev = 1
        for p, e in f.factors:
            assert p > prev and e >= 1
            prev = p
            prod *= p**e
        assert prod == n


def test_factor_large_semiprimes():
    # beyond the trial-division bound, so the rho stage is exercised
    p, q = 1000003, 1000033
    assert factor(p * q).factors == ((p, 1), (q, 1))
    assert factor(2**61 - 1).factors == ((2**61 - 1, 1),)


def test_factorization_validates():
    with pytest.raises(ValueError):
        Factorization(12, ((3, 1), (2, 2)))  # unsorted
    with pytest.raises(ValueError):
        Factorization(12, ((2, 2),))  # does not reconstruct


def test_prime_set_examples():
    assert tuple(prime_set(255)) == (3, 5, 17)
    assert tuple(prime_set(124)) == (2, 31)
    assert tuple(prime_set(1)) == ()


def test_prime_set_multiplicative():
    rng = random.Random(7)
    for _ in range(10**4):
        a = rng.randint(1, 10**6)
        b = rng.randint(1, 10**6)
        assert (prime_set(a) | prime_set(b)).primes == prime_set(a * b).primes


def test_prime_set_algebra():
    s = prime_set(30)
    t = prime_set(10)
    assert tuple(s & t) == (2, 5)
    assert tuple(s - t) == (3,)
    assert t <= s and not s <= t
    assert 5 in s and 7 not in s
    assert len(s) == 3 and s.max() == 5
    with pytest.raises(ValueError):
        PrimeSet([4])


def test_as_prime_power_examples():
    assert as_prime_power(125) == (5, 3)
    assert as_prime_power(64) == (2, 6)
    assert as_prime_power(12) is None
    with pytest.raises(ValueError):
        as_prime_power(1)


def test_as_prime_power_roundtrip():
    primes = [p for p in range(2, 100) if is_prime(p)]
    for p in primes:
        for f in range(1, 10):
            if p**f > MAX_SUPPORTED:
                break
            assert as_prime_power(p**f) == (p, f)


def test_mersenne_exponents():
    assert is_mersenne_prime_exponent(5)
    assert is_mersenne_prime_exponent(7)
    assert not is_mersenne_prime_exponent(11)  # 2047 = 23 * 89
    assert not is_mersenne_prime_exponent(4)
    with pytest.raises(ValueError):
        is_mersenne_prime_exponent(1)


@given(st.integers(min_value=1, max_value=MAX_SUPPORTED))
@settings(max_examples=200, deadline=None)
def test_factor_reconstructs_anywhere_in_range(n):
    f = factor(n)
    prod = 1
    for p, e in f.factors:
        assert is_prime(p)
        prod *= p**e
    assert prod == n


@given(st.integers(min_value=2, max_value=10**9))
@settings(max_examples=200, deadline=None)
def test_prime_power_consistent_with_factor(n):
    pf = as_prime_power(n)
    if pf is None:
        assert len(factor(n).factors) > 1
    else:
        p, f = pf
        assert p**f == n and is_prime(p)
