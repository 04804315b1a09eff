from math import gcd, prod

import pytest
from hypothesis import given, strategies as st

from ffinterleave.numtheory import (
    Factorization,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    mod_inverse,
    mult_order,
    neg_order,
)
from oracles import naive_order


def test_factorize_examples():
    assert factorize(12).factors == ((2, 2), (3, 1))
    assert factorize(120).factors == ((2, 3), (3, 1), (5, 1))
    assert factorize(1).factors == ()


def test_factorization_rejects_bad_product():
    with pytest.raises(ValueError):
        Factorization(12, ((2, 1), (3, 1)))


def test_factorize_multiplies_back_small_range():
    for n in range(1, 20001):
        f = factorize(n)
        assert prod(p**e for p, e in f.factors) == n
        primes = [p for p, _ in f.factors]
        assert primes == sorted(set(primes))
        assert all(is_prime(p) for p in primes)


@given(st.integers(1, 10**6))
def test_factorize_multiplies_back(n):
    f = factorize(n)
    assert prod(p**e for p, e in f.factors) == n
    assert all(e >= 1 for _, e in f.factors)


def test_mult_order_examples():
    assert mult_order(11, 12) == 2
    assert mult_order(5, 12) == 2
    assert mult_order(1, 7) == 1
    assert mult_order(3, 1) == 1


def test_mult_order_rejects_non_coprime():
    with pytest.raises(ValueError):
        mult_order(4, 12)


def test_mult_order_exhaustive_small():
    for s in range(1, 151):
        for n in range(1, s + 1):
            if gcd(n, s) == 1:
                j = mult_order(n, s)
                assert pow(n, j, s) == 1 % s
                assert all(pow(n, i, s) != 1 % s for i in range(1, j))


@given(st.integers(2, 1000), st.integers(1, 10**6))
def test_mult_order_minimal(s, n):
    if gcd(n, s) != 1:
        return
    assert mult_order(n, s) == naive_order(n, s)


def test_neg_order_examples():
    assert neg_order(2, 5) == 2
    assert neg_order(1, 3) is None
    assert neg_order(3, 8) is None


@given(st.integers(3, 1000), st.integers(1, 10**4))
def test_neg_order_relates_to_order(s, n):
    if gcd(n, s) != 1:
        return
    j = neg_order(n, s)
    if j is None:
        assert all(pow(n, i, s) != s - 1 for i in range(1, s + 1))
    else:
        assert pow(n, j, s) == s - 1
        assert mult_order(n, s) == 2 * j


def test_mod_inverse_examples():
    assert mod_inverse(11, 12) == 11
    assert mod_inverse(19, 120) == 19
    assert mod_inverse(1, 9) == 1
    with pytest.raises(ValueError):
        mod_inverse(2, 4)


def test_euler_phi_examples():
    assert euler_phi(12) == 4
    assert euler_phi(1) == 1
    assert euler_phi(11) == 10


def test_phi_divisor_sum():
    for n in range(1, 10001):
        assert sum(euler_phi(d) for d in divisors(n)) == n
