import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iwacert.arith import (
    MR_DETERMINISTIC_BOUND,
    is_prime,
    iter_primes,
    kronecker,
    mod_pow,
    primes_in_class,
    squarefree_kernel,
)
from iwacert.errors import DomainError

from oracles import legendre_by_squares, naive_pow, sieve, trial_division_is_prime


@pytest.mark.parametrize(
    "base, exp, mod, expected",
    [(3, 22, 67, 1), (3, 10, 31, 25), (7, 0, 2, 1), (-5, 0, 13, 1), (123456789, 0, 1000, 1)],
)
def test_mod_pow_examples(base, exp, mod, expected):
    assert mod_pow(base, exp, mod) == expected


def test_mod_pow_frozen_values_match_naive_loop():
    assert naive_pow(3, 22, 67) == 1
    assert naive_pow(3, 10, 31) == 25


def test_mod_pow_domain():
    with pytest.raises(DomainError):
        mod_pow(3, 2, 1)
    with pytest.raises(DomainError):
        mod_pow(3, -1, 7)


def test_mod_pow_agrees_with_naive_loop():
    rng = random.Random(20261016)
    for _ in range(3000):
        a, m, e = rng.randrange(1000), rng.randrange(2, 1000), rng.randrange(100)
        assert mod_pow(a, e, m) == naive_pow(a, e, m)


@given(st.integers(0, 999), st.integers(0, 99), st.integers(2, 999))
def test_mod_pow_property(a, e, m):
    assert mod_pow(a, e, m) == naive_pow(a, e, m)


@pytest.mark.parametrize("n, expected", [(47, True), (223, True), (1, False), (0, False), (2, True), (91, False)])
def test_is_prime_examples(n, expected):
    assert is_prime(n) is expected


def test_is_prime_agrees_with_sieve_to_one_million():
    flags = sieve(10**6)
    mismatches = [n for n in range(10**6 + 1) if is_prime(n) != bool(flags[n])]
    assert mismatches == []


def test_is_prime_agrees_with_trial_division_small():
    assert all(is_prime(n) == trial_division_is_prime(n) for n in range(20000))


@pytest.mark.parametrize(
    "n, expected",
    [
        (2**64 - 59, True),  # largest prime below 2**64
        (2**64 - 1, False),
        (3215031751, False),  # strong pseudoprime to bases 2, 3, 5, 7
        (3825123056546413051, False),  # strong pseudoprime to bases 2..23
        (318665857834031151167461, False),  # strong pseudoprime to bases 2..37
        (18446744073709551557, True),
        (1000000007, True),
        (561, False),
    ],
)
def test_is_prime_hard_cases(n, expected):
    if n >= MR_DETERMINISTIC_BOUND:
        with pytest.raises(DomainError):
            is_prime(n)
    else:
        assert is_prime(n) is expected


@pytest.mark.parametrize(
    "a, n, expected",
    [(-47, 67, -1), (-47, 61, 1), (5, 1, 1), (-3, 1, 1), (0, 1, 1), (-4, 5, 1), (-4, 3, -1), (-7, 2, 1), (-3, 2, -1), (-4, 2, 0)],
)
def test_kronecker_examples(a, n, expected):
    assert kronecker(a, n) == expected


def test_kronecker_frozen_values_match_square_enumeration():
    assert legendre_by_squares(-47, 67) == -1
    assert legendre_by_squares(-47, 61) == 1


def test_kronecker_zero_zero():
    with pytest.raises(DomainError):
        kronecker(0, 0)


def test_kronecker_conventions():
    assert kronecker(1, 0) == kronecker(-1, 0) == 1
    assert kronecker(2, 0) == 0
    assert kronecker(-5, -1) == -1 and kronecker(5, -1) == 1
    # (a/2) by a mod 8
    for a in range(-40, 41):
        expected = 0 if a % 2 == 0 else (1 if a % 8 in (1, 7) else -1)
        assert kronecker(a, 2) == expected


def test_kronecker_is_legendre_for_odd_primes():
    for p in range(3, 500):
        if not trial_division_is_prime(p):
            continue
        for a in range(p):
            assert kronecker(a, p) == legendre_by_squares(a, p), (a, p)


def test_kronecker_multiplicative_sample():
    rng = random.Random(7)
    for _ in range(10**4):
        a, b = rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6)
        n, m = rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6)
        if n:
            assert kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n)
        if a and n and m:
            assert kronecker(a, n * m) == kronecker(a, n) * kronecker(a, m)


@given(st.integers(-10**9, 10**9), st.integers(-10**9, 10**9), st.integers(1, 10**9))
def test_kronecker_multiplicative_in_top(a, b, n):
    assert kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n)


@pytest.mark.parametrize("n, expected", [(-4, (-1, 2)), (-47, (-47, 1)), (1 - 11, (-10, 1)), (72, (2, 6)), (1, (1, 1))])
def test_squarefree_kernel_examples(n, expected):
    assert squarefree_kernel(n) == expected


def test_squarefree_kernel_zero():
    with pytest.raises(DomainError):
        squarefree_kernel(0)


def test_squarefree_kernel_reconstructs_to_one_million():
    for n in range(1, 10**6 + 1):
        k, c = squarefree_kernel(n)
        assert k * c * c == n
        k2, c2 = squarefree_kernel(-n)
        assert (k2, c2) == (-k, c)


@settings(max_examples=300)
@given(st.integers(-10**7, 10**7).filter(bool))
def test_squarefree_kernel_is_squarefree(n):
    from oracles import is_squarefree

    k, c = squarefree_kernel(n)
    assert k * c * c == n and c > 0
    assert (k > 0) == (n > 0)
    assert is_squarefree(k)


def test_primes_in_class_examples():
    assert list(primes_in_class(16, 7, 40)) == [7, 23]
    assert list(primes_in_class(4, 3, 3)) == [3]


def test_primes_in_class_15_mod_16_below_250():
    # sieve + filter oracle; note 31 and 239 belong to the class
    flags = sieve(250)
    oracle = [q for q in range(251) if flags[q] and q % 16 == 15]
    assert oracle == [31, 47, 79, 127, 191, 223, 239]
    assert list(primes_in_class(16, 15, 250)) == oracle


def test_primes_in_class_errors():
    with pytest.raises(DomainError):
        list(primes_in_class(16, 8, 100))
    with pytest.raises(DomainError):
        list(primes_in_class(16, 15, 1))


def test_segmented_sieve_crosses_segments():
    limit = 3 * (1 << 18) + 17
    flags = sieve(limit)
    assert list(iter_primes(limit)) == [n for n in range(limit + 1) if flags[n]]


def test_iter_primes_with_start():
    assert list(iter_primes(60, start=40)) == [41, 43, 47, 53, 59]
    assert list(iter_primes(1)) == []
