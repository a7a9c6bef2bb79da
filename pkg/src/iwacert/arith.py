"""Exact integer primitives: modular powers, primality, Kronecker symbols,
squarefree kernels and prime streams in residue classes.

Everything here works on Python ints; numpy is only used as a bitmap for the
segmented sieve.
"""

from functools import lru_cache
from math import gcd, isqrt

import numpy as np

from .errors import DomainError

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Miller-Rabin with the first twelve primes as bases has no strong pseudoprime
# below this bound (Sorenson & Webster 2015), which covers all of 2**64.
MR_DETERMINISTIC_BOUND = 318665857834031151167461

_SEGMENT = 1 << 18


def mod_pow(base, exponent, modulus):
    """``base**exponent mod modulus`` as a value in ``[0, modulus)``."""
    if modulus < 2:
        raise DomainError(f"modulus must be >= 2, got {modulus}")
    if exponent < 0:
        raise DomainError(f"exponent must be >= 0, got {exponent}")
    return pow(base, exponent, modulus)


def is_prime(n):
    """Deterministic primality test.

    Trial division by the base primes, then strong-probable-prime tests to the
    twelve bases 2..37, which is a proof of primality below
    ``MR_DETERMINISTIC_BOUND``. Larger inputs are refused rather than answered
    probabilistically.
    """
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    if n < 41 * 41:
        return True
    if n >= MR_DETERMINISTIC_BOUND:
        raise DomainError(f"{n} exceeds the deterministic primality range")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def kronecker(a, n):
    """Kronecker symbol ``(a/n)``.

    Extends the Jacobi symbol to every ``n``: ``(a/2)`` is 0 for even ``a``,
    1 for ``a = +-1 mod 8`` and -1 for ``a = +-3 mod 8``; ``(a/-1)`` is the
    sign of ``a``; ``(a/0)`` is 1 iff ``a = +-1``.
    """
    if a == 0 and n == 0:
        raise DomainError("kronecker(0, 0) is undefined")
    if n == 0:
        return 1 if abs(a) == 1 else 0
    if a % 2 == 0 and n % 2 == 0:
        return 0

    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result

    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v % 2 == 1 and a % 8 in (3, 5):
        result = -result

    # n is now odd and positive: Jacobi symbol by reciprocity.
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def squarefree_kernel(n):
    """Split ``n`` as ``kernel * cofactor**2`` with ``kernel`` squarefree.

    The kernel carries the sign of ``n``; the cofactor is positive.
    """
    if n == 0:
        raise DomainError("squarefree_kernel(0) is undefined")
    sign = -1 if n < 0 else 1
    m = abs(n)
    kernel, cofactor = 1, 1
    for d in _trial_divisors(m):
        if d * d > m:
            break
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            cofactor *= d ** (e // 2)
            if e % 2:
                kernel *= d
    kernel *= m
    return sign * kernel, cofactor


@lru_cache(maxsize=None)
def _trial_primes():
    return tuple(int(q) for q in _base_primes(10**4))


def _trial_divisors(m):
    """Primes up to 10**4, then odd numbers (enough for desk-scale inputs)."""
    primes = _trial_primes()
    yield from primes
    d = primes[-1] + 2
    while True:
        yield d
        d += 2


def _base_primes(limit):
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = False
    return np.flatnonzero(sieve)


def iter_primes(limit, start=2):
    """Yield the primes in ``[start, limit]`` in ascending order (segmented sieve)."""
    if limit < 2:
        return
    start = max(start, 2)
    base = _base_primes(isqrt(limit))
    lo = start
    while lo <= limit:
        hi = min(lo + _SEGMENT, limit + 1)
        seg = np.ones(hi - lo, dtype=bool)
        for q in base:
            q = int(q)
            if q * q >= hi:
                break
            first = max(q * q, -(-lo // q) * q)
            seg[first - lo :: q] = False
        if lo < 2:
            seg[: 2 - lo] = False
        for off in np.flatnonzero(seg):
            yield lo + int(off)
        lo = hi


def primes_in_class(modulus, residue, limit):
    """Yield the primes ``p <= limit`` with ``p = residue (mod modulus)``, ascending."""
    if modulus < 1:
        raise DomainError(f"modulus must be positive, got {modulus}")
    if gcd(residue, modulus) != 1:
        raise DomainError(
            f"gcd({residue}, {modulus}) != 1: the class holds at most one prime"
        )
    if limit < 2:
        raise DomainError(f"limit must be >= 2, got {limit}")
    r = residue % modulus
    for q in iter_primes(limit):
        if q % modulus == r:
            yield q
