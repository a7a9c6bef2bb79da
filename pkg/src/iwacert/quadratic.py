"""Imaginary quadratic fields: discriminants, class numbers, splitting of primes.

The class number is computed twice, by counting reduced binary quadratic
forms and by the analytic class number formula, and :func:`class_number`
refuses to answer when the two disagree.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import gcd, isqrt

from .arith import is_prime, kronecker, squarefree_kernel
from .errors import ConsistencyError, DomainError


class SplittingType(str, Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"


@dataclass(frozen=True)
class QuadField:
    """Q(sqrt(radicand)) for a negative squarefree radicand."""

    disc: int
    radicand: int

    def __post_init__(self):
        if self.disc >= 0:
            raise DomainError(f"not imaginary: disc {self.disc}")
        expected = self.radicand if self.radicand % 4 == 1 else 4 * self.radicand
        if expected != self.disc:
            raise DomainError(
                f"disc {self.disc} does not match radicand {self.radicand}"
            )

    def __str__(self):
        return f"Q(sqrt({self.radicand}))"


def quad_field_from_radicand(m):
    if m >= 0:
        raise DomainError(f"radicand must be negative, got {m}")
    kernel, cofactor = squarefree_kernel(m)
    if cofactor != 1:
        raise DomainError(f"radicand {m} is not squarefree ({cofactor}^2 divides it)")
    disc = m if m % 4 == 1 else 4 * m
    return QuadField(disc, m)


def fundamental_violation(d):
    """Return why ``d`` is not a negative fundamental discriminant, or None."""
    if d >= 0:
        return f"{d} is not negative"
    r = d % 4
    if r == 1:
        if squarefree_kernel(d)[1] != 1:
            return f"{d} = 1 mod 4 but is not squarefree"
        return None
    if r == 0:
        m = d // 4
        if m % 4 not in (2, 3):
            return f"{d} = 4m with m = {m} = {m % 4} mod 4, need m = 2 or 3 mod 4"
        if squarefree_kernel(m)[1] != 1:
            return f"{d} = 4m with m = {m} not squarefree"
        return None
    return f"{d} = {r} mod 4, need 0 or 1 mod 4"


def is_fundamental_discriminant(d):
    return fundamental_violation(d) is None


def quad_field_from_disc(d):
    why = fundamental_violation(d)
    if why is not None:
        raise DomainError(f"not a fundamental discriminant: {why}")
    return QuadField(d, d if d % 4 == 1 else d // 4)


def fundamental_discriminants(lo, hi=-3):
    """Negative fundamental discriminants in ``[lo, hi]``, in decreasing order."""
    for d in range(hi, lo - 1, -1):
        if d % 4 in (0, 1) and is_fundamental_discriminant(d):
            yield d


def _disc(K):
    return K.disc if isinstance(K, QuadField) else K


def reduced_forms(d):
    """Yield the reduced primitive forms ``(a, b, c)`` of discriminant ``d < 0``.

    Reduced means ``|b| <= a <= c`` with ``b >= 0`` whenever ``|b| = a`` or
    ``a = c``. Loops over ``b = d (mod 2)`` with ``0 <= b <= sqrt(|d|/3)`` and
    splits ``(b^2 - d)/4`` as ``a*c``.
    """
    if d >= 0 or d % 4 not in (0, 1):
        raise DomainError(f"invalid negative discriminant {d}")
    b = d % 2
    while 3 * b * b <= -d:
        n = (b * b - d) // 4
        a = max(b, 1)
        while a * a <= n:
            if n % a == 0:
                c = n // a
                if gcd(gcd(a, b), c) == 1:
                    yield (a, b, c)
                    if 0 < b < a < c:
                        yield (a, -b, c)
            a += 1
        b += 2


def class_number_forms(K):
    return sum(1 for _ in reduced_forms(_disc(K)))


def _units(d):
    return {-3: 6, -4: 4}.get(d, 2)


def kronecker_character(d):
    """Values ``kronecker(d, a)`` for ``0 <= a < |d|``.

    Filled multiplicatively from the values at primes, which are the only
    direct symbol evaluations.
    """
    n = -d
    chi = [0] * n
    if n > 1:
        chi[1] = 1
    spf = list(range(n))
    for i in range(2, isqrt(n - 1) + 1 if n > 1 else 0):
        if spf[i] == i:
            for j in range(i * i, n, i):
                if spf[j] == j:
                    spf[j] = i
    for a in range(2, n):
        q = spf[a]
        if q == a:
            chi[a] = kronecker(d, a)
        else:
            chi[a] = chi[q] * chi[a // q]
    return chi


def class_number_dirichlet(K):
    """``h(d) = -(w / 2|d|) * sum_{a=1}^{|d|-1} (d/a) a`` for fundamental ``d < 0``."""
    d = _disc(K)
    n = -d
    s = sum(c * a for a, c in enumerate(kronecker_character(d)))
    num = _units(d) * abs(s)
    if num % (2 * n):
        raise ConsistencyError(f"character sum {s} for disc {d} gives non-integral h")
    return num // (2 * n)


@lru_cache(maxsize=4096)
def _class_number(d):
    h1 = class_number_forms(d)
    h2 = class_number_dirichlet(d)
    if h1 != h2:
        raise ConsistencyError(f"h({d}): forms give {h1}, Dirichlet sum gives {h2}")
    return h1


def class_number(K):
    """Class number, cross-checked by both methods."""
    return _class_number(_disc(K))


def splitting_in_quad(K, p):
    s = kronecker(_disc(K), p)
    if s == 1:
        return SplittingType.SPLIT
    if s == -1:
        return SplittingType.INERT
    return SplittingType.RAMIFIED


def genus_parity_check(K):
    """True iff the discriminant is a prime discriminant, hence ``h`` is odd.

    The negative prime discriminants are -4, -8 and -q for primes q = 3 mod 4.
    """
    d = _disc(K)
    if d in (-4, -8):
        return True
    return d % 4 == 1 and is_prime(-d)
