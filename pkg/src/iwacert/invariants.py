"""lambda-invariant rules and the rank bookkeeping that turns them into
nontriviality statements.

No lambda is computed from first principles. Each value comes from a
congruence rule, from Kida's formula applied to a known value, or from a
fixed table of published data (:data:`PAPER_DATA`).
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .arith import is_prime
from .errors import DomainError, UnsupportedConfiguration
from .quadratic import SplittingType, quad_field_from_disc, quad_field_from_radicand
from .tower import FieldDescriptor


class LambdaKind(str, Enum):
    EXACT = "exact"
    LOWER_BOUND = "lower_bound"


class LambdaSource(str, Enum):
    CONGRUENCE_RULE = "congruence_rule"
    KIDA_FORMULA = "kida_formula"
    PAPER_DATUM = "paper_datum"


@dataclass(frozen=True)
class LambdaDatum:
    field: Optional[FieldDescriptor]
    p: int
    kind: LambdaKind
    value: int
    source: LambdaSource
    citation: str = ""

    def __post_init__(self):
        if self.value < 0:
            raise DomainError(f"lambda must be >= 0, got {self.value}")
        if self.source is LambdaSource.PAPER_DATUM and not self.citation:
            raise DomainError("published lambda data must carry a citation")


PAPER_DATA = {
    (-47, 3): LambdaDatum(
        FieldDescriptor.quadratic(quad_field_from_disc(-47)),
        3,
        LambdaKind.EXACT,
        2,
        LambdaSource.PAPER_DATUM,
        "lambda_3(Q(sqrt(-47))) = 2, computed with Mizusawa's software",
    ),
}


def paper_lambda(disc, p):
    """Published lambda_p of the imaginary quadratic field of discriminant ``disc``."""
    try:
        return PAPER_DATA[(disc, p)]
    except KeyError:
        raise LookupError(f"no published lambda_{p} for disc {disc}") from None


def lambda2_rule(q):
    """lambda_2(Q(sqrt(-q))) for a prime q = 7 mod 8 (Ferrero, Kida).

    q = 7 mod 16 gives exactly 1, q = 15 mod 16 gives at least 3.
    """
    if q % 8 != 7 or not is_prime(q):
        raise DomainError(f"lambda_2 rule needs a prime q = 7 mod 8, got {q}")
    field = FieldDescriptor.quadratic(quad_field_from_radicand(-q))
    if q % 16 == 7:
        return LambdaDatum(field, 2, LambdaKind.EXACT, 1, LambdaSource.CONGRUENCE_RULE)
    return LambdaDatum(field, 2, LambdaKind.LOWER_BOUND, 3, LambdaSource.CONGRUENCE_RULE)


def kida_composite_lambda(p, lambda_minus_F, ell_splitting_in_F, field=None):
    """lambda_p of k = F k+ via Kida's formula, inert configuration only.

    With ell inert in F, the primes above ell do not split in k/k+ and the
    ramification terms vanish, so lambda^-(k) = p * lambda^-(F). Together with
    lambda(k+) = 0 this is the whole of lambda_p(k). mu^-(F) = 0 is assumed
    (Ferrero-Washington). Split and ramified configurations are refused.
    """
    if p == 2 or not is_prime(p):
        raise DomainError(f"p must be an odd prime, got {p}")
    if lambda_minus_F < 0:
        raise DomainError(f"lambda must be >= 0, got {lambda_minus_F}")
    if ell_splitting_in_F is not SplittingType.INERT:
        raise UnsupportedConfiguration(
            f"Kida's formula is implemented for ell inert in F only, got {ell_splitting_in_F.value}"
        )
    return LambdaDatum(field, p, LambdaKind.EXACT, p * lambda_minus_F, LambdaSource.KIDA_FORMULA)


def surjection_rank(lam, r2):
    """Rank of a free Z_p-quotient of X guaranteed by ``lambda`` and ``r2``.

    X_{k_inf} has Z_p-rank at least lambda and Gal(k~/k_inf) ~ Z_p^r2 is an
    unramified quotient of it, so the rest survives as a quotient of X_{k~}.
    A positive value certifies X_{k~} != 0; zero is inconclusive.
    """
    if lam < 0 or r2 < 0:
        raise DomainError(f"negative input: lambda={lam}, r2={r2}")
    return max(lam - r2, 0)


class Premise(str, Enum):
    TOTALLY_IMAGINARY = "totally_imaginary"
    P_SPLITS_COMPLETELY = "p_splits_completely"
    LEOPOLDT = "leopoldt"


def nontrivial_by_degree(degree, premises):
    """True when ``degree > 6``, which forces X_{k~} != 0.

    With r2 = degree/2, triviality of X would give a surjection from a
    Z_p-module of rank r2 onto one of rank r2(r2-1)/2. False means no
    conclusion, never X = 0.
    """
    missing = set(Premise) - {Premise(x) for x in premises}
    if missing:
        raise DomainError(f"missing premises: {sorted(m.value for m in missing)}")
    if degree % 2:
        raise DomainError(f"a totally imaginary field has even degree, got {degree}")
    r2 = degree // 2
    return r2 * (r2 - 1) // 2 > r2
