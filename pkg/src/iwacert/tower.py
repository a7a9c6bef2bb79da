"""Splitting conditions on the auxiliary prime ell and the fields built from it.

For an odd prime p and an imaginary quadratic F in which p splits, a prime
ell is admissible when

1. ell is inert in F,
2. ell is inert in the first layer Q_1 of the cyclotomic Z_p-extension,
3. ell splits completely in Q(mu_p, p^(1/p)).

The degree-p subfield k+ of Q(mu_ell) is then unique, and k = F k+ is an
imaginary cyclic field of degree 2p in which p splits completely. k+ is kept
symbolic: (conductor ell, degree p) is all that the downstream rules read.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional

from .arith import is_prime, kronecker, mod_pow, primes_in_class, squarefree_kernel
from .errors import ConsistencyError, DomainError, NotFoundWithinBudget, PremiseRejected
from .quadratic import QuadField, class_number, quad_field_from_disc, quad_field_from_radicand

DEFAULT_ELL_LIMIT = 10**6

# h(-47) = 5 and lambda_3 = 2 for this field; the p = 3 family is built on it.
P3_BASE_DISC = -47


def _check_odd_prime(p):
    if p == 2 or not is_prime(p):
        raise DomainError(f"p must be an odd prime, got {p}")


def inert_in_first_layer(p, ell):
    """Condition (2). Returns ``(holds, ell^(p-1) mod p^2)``.

    Q_1 sits inside Q(mu_{p^2}), and the Frobenius of ell there is ell mod p^2;
    it generates the order-p quotient iff ell^(p-1) != 1 mod p^2.
    """
    _check_odd_prime(p)
    if ell == p:
        raise DomainError("ell = p is ramified in Q_1")
    residue = mod_pow(ell, p - 1, p * p)
    return residue != 1, residue


def splits_completely_kummer(p, ell):
    """Condition (3). Returns ``(holds, ell mod p, p^((ell-1)/p) mod ell)``.

    The last entry is None when ell != 1 mod p, since the exponent is then not
    an integer.
    """
    congruence = ell % p
    if congruence != 1:
        return False, congruence, None
    residue = mod_pow(p, (ell - 1) // p, ell)
    return residue == 1, congruence, residue


@dataclass(frozen=True)
class EllWitness:
    p: int
    ell: int
    disc_f: int
    cond1_symbol: int
    cond2_residue: int
    cond3_residue: Optional[int]
    cond3_congruence: int

    @classmethod
    def compute(cls, p, ell, disc_f):
        _, r2 = inert_in_first_layer(p, ell)
        _, c3, r3 = splits_completely_kummer(p, ell)
        return cls(p, ell, disc_f, kronecker(disc_f, ell), r2, r3, c3)

    def failures(self):
        """Names of the conditions this witness does not satisfy."""
        bad = []
        if self.cond1_symbol != -1:
            bad.append("condition (1)")
        if self.cond2_residue == 1:
            bad.append("condition (2)")
        if self.cond3_congruence != 1 or self.cond3_residue != 1:
            bad.append("condition (3)")
        return bad

    @property
    def passes(self):
        return not self.failures()

    def reverify(self):
        """True iff recomputation from (p, ell, disc_f) reproduces every residue."""
        return self == EllWitness.compute(self.p, self.ell, self.disc_f)


def find_ell(p, F, limit=DEFAULT_ELL_LIMIT) -> Iterator[EllWitness]:
    """Yield admissible ell <= limit in ascending order.

    Raises NotFoundWithinBudget at exhaustion if nothing was yielded.
    Chebotarev gives a positive density but no effective bound on the least ell,
    so an empty range proves nothing.
    """
    _check_odd_prime(p)
    if kronecker(F.disc, p) != 1:
        raise PremiseRejected("p splits in F", f"kronecker({F.disc}, {p}) != 1")
    if limit < p:
        raise DomainError(f"limit {limit} < p = {p}")
    examined = 0
    found = 0
    # condition (3) forces ell = 1 mod p
    for ell in primes_in_class(p, 1, limit):
        examined += 1
        w = EllWitness.compute(p, ell, F.disc)
        if w.passes:
            found += 1
            yield w
    if not found:
        raise NotFoundWithinBudget(
            f"no admissible ell <= {limit} for p = {p}, F = {F}",
            p=p, disc_f=F.disc, limit=limit, examined=examined,
        )


class FieldKind(str, Enum):
    IMAGINARY_QUADRATIC = "imaginary_quadratic"
    COMPOSITE_CM = "composite_cm"


@dataclass(frozen=True)
class FieldDescriptor:
    """Either an imaginary quadratic field, or F k+ with k+ the degree-p
    subfield of Q(mu_ell)."""

    kind: FieldKind
    disc_f: int
    ell: Optional[int] = None
    degree: int = 2

    @classmethod
    def quadratic(cls, F):
        return cls(FieldKind.IMAGINARY_QUADRATIC, F.disc)

    @classmethod
    def composite(cls, F, ell, p):
        if ell % p != 1:
            raise DomainError(f"ell = {ell} is not 1 mod {p}: no degree-{p} subfield")
        return cls(FieldKind.COMPOSITE_CM, F.disc, ell, 2 * p)

    @property
    def base(self):
        return quad_field_from_disc(self.disc_f)

    @property
    def r2(self):
        return self.degree // 2

    def __str__(self):
        if self.kind is FieldKind.IMAGINARY_QUADRATIC:
            return str(self.base)
        return f"{self.base}.k+(ell={self.ell}, [k+:Q]={self.degree // 2})"


def describe_composite_field(p, F, w):
    """Build the CM field k = F k+ after checking every premise of the construction."""
    _check_odd_prime(p)
    if (w.p, w.disc_f) != (p, F.disc):
        raise PremiseRejected("witness matches (p, F)", f"witness is for p={w.p}, disc={w.disc_f}")
    if not w.reverify():
        raise PremiseRejected("witness residues", "recomputation disagrees with stored values")
    bad = w.failures()
    if bad:
        raise PremiseRejected(bad[0], f"ell = {w.ell} fails {', '.join(bad)}")
    if kronecker(F.disc, p) != 1:
        raise PremiseRejected("p splits in F", f"kronecker({F.disc}, {p}) != 1")
    h = class_number(F)
    if h % p == 0:
        raise PremiseRejected("p does not divide h_F", f"h = {h}")
    return FieldDescriptor.composite(F, w.ell, p)


def ito_candidates(p):
    """Q(sqrt(1-p)) and Q(sqrt(4-p)), reduced to squarefree radicands."""
    out = []
    for n in (1 - p, 4 - p):
        kernel, _ = squarefree_kernel(n)
        out.append(quad_field_from_radicand(kernel))
    return out


def choose_base_field(p):
    """Pick F for the odd-p family. Returns ``(F, note)``.

    Both the splitting of p and p not dividing h_F are rechecked here even for
    the candidates that Ito's lemma covers.
    """
    _check_odd_prime(p)
    if p == 3:
        F = quad_field_from_disc(P3_BASE_DISC)
        return F, "fixed choice Q(sqrt(-47)) for p = 3"
    for n, F in zip((1 - p, 4 - p), ito_candidates(p)):
        if kronecker(F.disc, p) == 1 and class_number(F) % p != 0:
            return F, f"Q(sqrt({n})) = {F}, Ito candidate, verified"
    raise ConsistencyError(f"neither Ito candidate works for p = {p}")
