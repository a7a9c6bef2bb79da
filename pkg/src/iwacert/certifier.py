"""Claims about X_{k~} and G_{k_inf}, assembled into re-checkable certificates.

A claim carries an ordered justification chain. Each step names a rule from
the closed registry :data:`RULES` together with the premises it consumed.
Premises are either arithmetic conditions re-evaluated from the certificate's
field data (see :data:`PREMISES`) or ``fact:<name>`` references to a
conclusion drawn by an earlier step of the same chain. The last step must
conclude the claim's subject.

Witnesses are named integers, and every one of them is recomputed from
``(p, field)`` by :func:`verify` (see :data:`WITNESSES`). Published values
that are not recomputed, such as lambda_3(Q(sqrt(-47))), are looked up in
:data:`iwacert.invariants.PAPER_DATA`.
"""

from dataclasses import dataclass, field as dc_field
from enum import Enum
from typing import Dict, Iterator, List, Optional, Tuple

from .arith import is_prime, kronecker, primes_in_class
from .errors import ConsistencyError, DomainError, NotFoundWithinBudget
from .invariants import (
    LambdaKind,
    PAPER_DATA,
    Premise,
    kida_composite_lambda,
    lambda2_rule,
    nontrivial_by_degree,
    surjection_rank,
)
from .quadratic import (
    QuadField,
    SplittingType,
    class_number,
    fundamental_discriminants,
    fundamental_violation,
    genus_parity_check,
    quad_field_from_disc,
    splitting_in_quad,
)
from .tower import (
    DEFAULT_ELL_LIMIT,
    FieldDescriptor,
    FieldKind,
    choose_base_field,
    describe_composite_field,
    find_ell,
    inert_in_first_layer,
    ito_candidates,
    splits_completely_kummer,
)

FORMAT_VERSION = 1


class Subject(str, Enum):
    X_TRIVIAL = "X_trivial"
    X_PSEUDO_NULL = "X_pseudo_null"
    X_NONZERO = "X_nonzero"
    G_NONABELIAN = "G_nonabelian"
    G_NONFREE = "G_nonfree"


# --------------------------------------------------------------------------
# premises: arithmetic conditions on (p, field)
# --------------------------------------------------------------------------

def _iq(p, f):
    return f.kind is FieldKind.IMAGINARY_QUADRATIC


def _composite(p, f):
    return f.kind is FieldKind.COMPOSITE_CM


def _q(f):
    return -f.disc_f if _iq(None, f) else None


def _ell_1_mod_p(p, f):
    return _composite(p, f) and f.ell != p and f.ell % p == 1


def _power_residue(p, f):
    return _ell_1_mod_p(p, f) and splits_completely_kummer(p, f.ell)[0]


def _p_splits_completely(p, f):
    if kronecker(f.disc_f, p) != 1:
        return False
    if _iq(p, f):
        return True
    return _power_residue(p, f)


def _free_quotient_rank(p, f):
    return surjection_rank(_lambda_for_rank(p, f), f.r2)


def _lambda_for_rank(p, f):
    if _iq(p, f):
        return lambda2_rule(_q(f)).value
    return _lambda_kida(p, f)


def _lambda_kida(p, f):
    datum = PAPER_DATA[(f.disc_f, p)]
    return kida_composite_lambda(p, datum.value, splitting_in_quad(f.disc_f, f.ell)).value


def _q_class(f, modulus, residue):
    q = _q(f)
    return q is not None and is_prime(q) and q % modulus == residue


# name -> (description, predicate(p, field) -> bool)
PREMISES = {
    "k_imaginary_quadratic": ("k is imaginary quadratic", _iq),
    "k_cyclic_degree_2p": (
        "k = F k+ is imaginary cyclic of degree 2p",
        lambda p, f: _composite(p, f) and p != 2 and f.degree == 2 * p,
    ),
    "totally_imaginary": ("k is totally imaginary", lambda p, f: _iq(p, f) or _composite(p, f)),
    "abelian_over_imaginary_quadratic": (
        "k is abelian over an imaginary quadratic field",
        lambda p, f: _iq(p, f) or _composite(p, f),
    ),
    "p_is_2": ("p = 2", lambda p, f: p == 2),
    "p_gt_3": ("p > 3", lambda p, f: p > 3),
    "p_splits_in_F": ("p splits in F", lambda p, f: kronecker(f.disc_f, p) == 1),
    "p_nonsplit_in_k": (
        "p does not split in k",
        lambda p, f: _iq(p, f) and kronecker(f.disc_f, p) != 1,
    ),
    "p_not_div_h_F": ("p does not divide h_F", lambda p, f: class_number(f.disc_f) % p != 0),
    "prime_discriminant": ("disc F is a prime discriminant", lambda p, f: genus_parity_check(f.disc_f)),
    "q_7_mod_16": ("k = Q(sqrt(-q)), q prime, q = 7 mod 16", lambda p, f: _q_class(f, 16, 7)),
    "q_15_mod_16": ("k = Q(sqrt(-q)), q prime, q = 15 mod 16", lambda p, f: _q_class(f, 16, 15)),
    "q_31_mod_32": ("k = Q(sqrt(-q)), q prime, q = 31 mod 32", lambda p, f: _q_class(f, 32, 31)),
    "ell_inert_in_F": (
        "condition (1): ell is inert in F",
        lambda p, f: _composite(p, f) and kronecker(f.disc_f, f.ell) == -1,
    ),
    "ell_inert_in_Q1": (
        "condition (2): ell is inert in Q_1",
        lambda p, f: _composite(p, f) and f.ell != p and inert_in_first_layer(p, f.ell)[0],
    ),
    "ell_1_mod_p": ("condition (3): ell = 1 mod p", _ell_1_mod_p),
    "p_power_residue_mod_ell": (
        "condition (3): p is a p-th power mod ell",
        _power_residue,
    ),
    "p_splits_completely_in_k": ("p splits completely in k", _p_splits_completely),
    "F_ito_candidate": (
        "F is Q(sqrt(1-p)) or Q(sqrt(4-p))",
        lambda p, f: p >= 5 and f.disc_f in {F.disc for F in ito_candidates(p)},
    ),
    "lambda_F_published": (
        "lambda_p(F) is a published datum",
        lambda p, f: (f.disc_f, p) in PAPER_DATA,
    ),
    "degree_gt_6": ("[k:Q] > 6", lambda p, f: f.degree > 6),
    "free_quotient_rank_positive": (
        "lambda_p(k) - r2 > 0",
        lambda p, f: _free_quotient_rank(p, f) > 0,
    ),
}


# --------------------------------------------------------------------------
# rule registry
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class RuleSpec:
    id: str
    statement: str
    # alternatives: (premises, conclusion)
    signatures: Tuple[Tuple[Tuple[str, ...], str], ...]
    external: bool = False
    citation: str = ""

    def conclusion_for(self, premises):
        for sig, concl in self.signatures:
            if tuple(premises) == sig:
                return concl
        return None


def _rules(*specs):
    return {s.id: s for s in specs}


_KPLUS_CHAIN_FACTS = ("fact:p_ndiv_h_kplus", "fact:p_ndiv_h_k1plus")

RULES = _rules(
    RuleSpec(
        "Iwasawa56",
        "L/K a p-extension, totally ramified at one prime and unramified elsewhere: "
        "p does not divide h_K implies p does not divide h_L",
        (
            (("ell_1_mod_p",), "p_ndiv_h_kplus"),
            (("ell_inert_in_Q1",), "p_ndiv_h_k1plus"),
            (("ell_inert_in_F", "p_not_div_h_F"), "p_ndiv_h_k"),
        ),
    ),
    RuleSpec(
        "NonsplitTriviality",
        "p does not split in k and p does not divide h_k: X = 0",
        ((("k_imaginary_quadratic", "p_nonsplit_in_k", "p_not_div_h_F"), "X_trivial"),),
    ),
    RuleSpec(
        "SplitLambdaOne",
        "p splits in imaginary quadratic k and lambda_p(k) = 1: X = 0",
        ((("k_imaginary_quadratic", "p_splits_in_F", "fact:lambda_exact_1"), "X_trivial"),),
    ),
    RuleSpec(
        "Genus",
        "one ramified prime: h_k is odd",
        ((("k_imaginary_quadratic", "prime_discriminant"), "h_odd"),),
    ),
    RuleSpec(
        "Minardi",
        "k imaginary quadratic, p does not divide h_k: X is pseudo-null",
        ((("k_imaginary_quadratic", "p_not_div_h_F"), "X_pseudo_null"),),
    ),
    RuleSpec(
        "Fujii-Prop1",
        "CM field of degree > 2, p splits completely, p does not divide h_k, "
        "lambda = mu = nu = 0 for k+: X is pseudo-null",
        (
            (
                (
                    "k_cyclic_degree_2p",
                    "p_splits_in_F",
                    "fact:p_splits_completely_in_kplus",
                    "fact:p_ndiv_h_k",
                    "fact:kplus_invariants_vanish",
                ),
                "X_pseudo_null",
            ),
        ),
    ),
    RuleSpec(
        "Lem3",
        "ell splits completely in Q(mu_p, p^(1/p)) iff ell = 1 mod p and p is a p-th power mod ell",
        ((("ell_1_mod_p", "p_power_residue_mod_ell"), "p_splits_completely_in_kplus"),),
    ),
    RuleSpec(
        "Fukuda-chain",
        "p does not divide h of k+_0 and k+_1: p does not divide h of any k+_n, so lambda = mu = nu = 0",
        ((_KPLUS_CHAIN_FACTS, "kplus_invariants_vanish"),),
    ),
    RuleSpec(
        "Lemma-some",
        "p splits completely in k: k~/k_inf is unramified, giving a free quotient of rank lambda - r2",
        (
            (
                ("p_splits_completely_in_k", "fact:leopoldt", "fact:lambda_at_least_3", "free_quotient_rank_positive"),
                "X_nonzero",
            ),
            (
                ("p_splits_completely_in_k", "fact:leopoldt", "fact:lambda_k_kida", "free_quotient_rank_positive"),
                "X_nonzero",
            ),
        ),
    ),
    RuleSpec(
        "Rank+DegreeBound",
        "totally imaginary, p splits completely, Leopoldt: X = 0 forces [k:Q] <= 6",
        (
            (
                ("totally_imaginary", "p_splits_completely_in_k", "fact:leopoldt", "degree_gt_6"),
                "X_nonzero",
            ),
        ),
    ),
    RuleSpec(
        "FerreroKida-lambda2",
        "lambda_2(Q(sqrt(-q))) = 1 for q = 7 mod 16 and >= 3 for q = 15 mod 16",
        (
            (("k_imaginary_quadratic", "p_is_2", "q_7_mod_16"), "lambda_exact_1"),
            (("k_imaginary_quadratic", "p_is_2", "q_15_mod_16"), "lambda_at_least_3"),
        ),
    ),
    RuleSpec(
        "Kida",
        "ell inert in F: lambda_p(F k+) = p lambda_p(F)",
        (
            (
                (
                    "k_cyclic_degree_2p",
                    "ell_inert_in_F",
                    "lambda_F_published",
                    "fact:mu_vanishes",
                    "fact:kplus_invariants_vanish",
                ),
                "lambda_k_kida",
            ),
        ),
    ),
    RuleSpec(
        "F2011",
        "p splits completely in k and X is pseudo-null: G_{k_inf} is not non-abelian free",
        ((("p_splits_completely_in_k", "fact:X_pseudo_null"), "G_nonfree"),),
    ),
    RuleSpec(
        "MizusawaOzaki",
        "q = 31 mod 32: G_{k_inf} is not abelian for p = 2, k = Q(sqrt(-q))",
        ((("k_imaginary_quadratic", "p_is_2", "q_31_mod_32"), "G_nonabelian"),),
        external=True,
        citation="Mizusawa-Ozaki, theorem 2",
    ),
    RuleSpec(
        "Okano",
        "G_{k_inf} is not abelian for the imaginary cyclic fields of degree 2p",
        (
            (("k_cyclic_degree_2p", "p_splits_completely_in_k", "p_gt_3"), "G_nonabelian"),
            (("k_cyclic_degree_2p", "p_splits_completely_in_k", "lambda_F_published"), "G_nonabelian"),
        ),
        external=True,
        citation="Okano, theorem 1.2",
    ),
    RuleSpec(
        "Ito",
        "p does not divide the class numbers of Q(sqrt(1-p)) and Q(sqrt(4-p))",
        ((("F_ito_candidate",), "p_ndiv_h_F_guaranteed"),),
        external=True,
        citation="Ito, lemma 2.4",
    ),
    RuleSpec(
        "Brumer-Leopoldt",
        "Leopoldt's conjecture holds for abelian extensions of imaginary quadratic fields",
        ((("abelian_over_imaginary_quadratic",), "leopoldt"),),
        external=True,
        citation="Brumer",
    ),
    RuleSpec(
        "FerreroWashington-mu",
        "mu = 0 for abelian fields",
        ((("abelian_over_imaginary_quadratic",), "mu_vanishes"),),
        external=True,
        citation="Ferrero-Washington",
    ),
)


# --------------------------------------------------------------------------
# witnesses: named integers recomputable from (p, field)
# --------------------------------------------------------------------------

def _need_iq(f):
    if not _iq(None, f):
        raise DomainError("witness applies to imaginary quadratic fields only")
    return -f.disc_f


def _need_composite(f):
    if not _composite(None, f):
        raise DomainError("witness applies to composite fields only")
    return f.ell


def _lambda_k(p, f):
    if _iq(p, f):
        d = lambda2_rule(_need_iq(f))
        if d.kind is not LambdaKind.EXACT:
            raise DomainError("lambda_2 is only bounded below for this q")
        return d.value
    return _lambda_kida(p, f)


def _lambda_k_lower_bound(p, f):
    d = lambda2_rule(_need_iq(f))
    if d.kind is not LambdaKind.LOWER_BOUND:
        raise DomainError("lambda_2 is exact for this q")
    return d.value


WITNESSES = {
    "h_F": lambda p, f: class_number(f.disc_f),
    "split_symbol": lambda p, f: kronecker(f.disc_f, p),
    "q_mod_16": lambda p, f: _need_iq(f) % 16,
    "q_mod_32": lambda p, f: _need_iq(f) % 32,
    "cond1_symbol": lambda p, f: kronecker(f.disc_f, _need_composite(f)),
    "cond2_residue": lambda p, f: inert_in_first_layer(p, _need_composite(f))[1],
    "cond3_congruence": lambda p, f: _need_composite(f) % p,
    "cond3_residue": lambda p, f: splits_completely_kummer(p, _need_composite(f))[2],
    "lambda_F": lambda p, f: PAPER_DATA[(f.disc_f, p)].value,
    "lambda_k": _lambda_k,
    "lambda_k_lower_bound": _lambda_k_lower_bound,
    "r2": lambda p, f: f.r2,
    "degree": lambda p, f: f.degree,
    "surjection_rank": _free_quotient_rank,
}

_WITNESS_LABELS = {
    "h_F": "class number",
    "cond1_symbol": "condition (1)",
    "cond2_residue": "condition (2)",
    "cond3_congruence": "condition (3)",
    "cond3_residue": "condition (3)",
    "lambda_F": "published lambda datum",
}

PAPER_DATUM_WITNESSES = {"lambda_F"}


# --------------------------------------------------------------------------
# claims and certificates
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class RuleUse:
    rule: str
    premises: Tuple[str, ...]


@dataclass(frozen=True)
class External:
    """A result consumed by citation only. ``witness`` is set for published data."""

    source: str
    citation: str
    witness: Optional[str] = None


@dataclass
class Claim:
    subject: str
    rules: Tuple[RuleUse, ...]
    witnesses: Dict[str, int]
    external: Tuple[External, ...] = ()

    @property
    def rule_ids(self):
        return [u.rule for u in self.rules]


@dataclass
class Certificate:
    p: int
    field: FieldDescriptor
    claims: List[Claim]
    search: Dict[str, int] = dc_field(default_factory=dict)
    version: int = FORMAT_VERSION

    @property
    def subjects(self):
        return [c.subject for c in self.claims]


def expected_external(rules, witnesses, p, field):
    """Citation entries a claim must carry: external rules in chain order,
    then one entry per published datum among its witnesses."""
    out = []
    seen = set()
    for use in rules:
        rule_spec = RULES.get(use.rule)
        if rule_spec is not None and rule_spec.external and rule_spec.id not in seen:
            seen.add(rule_spec.id)
            out.append(External(rule_spec.id, rule_spec.citation))
    for name in witnesses:
        if name in PAPER_DATUM_WITNESSES:
            out.append(External("PaperDatum", PAPER_DATA[(field.disc_f, p)].citation, name))
    return tuple(out)


def make_claim(subject, chain, p, field, witness_names):
    """Build a claim, computing every named witness for ``(p, field)``."""
    rules = tuple(RuleUse(r, tuple(prem)) for r, prem in chain)
    witnesses = {name: WITNESSES[name](p, field) for name in witness_names}
    return Claim(Subject(subject).value, rules, witnesses, expected_external(rules, witnesses, p, field))


# --------------------------------------------------------------------------
# verification
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    claim: Optional[int] = None
    item: str = ""
    detail: str = ""

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "ok"
        where = "certificate" if self.claim is None else f"claim {self.claim}"
        return f"{where}: {self.item}: {self.detail}"


_OK = VerifyResult(True)


def _fail(claim, item, detail):
    return VerifyResult(False, claim, item, detail)


def _check_field(p, f):
    if not isinstance(p, int) or p < 2 or not is_prime(p):
        return "p", f"{p} is not prime"
    if not isinstance(f.kind, FieldKind):
        return "field.kind", f"unknown kind {f.kind!r}"
    why = fundamental_violation(f.disc_f)
    if why is not None:
        return "field.disc_f", why
    if f.kind is FieldKind.IMAGINARY_QUADRATIC:
        if f.ell is not None or f.degree != 2:
            return "field", "imaginary quadratic field must have degree 2 and no ell"
        return None
    if p == 2:
        return "field", "composite fields exist for odd p only"
    if f.ell is None or f.ell == p or not is_prime(f.ell):
        return "field.ell", f"{f.ell} is not a prime different from p"
    if f.ell % p != 1:
        return "field.ell", f"ell = {f.ell} is not 1 mod {p}"
    if f.degree != 2 * p:
        return "field.degree", f"{f.degree} != 2p = {2 * p}"
    return None


def _search_subject(f):
    return -f.disc_f if f.kind is FieldKind.IMAGINARY_QUADRATIC else f.ell


def verify(cert):
    """Recheck a certificate from its field data. Never raises.

    Returns a falsy :class:`VerifyResult` naming the first broken item.
    """
    try:
        return _verify(cert)
    except Exception as exc:  # a malformed certificate must not crash the checker
        return _fail(None, "certificate", f"unverifiable: {type(exc).__name__}: {exc}")


def _verify(cert):
    if cert.version != FORMAT_VERSION:
        return _fail(None, "version", f"unsupported version {cert.version}")
    p, f = cert.p, cert.field
    bad = _check_field(p, f)
    if bad:
        return _fail(None, *bad)
    limit = cert.search.get("limit")
    if limit is not None and _search_subject(f) > limit:
        return _fail(None, "search.limit", f"candidate {_search_subject(f)} exceeds limit {limit}")
    if not cert.claims:
        return _fail(None, "claims", "certificate carries no claims")

    for ci, claim in enumerate(cert.claims):
        try:
            Subject(claim.subject)
        except ValueError:
            return _fail(ci, "subject", f"unknown subject {claim.subject!r}")

        # witnesses first, so that a tampered value is named as such
        for name, value in claim.witnesses.items():
            label = _WITNESS_LABELS.get(name, name)
            fn = WITNESSES.get(name)
            if fn is None:
                return _fail(ci, f"witness {name}", "unknown witness name")
            if name in PAPER_DATUM_WITNESSES and (f.disc_f, p) not in PAPER_DATA:
                return _fail(ci, f"witness {name} ({label})", "no published datum for this field")
            try:
                expected = fn(p, f)
            except (DomainError, ConsistencyError, KeyError) as exc:
                return _fail(ci, f"witness {name} ({label})", f"cannot recompute: {exc}")
            if value != expected:
                return _fail(ci, f"witness {name} ({label})", f"recorded {value}, recomputed {expected}")

        if not claim.rules:
            return _fail(ci, "rules", "empty justification chain")
        facts = set()
        conclusion = None
        for ri, use in enumerate(claim.rules):
            rule_spec = RULES.get(use.rule)
            if rule_spec is None:
                return _fail(ci, f"rule {ri}", f"{use.rule!r} is not in the rule registry")
            conclusion = rule_spec.conclusion_for(use.premises)
            if conclusion is None:
                return _fail(ci, f"rule {ri} ({use.rule})", f"premises {list(use.premises)} match no signature")
            for prem in use.premises:
                if prem.startswith("fact:"):
                    if prem[5:] not in facts:
                        return _fail(ci, f"rule {ri} ({use.rule})", f"{prem} not established earlier in the chain")
                    continue
                desc, pred = PREMISES[prem]
                try:
                    holds = pred(p, f)
                except (DomainError, ConsistencyError, KeyError) as exc:
                    return _fail(ci, f"rule {ri} ({use.rule})", f"premise {desc}: {exc}")
                if not holds:
                    return _fail(ci, f"rule {ri} ({use.rule})", f"premise fails: {desc}")
            facts.add(conclusion)
        if conclusion != claim.subject:
            return _fail(ci, "rules", f"chain concludes {conclusion}, claim is {claim.subject}")

        want = expected_external(claim.rules, claim.witnesses, p, f)
        got = tuple(claim.external)
        if any(not e.citation for e in got):
            return _fail(ci, "external", "citation missing")
        if got != want:
            return _fail(ci, "external", f"expected citations {[(e.source, e.citation) for e in want]}")
    return _OK


# --------------------------------------------------------------------------
# classifiers for imaginary quadratic fields
# --------------------------------------------------------------------------

def _as_field(K):
    return K if isinstance(K, QuadField) else quad_field_from_disc(K)


def classify_trivial(p, K):
    """X_trivial claim for (p, K) when one of the triviality rules applies, else None.

    None is not a refutation.
    """
    K = _as_field(K)
    f = FieldDescriptor.quadratic(K)
    h = class_number(K)
    if splitting_in_quad(K, p) is not SplittingType.SPLIT and h % p:
        return make_claim(
            Subject.X_TRIVIAL,
            [("NonsplitTriviality", ("k_imaginary_quadratic", "p_nonsplit_in_k", "p_not_div_h_F"))],
            p, f, ["split_symbol", "h_F"],
        )
    q = -K.radicand
    if p == 2 and q % 16 == 7 and is_prime(q):
        if h % 2 == 0:
            raise ConsistencyError(f"h(-{q}) = {h} is even, contradicting genus theory")
        return make_claim(
            Subject.X_TRIVIAL,
            [
                ("Genus", ("k_imaginary_quadratic", "prime_discriminant")),
                ("FerreroKida-lambda2", ("k_imaginary_quadratic", "p_is_2", "q_7_mod_16")),
                ("SplitLambdaOne", ("k_imaginary_quadratic", "p_splits_in_F", "fact:lambda_exact_1")),
            ],
            p, f, ["split_symbol", "h_F", "q_mod_16", "lambda_k"],
        )
    return None


def classify_pseudonull_quadratic(p, K):
    """X_pseudo_null claim iff p does not divide h_K."""
    K = _as_field(K)
    if class_number(K) % p == 0:
        return None
    return make_claim(
        Subject.X_PSEUDO_NULL,
        [("Minardi", ("k_imaginary_quadratic", "p_not_div_h_F"))],
        p, FieldDescriptor.quadratic(K), ["h_F"],
    )


# --------------------------------------------------------------------------
# pipelines
# --------------------------------------------------------------------------

_IQ_PSEUDO_NULL_CHAIN = [
    ("Genus", ("k_imaginary_quadratic", "prime_discriminant")),
    ("Minardi", ("k_imaginary_quadratic", "p_not_div_h_F")),
]

_KPLUS_CHAIN = [
    ("Lem3", ("ell_1_mod_p", "p_power_residue_mod_ell")),
    ("Iwasawa56", ("ell_1_mod_p",)),
    ("Iwasawa56", ("ell_inert_in_Q1",)),
    ("Fukuda-chain", _KPLUS_CHAIN_FACTS),
]

_COND_WITNESSES = ["cond1_symbol", "cond2_residue", "cond3_congruence", "cond3_residue"]


def _composite_pseudo_null_chain(p):
    chain = [("Ito", ("F_ito_candidate",))] if p >= 5 else []
    chain += _KPLUS_CHAIN
    chain += [
        ("Iwasawa56", ("ell_inert_in_F", "p_not_div_h_F")),
        (
            "Fujii-Prop1",
            (
                "k_cyclic_degree_2p",
                "p_splits_in_F",
                "fact:p_splits_completely_in_kplus",
                "fact:p_ndiv_h_k",
                "fact:kplus_invariants_vanish",
            ),
        ),
    ]
    return chain


def _emit(cert):
    result = verify(cert)
    if not result:
        raise ConsistencyError(f"emitted certificate fails verification: {result}")
    return cert


def _check_p(p):
    if not is_prime(p):
        raise DomainError(f"p must be prime, got {p}")


def _iq_candidates(p, limit, residue, modulus):
    """Fields Q(sqrt(-q)) for primes q = residue (mod modulus), q <= limit."""
    for q in primes_in_class(modulus, residue, limit):
        K = quad_field_from_disc(-q)
        if kronecker(K.disc, 2) != 1:
            raise ConsistencyError(f"2 does not split in Q(sqrt(-{q}))")
        h = class_number(K)
        if h % 2 == 0:
            raise ConsistencyError(f"h(-{q}) = {h} is even, contradicting genus theory")
        yield q, FieldDescriptor.quadratic(K)


def _composite_candidates(p, limit):
    F, _note = choose_base_field(p)
    for w in find_ell(p, F, limit):
        yield w, describe_composite_field(p, F, w)


def _nonzero_pseudonull_certs(p, limit):
    search = {"limit": limit}
    if p == 2:
        for q, f in _iq_candidates(p, limit, 15, 16):
            lam = lambda2_rule(q)
            if surjection_rank(lam.value, f.r2) < 1:
                raise ConsistencyError(f"no free quotient for q = {q}")
            yield _emit(Certificate(p, f, [
                make_claim(Subject.X_PSEUDO_NULL, _IQ_PSEUDO_NULL_CHAIN, p, f, ["split_symbol", "h_F"]),
                make_claim(
                    Subject.X_NONZERO,
                    [
                        ("FerreroKida-lambda2", ("k_imaginary_quadratic", "p_is_2", "q_15_mod_16")),
                        ("Brumer-Leopoldt", ("abelian_over_imaginary_quadratic",)),
                        (
                            "Lemma-some",
                            ("p_splits_completely_in_k", "fact:leopoldt", "fact:lambda_at_least_3",
                             "free_quotient_rank_positive"),
                        ),
                    ],
                    p, f, ["split_symbol", "q_mod_16", "lambda_k_lower_bound", "r2", "surjection_rank"],
                ),
            ], dict(search)))
        return

    for w, f in _composite_candidates(p, limit):
        pseudo = make_claim(
            Subject.X_PSEUDO_NULL, _composite_pseudo_null_chain(p), p, f,
            ["h_F", "split_symbol"] + _COND_WITNESSES,
        )
        if p == 3:
            nonzero = make_claim(
                Subject.X_NONZERO,
                [
                    ("Brumer-Leopoldt", ("abelian_over_imaginary_quadratic",)),
                    ("FerreroWashington-mu", ("abelian_over_imaginary_quadratic",)),
                    *_KPLUS_CHAIN,
                    (
                        "Kida",
                        ("k_cyclic_degree_2p", "ell_inert_in_F", "lambda_F_published",
                         "fact:mu_vanishes", "fact:kplus_invariants_vanish"),
                    ),
                    (
                        "Lemma-some",
                        ("p_splits_completely_in_k", "fact:leopoldt", "fact:lambda_k_kida",
                         "free_quotient_rank_positive"),
                    ),
                ],
                p, f, ["cond1_symbol", "lambda_F", "lambda_k", "r2", "surjection_rank"],
            )
        else:
            premises = (Premise.TOTALLY_IMAGINARY, Premise.P_SPLITS_COMPLETELY, Premise.LEOPOLDT)
            if not nontrivial_by_degree(f.degree, premises):
                raise ConsistencyError(f"degree bound inconclusive at degree {f.degree}")
            nonzero = make_claim(
                Subject.X_NONZERO,
                [
                    ("Brumer-Leopoldt", ("abelian_over_imaginary_quadratic",)),
                    (
                        "Rank+DegreeBound",
                        ("totally_imaginary", "p_splits_completely_in_k", "fact:leopoldt", "degree_gt_6"),
                    ),
                ],
                p, f, ["split_symbol", "cond3_residue", "degree", "r2"],
            )
        yield _emit(Certificate(p, f, [pseudo, nonzero], dict(search)))


def _nonfree_certs(p, limit):
    search = {"limit": limit}
    if p == 2:
        for q, f in _iq_candidates(p, limit, 31, 32):
            yield _emit(Certificate(p, f, [
                make_claim(
                    Subject.G_NONFREE,
                    _IQ_PSEUDO_NULL_CHAIN + [("F2011", ("p_splits_completely_in_k", "fact:X_pseudo_null"))],
                    p, f, ["split_symbol", "h_F"],
                ),
                make_claim(
                    Subject.G_NONABELIAN,
                    [("MizusawaOzaki", ("k_imaginary_quadratic", "p_is_2", "q_31_mod_32"))],
                    p, f, ["q_mod_32"],
                ),
            ], dict(search)))
        return

    for w, f in _composite_candidates(p, limit):
        nonfree = make_claim(
            Subject.G_NONFREE,
            _composite_pseudo_null_chain(p) + [("F2011", ("p_splits_completely_in_k", "fact:X_pseudo_null"))],
            p, f, ["h_F", "split_symbol"] + _COND_WITNESSES,
        )
        if p == 3:
            # lambda_3(F) = 2 is attached as a premise of Okano's theorem here
            okano = ("k_cyclic_degree_2p", "p_splits_completely_in_k", "lambda_F_published")
            names = ["degree", "lambda_F"]
        else:
            okano = ("k_cyclic_degree_2p", "p_splits_completely_in_k", "p_gt_3")
            names = ["degree"]
        nonab = make_claim(Subject.G_NONABELIAN, [("Okano", okano)], p, f, names)
        yield _emit(Certificate(p, f, [nonfree, nonab], dict(search)))


def _quadratic_sweep(p, limit, classify):
    search = {"limit": limit}
    for d in fundamental_discriminants(-limit):
        claim = classify(p, d)
        if claim is not None:
            f = FieldDescriptor.quadratic(quad_field_from_disc(d))
            yield _emit(Certificate(p, f, [claim], dict(search)))


def _guard_empty(stream, what, p, limit):
    n = 0
    for cert in stream:
        n += 1
        yield cert
    if not n:
        raise NotFoundWithinBudget(f"no {what} certificate for p = {p} within limit {limit}", p=p, limit=limit)


def certify_nonzero_pseudonull(p, limit=None) -> Iterator[Certificate]:
    """Fields with X_{k~} != 0 and X_{k~} pseudo-null, ascending in the search parameter.

    p = 2: k = Q(sqrt(-q)) for primes q = 15 mod 16 up to ``limit``.
    Odd p: k = F k+(ell) for admissible ell up to ``limit``.
    Raises NotFoundWithinBudget once exhausted without output.
    """
    _check_p(p)
    if limit is None:
        limit = DEFAULT_ELL_LIMIT
    yield from _guard_empty(_nonzero_pseudonull_certs(p, limit), "nonzero-pseudonull", p, limit)


def certify_nonfree(p, limit=None) -> Iterator[Certificate]:
    """Fields where G_{k_inf} is neither abelian nor free pro-p."""
    _check_p(p)
    if limit is None:
        limit = DEFAULT_ELL_LIMIT
    yield from _guard_empty(_nonfree_certs(p, limit), "nonfree", p, limit)


def certify_trivial(p, limit) -> Iterator[Certificate]:
    """Imaginary quadratic fields with |disc| <= limit and X_{k~} = 0."""
    _check_p(p)
    yield from _guard_empty(_quadratic_sweep(p, limit, classify_trivial), "trivial", p, limit)


def certify_pseudonull(p, limit) -> Iterator[Certificate]:
    """Imaginary quadratic fields with |disc| <= limit and p not dividing h."""
    _check_p(p)
    yield from _guard_empty(
        _quadratic_sweep(p, limit, classify_pseudonull_quadratic), "pseudonull", p, limit
    )
