import itertools
from dataclasses import replace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iwacert.arith import is_prime, kronecker
from iwacert.errors import ConsistencyError, DomainError, NotFoundWithinBudget, PremiseRejected
from iwacert.quadratic import class_number, quad_field_from_disc
from iwacert.tower import (
    EllWitness,
    FieldDescriptor,
    FieldKind,
    choose_base_field,
    describe_composite_field,
    find_ell,
    inert_in_first_layer,
    splits_completely_kummer,
)

from oracles import admissible_ell_brute, kth_powers, naive_pow, trial_division_is_prime

F47 = quad_field_from_disc(-47)
F4 = quad_field_from_disc(-4)
ODD_PRIMES = [p for p in range(3, 60) if is_prime(p)]


@pytest.mark.parametrize(
    "p, ell, holds, residue",
    [(3, 67, True, 7), (3, 17, False, 1), (5, 31, True, 21)],
)
def test_inert_in_first_layer(p, ell, holds, residue):
    assert naive_pow(ell, p - 1, p * p) == residue
    assert inert_in_first_layer(p, ell) == (holds, residue)


def test_inert_in_first_layer_rejects_ramified():
    with pytest.raises(DomainError):
        inert_in_first_layer(3, 3)


@pytest.mark.parametrize(
    "p, ell, holds, residue",
    [(3, 61, True, 1), (3, 31, False, 25), (3, 7, False, 2)],
)
def test_splits_completely_kummer(p, ell, holds, residue):
    assert naive_pow(p, (ell - 1) // p, ell) == residue
    ok, congruence, r = splits_completely_kummer(p, ell)
    assert ok is holds and r == residue and congruence == 1


def test_kummer_not_1_mod_p():
    assert splits_completely_kummer(3, 5) == (False, 2, None)


def test_kummer_implies_1_mod_p():
    for p in ODD_PRIMES:
        for ell in range(3, 3000):
            if is_prime(ell) and ell != p and splits_completely_kummer(p, ell)[0]:
                assert ell % p == 1


def test_cube_enumeration_agrees_with_power_residue():
    for ell in range(5, 500):
        if not trial_division_is_prime(ell):
            continue
        brute = ell % 3 == 1 and 3 % ell in kth_powers(3, ell)
        assert splits_completely_kummer(3, ell)[0] == brute, ell


def test_find_ell_p3():
    ws = list(find_ell(3, F47, 100))
    assert [w.ell for w in ws] == admissible_ell_brute(3, -47, 100) == [67]
    w = ws[0]
    assert (w.cond1_symbol, w.cond2_residue, w.cond3_residue, w.cond3_congruence) == (-1, 7, 1, 1)


def test_find_ell_p5():
    w = next(find_ell(5, F4, 40))
    assert w.ell == 31 == admissible_ell_brute(5, -4, 40)[0]
    assert (w.cond1_symbol, w.cond2_residue, w.cond3_residue, w.cond3_congruence) == (-1, 21, 1, 1)


def test_find_ell_agrees_with_brute_force_longer_range():
    assert [w.ell for w in find_ell(3, F47, 1000)] == admissible_ell_brute(3, -47, 1000)
    assert [w.ell for w in find_ell(5, F4, 1500)] == admissible_ell_brute(5, -4, 1500)


def test_find_ell_not_found():
    with pytest.raises(NotFoundWithinBudget) as exc:
        list(find_ell(3, F47, 10))
    assert exc.value.state["limit"] == 10


def test_find_ell_requires_split():
    with pytest.raises(PremiseRejected):
        next(find_ell(3, quad_field_from_disc(-4), 100))  # 3 is inert in Q(i)
    with pytest.raises(DomainError):
        next(find_ell(2, F47, 100))


def test_find_ell_prefix_property():
    full = [w.ell for w in find_ell(3, F47, 3000)]
    for limit in (70, 200, 500, 1000, 2000):
        assert [w.ell for w in find_ell(3, F47, limit)] == [e for e in full if e <= limit]


def test_emitted_witnesses_reverify():
    for p in (3, 5, 7, 11, 13):
        F, _ = choose_base_field(p)
        for w in itertools.islice(find_ell(p, F), 5):
            assert w.reverify() and w.passes
            again = EllWitness.compute(w.p, w.ell, w.disc_f)
            assert again == w


_BRUTE = {p: set(admissible_ell_brute(p, choose_base_field(p)[0].disc, 600)) for p in ODD_PRIMES[:4]}


@settings(max_examples=200)
@given(st.sampled_from(ODD_PRIMES[:4]), st.integers(3, 600))
def test_witness_predicates_match_brute_force(p, ell):
    if not is_prime(ell) or ell == p:
        return
    F, _ = choose_base_field(p)
    assert EllWitness.compute(p, ell, F.disc).passes == (ell in _BRUTE[p])


def test_describe_composite_field():
    w = next(find_ell(3, F47, 100))
    f = describe_composite_field(3, F47, w)
    assert f == FieldDescriptor(FieldKind.COMPOSITE_CM, -47, 67, 6)
    w5 = next(find_ell(5, F4, 40))
    assert describe_composite_field(5, F4, w5) == FieldDescriptor(FieldKind.COMPOSITE_CM, -4, 31, 10)


def test_describe_rejects_condition_1():
    w = EllWitness.compute(3, 61, -47)
    with pytest.raises(PremiseRejected) as exc:
        describe_composite_field(3, F47, w)
    assert exc.value.premise == "condition (1)"


def test_describe_rejects_tampered_witness():
    w = next(find_ell(3, F47, 100))
    with pytest.raises(PremiseRejected, match="residues"):
        describe_composite_field(3, F47, replace(w, cond2_residue=4))


def test_describe_rejects_p_dividing_h(monkeypatch):
    import iwacert.tower as tower

    w = next(find_ell(3, F47, 100))
    monkeypatch.setattr(tower, "class_number", lambda F: 6)
    with pytest.raises(PremiseRejected) as exc:
        tower.describe_composite_field(3, F47, w)
    assert exc.value.premise == "p does not divide h_F"


def test_composite_needs_ell_1_mod_p():
    with pytest.raises(DomainError):
        FieldDescriptor.composite(F47, 67, 5)


@pytest.mark.parametrize("p, disc", [(3, -47), (5, -4), (7, -24)])
def test_choose_base_field(p, disc):
    F, note = choose_base_field(p)
    assert F.disc == disc and note


def test_choose_base_field_p7_checks():
    F, _ = choose_base_field(7)
    assert kronecker(-24, 7) == 1
    assert class_number(F) == 2


def test_choose_base_field_all_small_primes():
    for p in ODD_PRIMES:
        F, _ = choose_base_field(p)
        assert kronecker(F.disc, p) == 1 and class_number(F) % p


def test_choose_base_field_failure(monkeypatch):
    import iwacert.tower as tower

    monkeypatch.setattr(tower, "class_number", lambda F: 5 * 7)
    with pytest.raises(ConsistencyError):
        tower.choose_base_field(7)
