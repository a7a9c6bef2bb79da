import pytest
from hypothesis import given
from hypothesis import strategies as st

from iwacert.arith import is_prime
from iwacert.errors import ConsistencyError, DomainError
from iwacert.quadratic import (
    QuadField,
    SplittingType,
    class_number,
    class_number_dirichlet,
    class_number_forms,
    fundamental_discriminants,
    genus_parity_check,
    is_fundamental_discriminant,
    quad_field_from_disc,
    quad_field_from_radicand,
    reduced_forms,
    splitting_in_quad,
)

from oracles import brute_reduced_forms, is_squarefree, legendre_by_squares


@pytest.mark.parametrize("m, disc", [(-47, -47), (-1, -4), (-10, -40), (-2, -8), (-3, -3), (-6, -24)])
def test_from_radicand(m, disc):
    K = quad_field_from_radicand(m)
    assert (K.disc, K.radicand) == (disc, m)


@pytest.mark.parametrize("m", [0, 5, -4, -12, -18])
def test_from_radicand_rejects(m):
    with pytest.raises(DomainError):
        quad_field_from_radicand(m)


def test_from_disc_names_violation():
    with pytest.raises(DomainError, match="2 mod 4"):
        quad_field_from_disc(-10)
    with pytest.raises(DomainError, match="squarefree"):
        quad_field_from_disc(-27)
    with pytest.raises(DomainError, match="m = 1 mod 4|= 1 mod 4"):
        quad_field_from_disc(-12)


def test_quadfield_invariant():
    with pytest.raises(DomainError):
        QuadField(-4, -4)


def test_fundamental_discriminants_match_definition():
    ours = list(fundamental_discriminants(-2000))
    oracle = []
    for d in range(-3, -2001, -1):
        if d % 4 == 1 and is_squarefree(d):
            oracle.append(d)
        elif d % 4 == 0 and (d // 4) % 4 in (2, 3) and is_squarefree(d // 4):
            oracle.append(d)
    assert ours == oracle


@pytest.mark.parametrize("d, h", [(-47, 5), (-3, 1), (-4, 1), (-7, 1), (-23, 3), (-31, 3), (-24, 2), (-40, 2)])
def test_class_number_examples(d, h):
    assert class_number_forms(d) == h
    assert class_number_dirichlet(d) == h
    assert class_number(quad_field_from_disc(d)) == h


def test_h23_by_box_enumeration():
    assert sorted(brute_reduced_forms(-23)) == [(1, 1, 6), (2, -1, 3), (2, 1, 3)]


def test_h31_and_h24_by_box_enumeration():
    assert len(brute_reduced_forms(-31)) == 3
    assert len(brute_reduced_forms(-24)) == 2


def test_dirichlet_minus_four_by_hand():
    # |1*1 + (-1)*3| = 2, (4 / 8) * 2 = 1
    assert class_number_dirichlet(-4) == 1


def test_reduced_forms_match_box_enumeration():
    for d in fundamental_discriminants(-3000):
        ours = list(reduced_forms(d))
        assert len(ours) == len(set(ours))
        assert sorted(ours) == sorted(brute_reduced_forms(d)), d


def test_reduced_forms_satisfy_reduction():
    for d in fundamental_discriminants(-5000):
        for a, b, c in reduced_forms(d):
            assert b * b - 4 * a * c == d
            assert -a < b <= a <= c
            if a == c or a == abs(b):
                assert b >= 0


def test_forms_equal_dirichlet_to_ten_thousand():
    bad = [d for d in fundamental_discriminants(-10**4) if class_number_forms(d) != class_number_dirichlet(d)]
    assert bad == []


def test_genus_parity_sweep():
    for q in range(3, 10**4, 4):
        if is_prime(q):
            assert class_number_forms(-q) % 2 == 1, q


def test_class_number_consistency_error(monkeypatch):
    import iwacert.quadratic as qmod

    qmod._class_number.cache_clear()
    monkeypatch.setattr(qmod, "class_number_dirichlet", lambda K: 99)
    with pytest.raises(ConsistencyError):
        qmod.class_number(-47)
    qmod._class_number.cache_clear()


@pytest.mark.parametrize(
    "d, p, kind",
    [(-47, 3, SplittingType.SPLIT), (-4, 5, SplittingType.SPLIT), (-4, 3, SplittingType.INERT),
     (-4, 2, SplittingType.RAMIFIED), (-7, 2, SplittingType.SPLIT), (-3, 2, SplittingType.INERT)],
)
def test_splitting(d, p, kind):
    assert splitting_in_quad(quad_field_from_disc(d), p) is kind


def test_splitting_frozen_oracle_values():
    assert legendre_by_squares(-47, 3) == 1  # -47 = 1 mod 3


@given(st.sampled_from(list(fundamental_discriminants(-3000))), st.sampled_from([p for p in range(2, 200) if is_prime(p)]))
def test_ramified_iff_divides(d, p):
    assert (splitting_in_quad(d, p) is SplittingType.RAMIFIED) == (d % p == 0)


@pytest.mark.parametrize("d, expected", [(-47, True), (-40, False), (-31, True), (-4, True), (-8, True), (-3, True), (-15, False), (-24, False)])
def test_genus_parity_check(d, expected):
    assert genus_parity_check(quad_field_from_disc(d)) is expected
    if expected:
        assert class_number(d) % 2 == 1


def test_genus_prime_discriminants_have_odd_h():
    for d in fundamental_discriminants(-5000):
        if genus_parity_check(d):
            assert class_number_forms(d) % 2 == 1, d


def test_is_fundamental():
    assert is_fundamental_discriminant(-3)
    assert not is_fundamental_discriminant(-12)
    assert not is_fundamental_discriminant(5 - 10)
