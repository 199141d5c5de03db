"""Exact symbolic semigroups: products, oracles, windowed claim ledgers."""

import pytest

from sgquot.symbolic import (
    BICYCLIC_Z,
    BPair,
    DPair,
    GPow,
    ZERO,
    WindowTooSmall,
    WrongSemigroup,
    all_claims_hold,
    associativity_violation,
    bicyclic_z,
    brandt_mod,
    brandt_z,
    by_name,
    claims_report,
    format_element,
    oracle_window_agreement,
    phi_period,
)

BZ = brandt_z()
BM = brandt_mod(3)
BC = bicyclic_z()


def test_brandt_z_products():
    assert BZ.multiply(GPow(2), BPair(5, 7)) == BPair(7, 7)
    assert BZ.multiply(BPair(5, 7), GPow(2)) == BPair(5, 5)
    assert BZ.multiply(BPair(1, 2), BPair(2, 9)) == BPair(1, 9)
    assert BZ.multiply(BPair(1, 2), BPair(3, 9)) is ZERO
    assert BZ.multiply(GPow(3), GPow(-5)) == GPow(-2)
    assert BZ.multiply(ZERO, GPow(4)) is ZERO


def test_brandt_mod_products():
    assert BM.multiply(BPair(1, 2, 3), BPair(2, 0, 3)) == BPair(1, 0, 3)
    assert BM.multiply(BPair(1, 2, 3), BPair(1, 0, 3)) is ZERO
    assert BM.multiply(GPow(4), BPair(2, 1, 3)) == BPair(0, 1, 3)  # 4+2 mod 3
    assert BM.multiply(BPair(2, 1, 3), GPow(2)) == BPair(2, 2, 3)  # 1-2 mod 3


def test_bicyclic_products():
    assert BC.multiply(DPair(0, 0), DPair(1, 2)) == DPair(1, 2)
    assert BC.multiply(DPair(2, 1), DPair(1, 5)) == DPair(2, 5)
    assert BC.multiply(GPow(1), DPair(0, 0)) == DPair(1, 0)
    assert BC.multiply(DPair(3, 3), GPow(2)) == DPair(3, 1)


def test_wrong_semigroup_rejected():
    with pytest.raises(WrongSemigroup):
        BZ.multiply(GPow(1), DPair(0, 0))
    with pytest.raises(WrongSemigroup):
        BC.multiply(DPair(0, 0), ZERO)
    with pytest.raises(WrongSemigroup):
        BM.multiply(BPair(1, 2), GPow(0))  # missing modulus tag
    with pytest.raises(WrongSemigroup):
        brandt_mod(2)


def test_membership_of_designated_sub():
    assert BZ.in_designated_sub(GPow(0)) and not BZ.in_designated_sub(GPow(-1))
    assert BZ.in_designated_sub(BPair(0, 5)) and BZ.in_designated_sub(BPair(-7, -1))
    assert not BZ.in_designated_sub(BPair(-1, 0))
    assert BZ.in_designated_sub(ZERO)
    assert BM.in_designated_sub(BPair(2, 1, 3))
    assert BC.in_designated_sub(DPair(3, 1)) and not BC.in_designated_sub(DPair(1, 3))


def test_sub_closed_under_products():
    for e, w in ((BZ, 4), (BM, 4), (BC, 4)):
        sub = e.windowed_sub(w)
        for x in sub:
            for y in sub:
                assert e.in_designated_sub(e.multiply(x, y))


def test_associativity_window():
    for e in (BZ, BM, BC):
        assert associativity_violation(e, 3) is None


def test_associativity_sampled_large_window():
    import random

    rng = random.Random(7)
    for e in (BZ, BM, BC):
        els = e.windowed_elements(6)
        for _ in range(4000):
            x, y, z = rng.choice(els), rng.choice(els), rng.choice(els)
            assert e.multiply(e.multiply(x, y), z) == e.multiply(x, e.multiply(y, z))


def test_green_oracle_h_classes():
    # H-classes are G and the singletons of the ideal
    assert BZ.green(BPair(0, 0), BPair(0, 0), "H")
    assert BZ.green(GPow(1), GPow(5), "H")
    assert not BZ.green(BPair(0, 0), BPair(1, 0), "H")
    assert not BZ.green(GPow(0), BPair(0, 0), "H")
    assert BC.green(DPair(2, 1), DPair(2, 5), "R")
    assert not BC.green(DPair(2, 1), DPair(3, 1), "R")


def test_leq_oracles():
    assert BZ.leq(BPair(3, 1), GPow(-2), "R")
    assert not BZ.leq(GPow(0), BPair(0, 0), "R")
    assert BZ.leq(ZERO, BPair(4, 4), "L")
    assert BC.leq(DPair(5, 0), DPair(2, 0), "R") and not BC.leq(DPair(2, 0), DPair(5, 0), "R")


def test_oracles_match_windowed_witness_search():
    for e in (BZ, BM, BC):
        report = oracle_window_agreement(e, 3)
        assert report.mismatches == ()
        assert report.oracle_only == 0  # the witness pools are complete here


def test_idempotents():
    assert BC.is_idempotent(DPair(4, 4)) and not BC.is_idempotent(DPair(4, 3))
    assert BZ.is_idempotent(ZERO) and BZ.is_idempotent(BPair(2, 2))


def test_inverses():
    assert BZ.inverse(BPair(3, 5)) == BPair(5, 3)
    assert BC.inverse(DPair(3, 5)) == DPair(5, 3)
    q = BPair(1, 2, 3)
    assert BM.product(q, BM.inverse(q), q) == q


def test_group_inverse_needs_subgroup():
    assert BZ.group_inverse(GPow(4)) == GPow(-4)
    assert BZ.group_inverse(BPair(2, 2)) == BPair(2, 2)
    with pytest.raises(WrongSemigroup):
        BZ.group_inverse(BPair(1, 2))


def test_phi_periods():
    assert phi_period(BZ, 5) is None
    assert phi_period(BC, 5) is None
    assert phi_period(BM, 5) == 3
    assert phi_period(brandt_mod(4), 6) == 4


def test_claims_require_window():
    with pytest.raises(WindowTooSmall):
        claims_report(BZ, 3)


@pytest.mark.parametrize("maker,expected", [
    (brandt_z, {
        "sub-closed", "left-quotient-decomposition", "right-quotient-decomposition",
        "not-very-large", "not-straight", "square-cancellable-in-subgroups",
        "shift-action-aperiodic",
    }),
    (lambda: brandt_mod(3), {
        "sub-closed", "straight-weak-order", "square-cancellable-in-subgroups",
        "h-not-a-congruence", "shift-action-period",
    }),
    (bicyclic_z, {
        "sub-closed", "left-quotient-decomposition", "right-quotient-decomposition",
        "idempotents-diagonal", "square-identity", "not-very-large", "not-straight",
        "square-cancellable-in-subgroups", "shift-action-aperiodic",
        "self-order-not-semisimple",
    }),
])
def test_claim_ledgers_hold(maker, expected):
    claims = claims_report(maker(), 5)
    assert {c.name for c in claims} == expected
    assert all_claims_hold(claims)


def test_h_congruence_witness_exact():
    claims = {c.name: c for c in claims_report(BM, 5)}
    witness = claims["h-not-a-congruence"].witness
    assert witness == ("a^1", "(0,0)", "(1,0)", "(0,0)")


def test_semisimple_counterexample_exact():
    claims = {c.name: c for c in claims_report(BC, 5)}
    witness = claims["self-order-not-semisimple"].witness
    assert witness == ("(0,0)", "(1,2)", "(1,2)")


def test_by_name():
    assert by_name("brandt-z").kind == "brandt-z"
    assert by_name("brandt-mod", 5).modulus == 5
    assert by_name(BICYCLIC_Z).kind == BICYCLIC_Z
    with pytest.raises(WrongSemigroup):
        by_name("nope")


def test_format_element():
    assert format_element(GPow(-2)) == "a^-2"
    assert format_element(BPair(1, 2)) == "(1,2)"
    assert format_element(ZERO) == "0"


def test_windowed_sub_is_left_and_right_reversible():
    # the zero lies in xS ∩ yS and Sx ∩ Sy for ideal elements; group parts
    # share powers of a, so windowed witnesses always exist
    for e in (BZ, BM):
        sub = e.windowed_sub(3)
        pool = e.windowed_sub(6)
        right = {x: {e.multiply(x, c) for c in pool} for x in sub}
        left = {x: {e.multiply(c, x) for c in pool} for x in sub}
        for x in sub:
            for y in sub:
                assert right[x] & right[y]
                assert left[x] & left[y]


def test_power_witness_in_modular_instance():
    # q = (a^1)# (0,0) = a^-1 (0,0) = (2,0); the shift action has order 3, so
    # k = 2 already gives a^2 (0,0) = (2,0) = q, while smaller powers miss it
    q = BM.multiply(BM.group_inverse(GPow(1)), BPair(0, 0, 3))
    assert q == BPair(2, 0, 3)
    assert phi_period(BM, 5) == 3
    powers = [BM.multiply(GPow(k), BPair(0, 0, 3)) for k in range(3)]
    assert powers == [BPair(0, 0, 3), BPair(1, 0, 3), BPair(2, 0, 3)]
    assert [BM.green(p, q, "H") for p in powers] == [False, False, True]
