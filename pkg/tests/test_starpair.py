"""*-pair validation, embeddability, order conditions and derived ideals."""

import pytest

from sgquot.core import SubSemigroup, canonical_table
from sgquot.fixtures import brandt_b2, cyclic_group, fixture_semigroups, left_zero, null_semigroup, rect_band
from sgquot.green import green_data
from sgquot.orders import PreconditionFailed
from sgquot.relations import Relation
from sgquot.starpair import (
    AxiomViolated,
    EMBED_KEYS,
    ORDER_KEYS,
    NotAPreorder,
    check_completely_regular_condition,
    check_embeddable,
    check_inverse_condition,
    check_order_conditions,
    compat_redundancy_check,
    completely_regular_specialisation,
    derived_j_structure,
    equality_pair,
    factor_witness,
    factor_witness_equivalence,
    greens_composition_law,
    h_class_laws,
    induced_star_pair,
    inverse_specialisation,
    is_embeddable,
    make_star_pair,
    semisimple_characterization,
    starred_pair,
    straight_order_consequences,
    translation_law,
)
from sgquot.starred import starred_data

B2 = brandt_b2()
Z3 = cyclic_group(3)
N2 = null_semigroup(2)
RB22 = rect_band(2, 2)


def whole(s):
    return SubSemigroup(s, range(s.order))


def test_starred_pair_is_valid_for_everything():
    for s in (B2, Z3, N2, RB22, left_zero(2)):
        p = starred_pair(s)
        sd = starred_data(s)
        assert p.leq_l == sd.leq_Lstar and p.leq_r == sd.leq_Rstar


def test_equality_pair_is_valid():
    p = equality_pair(N2)
    assert p.GS == frozenset({0})  # only the idempotent squares into its class


def test_swapped_starred_components_violate_an_axiom():
    lz = left_zero(2)
    sd = starred_data(lz)
    # leq_L* is full on a left zero band, leq_R* is equality; swapping breaks
    # the containment of the right component
    with pytest.raises(AxiomViolated) as err:
        make_star_pair(lz, sd.leq_Rstar, sd.leq_Lstar)
    assert "leq_r" in err.value.which


def test_not_a_preorder_rejected():
    bad = Relation.from_pairs(2, [(0, 1)])  # not reflexive
    with pytest.raises(NotAPreorder):
        make_star_pair(left_zero(2), bad, Relation.identity(2))


def test_induced_pair_restricts_ambient_green():
    p = induced_star_pair(whole(B2))
    gd = green_data(B2)
    assert p.leq_l == gd.leq_L and p.leq_r == gd.leq_R
    assert p.Lp == gd.L and p.Rp == gd.R
    assert p.GS == frozenset({0, 1, 4})


def test_induced_pair_on_proper_subsemigroup():
    sub = SubSemigroup(B2, [0, 1, 4])
    p = induced_star_pair(sub)
    assert p.s.order == 3
    assert p.GS == frozenset(range(3))  # a band of idempotents


def test_embeddable_b2():
    report = check_embeddable(induced_star_pair(whole(B2)))
    assert set(report) == set(EMBED_KEYS)
    assert is_embeddable(report)
    assert all(v.holds for v in report.values())


def test_embeddable_group_degenerate():
    report = check_embeddable(induced_star_pair(whole(Z3)))
    assert is_embeddable(report)


def test_equality_pair_on_n2_fails_eiii():
    report = check_embeddable(equality_pair(N2))
    assert report["Eiii"].status == "fails"
    assert report["Eiii"].witness == (1,)  # the class {a} has no G(S) element


def test_order_conditions_b2():
    report = check_order_conditions(induced_star_pair(whole(B2)))
    assert set(report) == set(ORDER_KEYS)
    assert all(report[k].holds for k in ORDER_KEYS)


def test_order_conditions_rb22():
    report = check_order_conditions(induced_star_pair(whole(RB22)))
    assert all(report[k].holds for k in ORDER_KEYS)


def test_equality_pair_on_z3_fails_gi():
    report = check_order_conditions(equality_pair(Z3))
    assert report["Gi"].status == "fails"
    # S(S) is all of Z3 (cancellative) but G(S) under equality is just {e}
    assert report["Gi"].witness in ((1,), (2,))


def test_inverse_condition():
    assert check_inverse_condition(induced_star_pair(whole(B2))).holds
    assert check_inverse_condition(induced_star_pair(whole(Z3))).holds
    verdict = check_inverse_condition(induced_star_pair(whole(RB22)))
    assert verdict.status == "fails"
    a, h = verdict.witness
    p = induced_star_pair(whole(RB22))
    assert p.Rp.same_class(a, h) or p.Lp.same_class(a, h)
    assert not p.Hp.same_class(a, h)


def test_completely_regular_condition():
    assert check_completely_regular_condition(induced_star_pair(whole(RB22))).holds
    assert check_completely_regular_condition(induced_star_pair(whole(Z3))).holds
    verdict = check_completely_regular_condition(induced_star_pair(whole(B2)))
    assert verdict.status == "fails" and verdict.witness == (2,)


def test_straight_order_consequences():
    for s in (B2, Z3, RB22, fixture_semigroups()["CS6"], fixture_semigroups()["CL6"]):
        soc = straight_order_consequences(whole(s))
        assert soc.applies and soc.verified()
    soc = straight_order_consequences(SubSemigroup(B2, [0, 1, 4]))
    assert not soc.applies and soc.verified()  # vacuous


def test_factor_witness_b2():
    p = induced_star_pair(whole(B2))
    h, k = factor_witness(p, 2, 4)  # a12 <=_l e22 (same L-class)
    assert h == 1 and k == 2
    assert B2.mul(h, 2) == B2.mul(k, 4)
    assert p.Rp.same_class(h, k) and p.Rp.same_class(k, 2)
    assert h in p.GS


def test_factor_witness_none_when_not_below():
    p = induced_star_pair(whole(B2))
    assert factor_witness(p, 1, 2) is None  # e11 is not <=_l a12? both L-classes differ
    assert not p.leq_l.holds(1, 2)


def test_factor_witness_equal_elements():
    p = induced_star_pair(whole(Z3))
    h, k = factor_witness(p, 1, 1)
    assert Z3.mul(h, 1) == Z3.mul(k, 1)


def test_factor_witness_equivalence_on_fixtures():
    for s in (B2, Z3, RB22):
        p = induced_star_pair(whole(s))
        assert factor_witness_equivalence(p) is None


def test_factor_witness_requires_conditions():
    with pytest.raises(PreconditionFailed):
        factor_witness(equality_pair(N2), 0, 1)


def test_structural_laws_on_fixtures():
    for s in (B2, Z3, RB22, fixture_semigroups()["CS6"]):
        p = induced_star_pair(whole(s))
        assert h_class_laws(p) is None
        assert greens_composition_law(p) is None
        assert translation_law(p) is None
        assert compat_redundancy_check(p)


def test_derived_j_structure_b2():
    js = derived_j_structure(induced_star_pair(whole(B2)))
    assert set(js.Jp.classes()) == {frozenset({0}), frozenset({1, 2, 3, 4})}
    assert js.j_ideal(1) == frozenset(range(5))
    assert js.strict_ideal(1) == frozenset({0})
    assert js.strict_ideal(0) == frozenset()
    factor = js.principal_factor(1)
    assert canonical_table(factor) == canonical_table(B2)
    zero_factor = js.principal_factor(0)
    assert zero_factor.order == 1


def test_derived_j_structure_group():
    js = derived_j_structure(induced_star_pair(whole(Z3)))
    assert js.Jp.classes() == (frozenset({0, 1, 2}),)
    assert canonical_table(js.principal_factor(0)) == canonical_table(Z3)


def test_derived_j_structure_needs_conditions():
    with pytest.raises(PreconditionFailed):
        derived_j_structure(equality_pair(N2))


def test_semisimple_characterization_fixtures():
    for s in (B2, Z3, RB22, fixture_semigroups()["CS6"], fixture_semigroups()["CL6"]):
        rep = semisimple_characterization(whole(s))
        assert rep.completely_semisimple and rep.trace_condition and rep.chain_condition
        assert rep.restrictions_agree
        assert rep.simple_iff_jp_full and rep.bisimple_iff_dp_full
        assert rep.consistent()


def test_semisimple_characterization_requires_straight_order():
    with pytest.raises(PreconditionFailed):
        semisimple_characterization(SubSemigroup(B2, [0, 1, 4]))


def test_specialisations():
    inv = inverse_specialisation(whole(B2))
    assert inv.straight and inv.ambient_property and inv.conditions_hold
    assert inv.forward_ok and inv.converse_ok
    creg = completely_regular_specialisation(whole(RB22))
    assert creg.straight and creg.ambient_property and creg.conditions_hold
    assert creg.forward_ok and creg.converse_ok
    # B2 is not completely regular: conditions must not claim (GI)
    creg_b2 = completely_regular_specialisation(whole(B2))
    assert creg_b2.straight and not creg_b2.ambient_property
    assert creg_b2.conditions_hold is False and creg_b2.converse_ok


def test_gs_inside_square_cancellable():
    for s in (B2, Z3, RB22, N2, left_zero(2)):
        for p in (starred_pair(s), equality_pair(s), induced_star_pair(whole(s))):
            assert p.GS <= p.square_cancellable()


def test_induced_pair_of_null_semigroup_fails_eiii():
    p = induced_star_pair(whole(N2))
    report = check_embeddable(p)
    assert report["Eiii"].status == "fails"
    with pytest.raises(PreconditionFailed):
        derived_j_structure(p)
