import pytest

from sgquot.relations import Relation, left_compatible, right_compatible


def test_shape_validation():
    with pytest.raises(ValueError):
        Relation([[True, False]])


def test_preorder_predicates():
    r = Relation.from_pairs(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)])
    assert r.is_reflexive() and not r.is_transitive()
    closed = r.transitive_closure()
    assert closed.is_preorder() and closed.holds(0, 2)


def test_equivalence_classes_ordered_by_least_member():
    eq = Relation.from_pairs(4, [(a, a) for a in range(4)] + [(1, 3), (3, 1)])
    assert eq.classes() == (frozenset({0}), frozenset({1, 3}), frozenset({2}))
    with pytest.raises(ValueError):
        Relation.from_pairs(2, [(0, 0), (1, 1), (0, 1)]).classes()


def test_compose_and_converse():
    a = Relation.from_pairs(3, [(0, 1)])
    b = Relation.from_pairs(3, [(1, 2)])
    assert list(a.compose(b).pairs()) == [(0, 2)]
    assert list(a.converse().pairs()) == [(1, 0)]


def test_containment_and_meet():
    ident = Relation.identity(3)
    full = Relation.full(3)
    assert ident <= full and not full <= ident
    assert (full & ident) == ident
    assert full.first_nonpair(ident) == (0, 1)
    assert ident.first_nonpair(full) is None


def test_restrict_keeps_order_of_members():
    r = Relation.from_pairs(4, [(1, 3), (3, 1)])
    sub = r.restrict([1, 3])
    assert sub.holds(0, 1) and sub.holds(1, 0) and not sub.holds(0, 0)


def test_equivalence_of_preorder():
    pre = Relation.from_pairs(2, [(0, 0), (1, 1), (0, 1)])
    assert pre.equivalence() == Relation.identity(2)


def test_compatibility_helpers():
    table = [[0, 0], [1, 1]]  # left zero
    full = Relation.full(2)
    assert right_compatible(full, table) is None
    assert left_compatible(full, table) is None
    ident = Relation.identity(2)
    assert right_compatible(ident, table) is None
