import pytest

from pseudobl import named
from pseudobl.core import is_commutative, satisfies
from pseudobl.errors import NotNormal
from pseudobl.filters import Filter, all_filters, is_normal, maximal_filters
from pseudobl.quotients import (
    class_order,
    equivalences_from_filter,
    filter_from_classes,
    is_congruence,
    left_partition,
    quotient,
    quotient_map,
    right_partition,
)
from pseudobl.search import is_isomorphic

from conftest import catalog, synthetic


def F(*xs):
    return Filter(frozenset(xs))


def test_b4_quotient_is_c2():
    A = named.b4()
    q = quotient_map(A, F(1, 3))
    # the class of top is the filter itself
    assert q.classes == ((0, 2), (1, 3))
    assert is_isomorphic(q.algebra, named.c2())
    assert filter_from_classes(A, q) == F(1, 3)
    assert q.project(A.top) == q.algebra.top


def test_quotient_by_top_filter_is_identity():
    for name in ("l3", "g3", "b4"):
        A = named.named(name)
        assert quotient(A, F(A.top)) == A.with_bottom(A.bottom)


def test_quotient_by_everything_is_trivial():
    A = named.g3()
    assert quotient(A, F(0, 1, 2)).size == 1


def test_equivalence_list_on_catalogs():
    algebras = catalog("pbl", 5) + catalog("hoop", 5) + catalog("residuated", 5)
    for A in algebras:
        for G in all_filters(A):
            rep = equivalences_from_filter(A, G)
            assert rep.consistent, (A.name, G)


def test_quotient_by_maximal_normal_commutative():
    for A in catalog("pbl", 5):
        for V in maximal_filters(A):
            if is_normal(A, V):
                Q = quotient(A, V)
                assert is_commutative(Q)
                assert satisfies(Q, "pbl")


def test_non_normal_filter_refused():
    A = synthetic("residuated-4-4")
    V = F(2, 3)
    rep = equivalences_from_filter(A, V)
    assert not rep.normal and not rep.equal
    assert not rep.left_congruence and not rep.right_congruence
    assert left_partition(A, V) != right_partition(A, V)
    with pytest.raises(NotNormal):
        quotient(A, V)


def test_is_congruence_detects_identity():
    A = named.l3()
    assert is_congruence(A, ((0,), (1,), (2,)))
    assert not is_congruence(A, ((0, 1), (2,)))


def test_class_order_g3():
    A = named.g3()
    V = F(1, 2)
    assert class_order(A, V, 1, 2) and class_order(A, V, 2, 1)
    assert class_order(A, V, 0, 1) and not class_order(A, V, 1, 0)
    assert class_order(A, V, 0, 2, side="right")
    with pytest.raises(ValueError):
        class_order(A, V, 0, 1, side="up")


def test_class_order_characterizations_over_catalog():
    for A in catalog("pbl", 5):
        for G in all_filters(A):
            for x in A.elements:
                for y in A.elements:
                    class_order(A, G, x, y, "left")
                    class_order(A, G, x, y, "right")
