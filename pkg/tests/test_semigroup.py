import random
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from helpers import random_inverse_semigroup
from semichar import catalog
from semichar import partial_perm as pp
from semichar.errors import ClosureOverflow, InputError, PreconditionError
from semichar.semigroup import (
    check_associative,
    closure,
    d_classes,
    from_table,
    green_j,
    idempotent_order,
    idempotents,
    is_commuting_idem,
    is_da,
    is_inverse,
    is_regular,
    is_triangularizable,
    maximal_subgroup,
    minimal_left_ideal,
    natural_order,
    omega_power,
)


def I(n, subset=None):
    return pp.PartialPerm.identity(n, subset)


def rook2_generators():
    return [pp.PartialPerm.from_images([2, 1]), I(2, {1}), I(2, {2})]


def test_closure_rook2():
    s = closure(rook2_generators())
    assert len(s) == 7
    assert s.elements[0] == pp.PartialPerm.from_images([2, 1])


def test_closure_single_idempotent():
    assert len(closure([I(3, {1})])) == 1


def test_closure_overflow_carries_count():
    with pytest.raises(ClosureOverflow) as info:
        closure(rook2_generators(), cap=3)
    assert info.value.count == 3


def test_closure_rejects_empty_and_mixed_degrees():
    with pytest.raises(InputError):
        closure([])
    with pytest.raises(InputError):
        closure([I(2), I(3)])


def test_idempotents_examples():
    s = catalog.rook(2)
    assert {s.elements[e] for e in idempotents(s)} == {I(2, x) for x in [(), (1,), (2,), (1, 2)]}
    g = catalog.symmetric(3)
    assert idempotents(g) == [g.identity]
    assert len(idempotents(catalog.boolean_lattice(1))) == 2


def test_omega_power_examples():
    s = catalog.rook(2)
    e = s.index_of[I(2, {1})]
    assert omega_power(s, e) == (e, e)
    c3 = catalog.cyclic(3)
    assert omega_power(c3, 1) == (0, 1)
    m = catalog.monogenic(2, 1)  # x, x^2 with x^3 = x^2
    assert omega_power(m, 0) == (1, 1)


def test_green_j_examples():
    s = catalog.rook(2)
    g = green_j(s)
    assert len(g.classes) == 3 and all(g.regular_flags)
    ranks = sorted(g.classes, key=lambda c: pp.rank(s.elements[c[0]]))
    for lo, hi in zip(ranks, ranks[1:]):
        assert g.leq(lo[0], hi[0]) and not g.leq(hi[0], lo[0])
    assert len(green_j(catalog.symmetric(3)).classes) == 1
    m = green_j(catalog.monogenic(2, 1))
    assert m.classes == ((0,), (1,))
    assert m.regular_flags == (False, True)


def test_is_inverse_examples():
    assert is_inverse(catalog.rook(2))
    assert not is_inverse(catalog.monogenic(2, 1))
    assert not is_inverse(catalog.left_zero(2))
    assert not is_regular(catalog.monogenic(2, 1))


def test_natural_order_rook2():
    s = catalog.rook(2)
    po = natural_order(s)
    zero = s.index_of[pp.PartialPerm.zero(2)]
    assert all(po.leq(zero, x) for x in range(len(s)))
    for x in range(len(s)):
        if pp.rank(s.elements[x]) == 1:
            above = {y for y in range(len(s)) if po.lt(x, y)}
            want = {y for y in range(len(s)) if pp.rank(s.elements[y]) == 2 and pp.leq(s.elements[x], s.elements[y])}
            assert above == want and len(above) == 1


def test_natural_order_of_group_is_discrete():
    g = catalog.symmetric(3)
    po = natural_order(g)
    assert po.leq_pairs() == {(x, x) for x in range(6)}


def test_natural_order_rejects_non_inverse():
    with pytest.raises(PreconditionError):
        natural_order(catalog.monogenic(2, 1))


def test_d_classes_rook2():
    dc = d_classes(catalog.rook(2))
    assert [(d.n, d.group_order) for d in dc] == [(1, 1), (2, 1), (1, 2)]
    assert dc.total() == 7


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_d_classes_rook_sizes(n):
    s = catalog.rook(n)
    assert len(s) == sum(comb(n, k) ** 2 * factorial(k) for k in range(n + 1))
    dc = d_classes(s)
    assert [(d.n, d.group_order) for d in dc] == [(comb(n, k), factorial(k)) for k in range(n + 1)]


def test_d_classes_group_and_semilattice():
    assert [d.n for d in d_classes(catalog.symmetric(3))] == [1]
    assert [d.n for d in d_classes(catalog.boolean_lattice(2))] == [1, 1, 1, 1]


def test_d_classes_connectors():
    s = catalog.rook(3)
    for d in d_classes(s):
        assert d.connectors[d.base] == d.base
        for e, p in d.connectors.items():
            assert s.dom(p) == d.base and s.ran(p) == e


def test_maximal_subgroups_rook2():
    s = catalog.rook(2)
    assert len(maximal_subgroup(s, s.index_of[I(2)])) == 2
    assert len(maximal_subgroup(s, s.index_of[I(2, ())])) == 1
    assert len(maximal_subgroup(s, s.index_of[I(2, {1})])) == 1
    with pytest.raises(InputError):
        maximal_subgroup(s, s.index_of[pp.PartialPerm.from_images([2, 1])])


def test_maximal_subgroup_non_inverse():
    s = catalog.adjoin_identity(catalog.cyclic(3))
    assert len(maximal_subgroup(s, 0)) == 3
    m = catalog.monogenic(2, 3)
    e = omega_power(m, 0)[0]
    assert len(maximal_subgroup(m, e)) == 3


def test_minimal_left_ideal_examples():
    g = catalog.symmetric(3)
    assert minimal_left_ideal(g) == list(range(6))
    # xy = x: S^1 a = {a, b}, the whole left-zero part
    lz = catalog.adjoin_identity(catalog.left_zero(2))
    assert minimal_left_ideal(lz) == [0, 1]
    # xy = y: S^1 a = {a}
    rz = catalog.adjoin_identity(catalog.right_zero(2))
    assert minimal_left_ideal(rz) in ([0], [1])
    b2 = catalog.boolean_lattice(2)
    assert minimal_left_ideal(b2) == [0]


def test_class_predicates():
    b = catalog.boolean_lattice(2)
    assert is_da(b) and is_triangularizable(b)
    z2 = catalog.cyclic(2)
    assert not is_da(z2) and is_triangularizable(z2)
    assert not is_triangularizable(catalog.rook(2))
    assert is_commuting_idem(catalog.monogenic(3, 1))
    assert not is_commuting_idem(catalog.free_lrb(2))
    assert is_da(catalog.free_lrb(2))
    assert is_triangularizable(catalog.adjoin_identity(catalog.free_lrb(2)))


def test_from_table_checks():
    with pytest.raises(InputError):
        from_table([[1, 2], [2, 3]])
    # non-associative 2-element table
    with pytest.raises(InputError):
        from_table([[2, 1], [1, 1]])
    s = from_table([[1, 2], [2, 2]], labels=["1", "z"])
    assert s.identity == 0


@pytest.fixture(scope="module")
def random_semigroups():
    rng = random.Random(7)
    return [random_inverse_semigroup(rng, max_size=50) for _ in range(25)]


def test_random_semigroups_are_inverse(random_semigroups):
    for s in random_semigroups:
        assert is_inverse(s)
        check_associative(s.table)
        assert d_classes(s).total() == len(s)


def test_natural_order_is_restriction(random_semigroups):
    for s in random_semigroups:
        po = natural_order(s)
        for x in range(len(s)):
            for y in range(len(s)):
                assert po.leq(x, y) == pp.leq(s.elements[x], s.elements[y])


def test_idempotents_form_order_ideal(random_semigroups):
    for s in random_semigroups:
        po = natural_order(s)
        es = s.idempotent_set
        for e in es:
            assert set(po.down(e)) <= es


def test_intervals_match_domain_intervals(random_semigroups):
    for s in random_semigroups:
        po = natural_order(s)
        mu = po.mobius()
        emu = idempotent_order(s).mobius()
        for x in range(len(s)):
            for y in po.up(x):
                a, b = s.dom(x), s.dom(y)
                assert len(po.interval(x, y)) == len(idempotent_order(s).interval(a, b))
                assert mu(x, y) == emu(a, b)


def test_j_equals_d_for_inverse(random_semigroups):
    for s in random_semigroups:
        g = green_j(s)
        dc = d_classes(s)
        for x in range(len(s)):
            for y in range(len(s)):
                assert (g.j_class_of[x] == g.j_class_of[y]) == (dc.d_class_of[x] == dc.d_class_of[y])


def test_regular_j_classes_contain_idempotents():
    for s in [catalog.monogenic(3, 2), catalog.free_lrb(3), catalog.direct_product(catalog.monogenic(2, 1), catalog.rook(2))]:
        g = green_j(s)
        for cl, flag in zip(g.classes, g.regular_flags):
            assert flag == any(x in s.idempotent_set for x in cl)
            assert all((x in s.regular) == flag for x in cl)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_rook_mobius_signs(n):
    s = catalog.rook(n)
    mu = natural_order(s).mobius()
    for (x, y), v in mu.items():
        assert v == (-1) ** (pp.rank(s.elements[y]) - pp.rank(s.elements[x]))


# ---- catalog


def test_catalog_sizes():
    assert [len(catalog.rook(n)) for n in range(1, 5)] == [2, 7, 34, 209]
    assert catalog.rook_size(5) == 1546
    assert len(catalog.order_preserving(3)) == sum(comb(3, k) ** 2 for k in range(4))
    assert len(catalog.free_lrb(2)) == 4
    assert len(catalog.monogenic(3, 2)) == 4
    assert len(catalog.wreath(catalog.cyclic(2), catalog.rook(2))) == 17


def test_catalog_spec_parsing():
    assert len(catalog.from_spec("rook:3")) == 34
    assert len(catalog.from_spec("rook(3)")) == 34
    assert len(catalog.from_spec("wreath:cyclic(2),rook(2)")) == 17
    assert len(catalog.from_spec("product:monogenic(2,1),boolean(1)")) == 4
    assert len(catalog.from_spec("monoid:leftzero(2)")) == 3
    with pytest.raises(InputError, match="valid names"):
        catalog.from_spec("nope:1")
    with pytest.raises(InputError):
        catalog.from_spec("rook:x")


def test_adjoin_identity():
    m = catalog.rook(2)
    assert catalog.adjoin_identity(m) is m
    lz = catalog.adjoin_identity(catalog.left_zero(2))
    assert len(lz) == 3 and lz.identity == 2
    lrb = catalog.adjoin_identity(catalog.free_lrb(2))
    assert lrb.labels[-1] == "1"


def test_wreath_is_inverse():
    w = catalog.wreath(catalog.cyclic(2), catalog.rook(1))
    assert len(w) == 3 and is_inverse(w)
