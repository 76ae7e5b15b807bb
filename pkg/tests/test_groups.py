from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from semichar import catalog
from semichar import groups
from semichar import partial_perm as pp
from semichar.cyclotomic import E
from semichar.errors import BudgetError, InputError
from semichar.groups import Partition


def test_conjugacy_classes_s3():
    cl = groups.conjugacy_classes(catalog.symmetric(3))
    assert [c.size for c in cl] == [1, 3, 2]
    assert [c.centralizer_size for c in cl] == [6, 2, 3]


def test_conjugacy_classes_small():
    assert len(groups.conjugacy_classes(catalog.cyclic(1))) == 1
    assert [c.size for c in groups.conjugacy_classes(catalog.cyclic(3))] == [1, 1, 1]
    with pytest.raises(InputError):
        groups.conjugacy_classes(catalog.boolean_lattice(1))


def test_table_z2():
    t = groups.character_table(catalog.cyclic(2))
    assert [[int(v.to_int()) for v in row] for row in t.irreducibles] == [[1, 1], [1, -1]]


def test_table_s3():
    t = groups.character_table(catalog.symmetric(3))
    assert t.degrees == (1, 1, 2) or list(t.degrees) == [1, 1, 2]
    assert [v.to_int() for v in t.irreducibles[2]] == [2, 0, -1]


def test_table_z3_has_roots_of_unity():
    t = groups.character_table(catalog.cyclic(3))
    vals = {v for row in t.irreducibles for v in row}
    assert E(3) in vals and E(3) ** 2 in vals
    for r in range(3):
        row = t.values(r)
        assert groups.inner_product(row, row, t.group) == 1


def test_budget():
    with pytest.raises(BudgetError):
        groups.character_table(catalog.symmetric(4), budget=10)


@pytest.mark.parametrize("spec", ["cyclic:1", "cyclic:4", "cyclic:6", "sym:3", "sym:4", "sym:5",
                                  "product:cyclic(2),cyclic(2)", "product:sym(3),cyclic(3)",
                                  "product:cyclic(4),cyclic(3)"])
def test_orthogonality(spec):
    g = catalog.from_spec(spec)
    t = groups.character_table(g)
    n = len(g)
    k = len(t.classes)
    assert len(t.irreducibles) == k
    assert sum(d * d for d in t.degrees) == n
    for a in range(k):
        for b in range(k):
            ip = groups.inner_product(t.values(a), t.values(b), g)
            assert ip == (1 if a == b else 0)
    # column orthogonality gives the centralizer orders
    for c in range(k):
        for d in range(k):
            s = sum((t.irreducibles[r][c] * t.irreducibles[r][d].conjugate() for r in range(k)), E(1) - 1)
            assert s == (t.classes[c].centralizer_size if c == d else 0)
    for c in t.classes:
        assert c.size * c.centralizer_size == n


def test_inner_product_regular_character():
    g = catalog.cyclic(2)
    t = groups.character_table(g)
    assert groups.inner_product(t.values(1), [2, 0], g) == 1


def test_symmetric_character_examples():
    assert groups.symmetric_character((2, 1), (1, 1, 1)) == 2
    for mu in groups.partitions(4):
        assert groups.symmetric_character((4,), mu) == 1
        assert groups.symmetric_character((1, 1, 1, 1), mu) == (-1) ** (4 - len(mu.parts))
    with pytest.raises(InputError):
        groups.symmetric_character((2,), (1, 1, 1))


def test_hook_examples():
    assert groups.hook_f((2, 1)) == 2
    assert groups.hook_f((5,)) == 1
    assert groups.hook_f((1, 1, 1)) == 1


def brute_force_tableaux(shape):
    """Count standard Young tableaux by removing corners."""
    shape = tuple(p for p in shape if p)
    if not shape:
        return 1
    total = 0
    for i, p in enumerate(shape):
        if i + 1 == len(shape) or shape[i + 1] < p:
            total += brute_force_tableaux(shape[:i] + (p - 1,) + shape[i + 1:])
    return total


@pytest.mark.parametrize("r", range(1, 8))
def test_hook_matches_tableaux_and_characters(r):
    for lam in groups.partitions(r):
        f = groups.hook_f(lam)
        assert f == brute_force_tableaux(lam.parts)
        assert f == groups.symmetric_character(lam, (1,) * r)


def test_stirling():
    assert [groups.stirling2(p, 1) for p in range(1, 6)] == [1] * 5
    assert groups.stirling2(4, 2) == 7
    assert groups.stirling2(3, 3) == 1
    assert groups.stirling2(0, 0) == 1


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 12), st.integers(1, 12))
def test_stirling_recurrence(p, r):
    assert groups.stirling2(p, r) == r * groups.stirling2(p - 1, r) + groups.stirling2(p - 1, r - 1)


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
def test_symmetric_character_matches_dixon(r):
    s = catalog.symmetric(r)
    t = groups.character_table(s)
    e = s.identity
    types = [groups.cycle_type_in(s, e, s.embedding[c.representative] if s.embedding else c.representative)
             for c in t.classes]
    rows = groups.match_symmetric_rows(t, types)
    assert sorted(rows.values()) == list(range(len(t)))
    for lam, row in rows.items():
        for c, mu in enumerate(types):
            assert t.irreducibles[row][c] == groups.symmetric_character(lam, mu)


def test_sign_character():
    s = catalog.rook(2)
    e = s.index_of[pp.PartialPerm.identity(2)]
    swap = s.index_of[pp.PartialPerm.from_images([2, 1])]
    assert groups.sign_character(s, e, e) == 1
    assert groups.sign_character(s, e, swap) == -1
    s3 = catalog.rook(3)
    e3 = s3.index_of[pp.PartialPerm.identity(3)]
    cyc = s3.index_of[pp.PartialPerm.from_images([2, 3, 1])]
    assert groups.sign_character(s3, e3, cyc) == 1
    with pytest.raises(InputError):
        groups.sign_character(s, e, s.index_of[pp.PartialPerm.identity(2, {1})])


def test_partition_type():
    p = Partition.of([1, 3, 1])
    assert p.parts == (3, 1, 1) and p.weight == 5
    assert p.multiplicities() == {1: 2, 3: 1}
    assert [q.parts for q in groups.partitions(3)] == [(3,), (2, 1), (1, 1, 1)]
