import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from semichar.errors import InputError
from semichar.poset import (
    antichain,
    boolean_lattice,
    build_poset,
    chain,
    down_sum,
    mobius,
    mobius_invert,
    product_poset,
)


def test_two_chain():
    p = build_poset("ab", {("a", "b")})
    assert p.leq_pairs() == {("a", "a"), ("b", "b"), ("a", "b")}
    assert mobius(p)("a", "b") == -1


def test_antichain_only_reflexive():
    p = build_poset("ab", set())
    assert p.leq_pairs() == {("a", "a"), ("b", "b")}


def test_cycle_rejected():
    with pytest.raises(InputError, match="cycle"):
        build_poset("ab", {("a", "b"), ("b", "a")})


def test_transitive_closure():
    p = build_poset("abc", {("a", "b"), ("b", "c")})
    assert p.leq("a", "c")
    assert mobius(p)("a", "c") == 0


def test_boolean_mobius_examples():
    b3 = boolean_lattice(3)
    assert mobius(b3)(frozenset(), frozenset({1, 2, 3})) == -1
    b2 = boolean_lattice(2)
    assert mobius(b2)(frozenset(), frozenset({1, 2})) == 1


@pytest.mark.parametrize("n", range(7))
def test_boolean_mobius_all_pairs(n):
    mu = mobius(boolean_lattice(n))
    for (y, z), v in mu.items():
        assert v == (-1) ** (len(z) - len(y))


def test_mobius_invert_chain():
    p = build_poset("ab", {("a", "b")})
    assert mobius_invert({"a": 1, "b": 1}, p) == {"a": 1, "b": 0}


def test_mobius_invert_boolean():
    p = boolean_lattice(2)
    f = mobius_invert({x: 2 ** len(x) for x in p.elements}, p)
    assert set(f.values()) == {1}


def test_product_of_chains():
    p = product_poset(chain(2), chain(2))
    assert mobius(p)((0, 0), (1, 1)) == 1


def test_product_with_point():
    p = boolean_lattice(2)
    q = product_poset(p, antichain(["*"]))
    for (x, y), v in mobius(q).items():
        assert v == mobius(p)(x[0], y[0])


def test_b1_times_b2_is_b3():
    q = product_poset(boolean_lattice(1), boolean_lattice(2))
    iso = {(a, b): a | frozenset(i + 1 for i in b) for a, b in q.elements}
    mu3 = mobius(boolean_lattice(3))
    for (x, y), v in mobius(q).items():
        assert v == mu3(iso[x], iso[y])


def test_isomorphic_intervals_same_mobius():
    b4 = boolean_lattice(4)
    mu = mobius(b4)
    by_size = {}
    for (x, y), v in mu.items():
        by_size.setdefault(len(y) - len(x), set()).add(v)
    assert all(len(vals) == 1 for vals in by_size.values())


@st.composite
def random_posets(draw):
    n = draw(st.integers(1, 8))
    # a random order compatible with 0 < 1 < ... < n-1
    pairs = {(i, j) for i, j in combinations(range(n), 2) if draw(st.booleans())}
    return build_poset(range(n), pairs)


@settings(max_examples=60, deadline=None)
@given(random_posets())
def test_convolution_identity(p):
    mu = mobius(p)
    for x in p.elements:
        for z in p.elements:
            if p.leq(x, z):
                total = sum(mu(y, z) for y in p.interval(x, z))
                assert total == (1 if x == z else 0)


@settings(max_examples=60, deadline=None)
@given(random_posets(), st.data())
def test_inversion_round_trip(p, data):
    f = {x: data.draw(st.integers(-20, 20)) for x in p.elements}
    assert mobius_invert(down_sum(f, p), p) == f


@settings(max_examples=30, deadline=None)
@given(random_posets(), random_posets())
def test_product_mobius_factors(p1, p2):
    q = product_poset(p1, p2)
    mu, m1, m2 = mobius(q), mobius(p1), mobius(p2)
    for (x, y), v in mu.items():
        assert v == m1(x[0], y[0]) * m2(x[1], y[1])


def test_mobius_threaded_reads():
    from concurrent.futures import ThreadPoolExecutor

    p = boolean_lattice(6)
    mu = mobius(p)
    top = frozenset(range(1, 7))
    with ThreadPoolExecutor(4) as ex:
        vals = list(ex.map(lambda x: mu(x, top), p.elements))
    assert vals == [(-1) ** (6 - len(x)) for x in p.elements]
