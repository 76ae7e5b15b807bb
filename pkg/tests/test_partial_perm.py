import random

import pytest
from hypothesis import given, settings, strategies as st

from semichar import catalog
from semichar import partial_perm as pp
from semichar.errors import InputError

SIGMA = pp.PartialPerm.from_images([None, 3, None, 1])


def test_sigma_basics():
    assert str(SIGMA) == "[-,3,-,1]"
    assert SIGMA.domain() == {2, 4}
    assert SIGMA.range() == {1, 3}
    assert pp.rank(SIGMA) == 2
    assert pp.fixed_points(SIGMA) == frozenset()


def test_sigma_squared_is_empty():
    assert pp.compose(SIGMA, SIGMA) == pp.PartialPerm.zero(4)


def test_inverse_of_sigma():
    assert pp.inverse(SIGMA).images() == [4, None, 2, None]


def test_compose_with_identity_and_inverse():
    ident = pp.PartialPerm.identity(4)
    assert pp.compose(SIGMA, ident) == SIGMA
    assert pp.compose(SIGMA, pp.inverse(SIGMA)) == pp.PartialPerm.identity(4, SIGMA.domain())
    x = pp.PartialPerm.identity(4, {1, 3})
    assert pp.inverse(x) == x
    assert pp.inverse(pp.inverse(SIGMA)) == SIGMA


def test_ranks():
    assert pp.rank(pp.PartialPerm.zero(3)) == 0
    assert pp.rank(pp.PartialPerm.identity(3)) == 3


def test_degree_mismatch():
    with pytest.raises(InputError):
        pp.compose(SIGMA, pp.PartialPerm.identity(3))
    with pytest.raises(InputError):
        pp.leq(SIGMA, pp.PartialPerm.identity(3))


def test_injectivity_enforced():
    with pytest.raises(InputError):
        pp.PartialPerm.from_images([1, 1])


def test_leq_examples():
    r = pp.compose(pp.PartialPerm.identity(4, {2}), SIGMA)
    assert r.images() == [None, 3, None, None]
    assert pp.leq(r, SIGMA)
    assert pp.leq(SIGMA, SIGMA)
    one = pp.PartialPerm.identity(2, {1})
    assert pp.leq(one, pp.PartialPerm.identity(2, {1, 2}))
    assert not pp.leq(one, pp.PartialPerm.identity(2, {2}))


def test_fixed_points():
    assert pp.fixed_points(pp.PartialPerm.identity(3)) == {1, 2, 3}
    assert pp.fixed_points(pp.PartialPerm.identity(3, {2})) == {2}


def test_rook_matrix():
    assert pp.rook_matrix(pp.PartialPerm.identity(2)) == [[1, 0], [0, 1]]
    assert pp.rook_matrix(pp.PartialPerm.zero(2)) == [[0, 0], [0, 0]]
    m = pp.rook_matrix(SIGMA)
    ones = {(i + 1, j + 1) for i in range(4) for j in range(4) if m[i][j]}
    assert ones == {(2, 3), (4, 1)}


def test_json_round_trip():
    assert pp.PartialPerm.from_json(SIGMA.to_json()) == SIGMA
    assert SIGMA.to_json() == "[null, 3, null, 1]"
    with pytest.raises(InputError):
        pp.PartialPerm.from_json('["a"]')


Z2 = catalog.cyclic(2)


def test_wreath_examples():
    ident = pp.PartialPerm.identity(1)
    x = pp.WreathElement.make(ident, [1], Z2)
    assert pp.wreath_compose(x, x).labels == (0,)
    e = pp.WreathElement.make(pp.PartialPerm.zero(1), [1], Z2)
    assert pp.wreath_compose(e, x).carrier == pp.PartialPerm.zero(1)
    # group multiplication at a fixed index
    g = pp.WreathElement.make(pp.PartialPerm.identity(2), [1, 0], Z2)
    h = pp.WreathElement.make(pp.PartialPerm.identity(2), [1, 1], Z2)
    assert pp.wreath_compose(g, h).labels == (0, 1)


def test_wreath_labels_normalized():
    a = pp.WreathElement.make(pp.PartialPerm.from_images([None, 2]), [1, 1], Z2)
    b = pp.WreathElement.make(pp.PartialPerm.from_images([None, 2]), [0, 1], Z2)
    assert a == b


@st.composite
def perms(draw, n=None):
    n = n or draw(st.integers(1, 5))
    seed = draw(st.integers(0, 10**9))
    rng = random.Random(seed)
    k = rng.randint(0, n)
    img = [None] * n
    for i, v in zip(rng.sample(range(n), k), rng.sample(range(n), k)):
        img[i] = v
    return pp.PartialPerm(tuple(img))


@st.composite
def perm_pair(draw):
    n = draw(st.integers(1, 5))
    return draw(perms(n)), draw(perms(n))


@settings(max_examples=200, deadline=None)
@given(perm_pair())
def test_involution_laws(ab):
    a, b = ab
    ai = pp.inverse(a)
    assert a * ai * a == a
    assert ai * a * ai == ai
    assert pp.inverse(a * b) == pp.inverse(b) * ai


@settings(max_examples=200, deadline=None)
@given(perm_pair())
def test_rook_matrix_multiplicative(ab):
    a, b = ab
    ma, mb = pp.rook_matrix(a), pp.rook_matrix(b)
    n = a.degree
    prod = [[sum(ma[i][k] * mb[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    assert pp.rook_matrix(a * b) == prod


@settings(max_examples=200, deadline=None)
@given(perm_pair())
def test_leq_respects_inverse(ab):
    a, b = ab
    r = pp.PartialPerm.identity(a.degree, a.domain()) * b
    assert pp.leq(r, b)
    assert pp.leq(pp.inverse(r), pp.inverse(b))


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5), st.data())
def test_idempotents_meet(n, data):
    x = frozenset(data.draw(st.sets(st.integers(1, n))))
    y = frozenset(data.draw(st.sets(st.integers(1, n))))
    ex, ey = pp.PartialPerm.identity(n, x), pp.PartialPerm.identity(n, y)
    assert ex * ey == pp.PartialPerm.identity(n, x & y)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_wreath_embedding_is_homomorphism(data):
    n = data.draw(st.integers(1, 3))
    g = data.draw(st.sampled_from([catalog.cyclic(2), catalog.cyclic(3), catalog.symmetric(3)]))
    a, b = data.draw(perms(n)), data.draw(perms(n))
    la = data.draw(st.lists(st.integers(0, len(g) - 1), min_size=n, max_size=n))
    lb = data.draw(st.lists(st.integers(0, len(g) - 1), min_size=n, max_size=n))
    x = pp.WreathElement.make(a, la, g)
    y = pp.WreathElement.make(b, lb, g)
    assert pp.wreath_compose(x, y).embed() == x.embed() * y.embed()
