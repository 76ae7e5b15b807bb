import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from semichar import catalog
from semichar import random_walk as rw
from semichar.errors import InputError, PreconditionError


def lz():
    return rw.adjoin_identity_if_needed(catalog.left_zero(2))  # a, b, 1


def random_measure(rng, n, support=None):
    support = list(range(n)) if support is None else support
    raw = [rng.randint(0, 5) for _ in support]
    if not any(raw):
        raw[0] = 1
    tot = sum(raw)
    w = [F(0)] * n
    for k, r in zip(support, raw):
        w[k] = F(r, tot)
    return rw.ProbabilityMeasure(w)


def test_adjoin_identity():
    r = catalog.rook(2)
    assert rw.adjoin_identity_if_needed(r) is r
    m = lz()
    assert len(m) == 3 and m.identity == 2


def test_measure_validation():
    with pytest.raises(InputError):
        rw.ProbabilityMeasure([0.5, 0.5])
    with pytest.raises(InputError):
        rw.ProbabilityMeasure(["0.5", "1/2"])
    with pytest.raises(InputError):
        rw.ProbabilityMeasure(["3/2", "-1/2"])
    with pytest.raises(InputError):
        rw.ProbabilityMeasure(["1/2", "1/3"])
    assert rw.ProbabilityMeasure(["1/2", "1/2"]).weights == (F(1, 2), F(1, 2))
    pi = rw.ProbabilityMeasure.from_mapping(3, {"1": "1/4", "3": "3/4"})
    assert pi.weights == (F(1, 4), 0, F(3, 4))
    with pytest.raises(InputError):
        rw.ProbabilityMeasure.from_mapping(3, {"4": "1"})


def test_left_zero_transition_matrix():
    m = lz()
    pa, pb, p1 = F(1, 6), F(1, 3), F(1, 2)
    M = rw.transition_matrix(m, rw.ProbabilityMeasure([pa, pb, p1]), [0, 1])
    assert M == [[p1 + pa, pb], [pa, p1 + pb]]


def test_point_mass_identity_gives_identity_matrix():
    m = lz()
    assert rw.transition_matrix(m, rw.ProbabilityMeasure([0, 0, 1]), [0, 1]) == [[1, 0], [0, 1]]


def test_cyclic2_uniform():
    s = catalog.cyclic(2)
    M = rw.transition_matrix(s, rw.ProbabilityMeasure.uniform(2), [0, 1])
    assert M == [[F(1, 2), F(1, 2)], [F(1, 2), F(1, 2)]]
    rep = rw.walk_spectrum(s, rw.ProbabilityMeasure.uniform(2))
    assert sorted(complex(v).real for v in rep.eigenvalues()) == [0, 1]
    assert rw.numeric_cross_check(rep).ok


def test_invalid_left_ideal():
    m = lz()
    with pytest.raises(InputError):
        rw.transition_matrix(m, rw.ProbabilityMeasure.uniform(3), [0])
    with pytest.raises(InputError):
        rw.transition_matrix(m, rw.ProbabilityMeasure.uniform(3), [0, 1, 2])


def test_cyclic2_spectrum():
    s = catalog.cyclic(2)
    p1, pg = F(2, 7), F(5, 7)
    rep = rw.walk_spectrum(s, rw.ProbabilityMeasure([p1, pg]))
    vals = sorted((e.eigenvalue.to_rational(), e.multiplicity) for e in rep.entries)
    assert vals == sorted([(F(1), 1), (p1 - pg, 1)])


def test_left_zero_spectrum():
    m = lz()
    pa, pb, p1 = F(1, 5), F(1, 5), F(3, 5)
    rep = rw.walk_spectrum(m, rw.ProbabilityMeasure([pa, pb, p1]))
    assert rep.ideal == [0, 1]
    by_top = {}
    for e in rep.entries:
        by_top[e.eigenvalue.to_rational()] = e.multiplicity
    assert by_top == {p1: 1, F(1): 1}
    assert rw.numeric_cross_check(rep).ok
    assert rw.check_charpoly(rep)


def test_left_zero_without_identity_is_extended():
    s = catalog.left_zero(2)
    rep = rw.walk_spectrum(s, rw.ProbabilityMeasure(["1/3", "2/3"]))
    assert len(rep.semigroup) == 3
    # p_1 = 0 on the new identity
    assert sorted(e.eigenvalue.to_rational() for e in rep.entries) == [0, 1]


def test_boolean2_degenerate():
    s = catalog.boolean_lattice(2)
    rep = rw.walk_spectrum(s, rw.ProbabilityMeasure(["1/4"] * 4))
    assert rep.ideal_size == 1
    assert [e.multiplicity for e in rep.entries if e.multiplicity] == [1]
    assert rw.numeric_cross_check(rep).ok


def test_not_triangularizable():
    with pytest.raises(PreconditionError):
        rw.walk_spectrum(catalog.symmetric(3), rw.ProbabilityMeasure.uniform(6))


def test_numeric_mismatch_is_reported():
    rep = rw.walk_spectrum(catalog.cyclic(2), rw.ProbabilityMeasure.uniform(2))
    bad = rw.numeric_cross_check(rep, M=[[1, 0], [0, 1]])
    assert not bad.ok and "mismatched" in bad.message


def ideal_spectrum(rep):
    return sorted((str(e.eigenvalue), e.multiplicity) for e in rep.entries)


@pytest.mark.parametrize("spec", ["monoid:rightzero(3)", "product:lrb(2),rightzero(2)", "monoid:product(rightzero(2),cyclic(2))"])
def test_invariant_under_choice_of_ideal(spec):
    s = rw.adjoin_identity_if_needed(catalog.from_spec(spec))
    ideals = rw.minimal_left_ideals(s)
    assert len(ideals) >= 2
    rng = random.Random(3)
    for _ in range(3):
        pi = random_measure(rng, len(s))
        spectra = {tuple(ideal_spectrum(rw.walk_spectrum(s, pi, L))) for L in ideals}
        assert len(spectra) == 1


CASES = [f"cyclic:{n}" for n in range(1, 7)] + ["monoid:leftzero(2)", "monoid:lrb(2)", "boolean:3", "monoid:lrb(3)"]


@pytest.mark.parametrize("spec", CASES)
def test_spectrum_matches_numerics(spec):
    s = rw.adjoin_identity_if_needed(catalog.from_spec(spec))
    rng = random.Random(len(spec))
    for _ in range(4):
        pi = random_measure(rng, len(s))
        rep = rw.walk_spectrum(s, pi)
        assert sum(e.multiplicity for e in rep.entries) == rep.ideal_size
        for row in rep.matrix:
            assert sum(row) == 1
        assert rw.numeric_cross_check(rep).ok
        assert rw.check_charpoly(rep)
        ev = [complex(v) for v in rep.eigenvalues()]
        conj = sorted((round(z.real, 9), round(-z.imag, 9)) for z in ev)
        assert conj == sorted((round(z.real, 9), round(z.imag, 9)) for z in ev)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 9), min_size=4, max_size=4).filter(any))
def test_lrb2_hypothesis(raw):
    s = rw.adjoin_identity_if_needed(catalog.free_lrb(2))
    tot = sum(raw)
    pi = rw.ProbabilityMeasure([F(r, tot) for r in raw] + [F(0)])
    rep = rw.walk_spectrum(s, pi)
    assert sum(e.multiplicity for e in rep.entries) == len(rep.ideal)
    assert rw.check_charpoly(rep)


def test_records_and_polynomial():
    rep = rw.walk_spectrum(catalog.cyclic(3), rw.ProbabilityMeasure(["1/2", "1/4", "1/4"]))
    recs = rep.to_records()
    assert [r["J_class"] for r in recs] == [0, 0, 0]
    assert {r["eigenvalue_float"] for r in recs} >= {"1"}
    assert len(rw.spectrum_polynomial(rep)) == 4
