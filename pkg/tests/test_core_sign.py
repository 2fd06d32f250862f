import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracle
from aomkit.core_sign import (
    GroundSet,
    GroundSetMismatch,
    SignVector,
    all_keys,
    all_vectors,
    compose,
    conforms,
    drop,
    lift,
    reorient,
    restrict,
    separation,
    support,
    vector_sum,
    zero_set,
)
from aomkit.systems import elim_I

G3 = GroundSet("abc")


def sv(text, ground=None):
    ground = ground or GroundSet.of_size(len(text))
    return SignVector.from_string(ground, text)


def vecs(n):
    return st.text(alphabet="+-0", min_size=n, max_size=n)


sizes = st.integers(min_value=1, max_value=6)


@st.composite
def pairs(draw, k=2):
    n = draw(sizes)
    return [draw(vecs(n)) for _ in range(k)]


def test_composition_example():
    assert str(compose(sv("+0-0"), sv("-+0+"))) == "++-+"
    assert str(sv("+0-0").compose(sv("-+0+"))) == "++-+"


def test_basic_operations():
    x, y = sv("+-+0", GroundSet("1234")), sv("-++0", GroundSet("1234"))
    assert str(-x) == "-+-0"
    assert separation(x, y) == ("1", "2")
    assert str(x + y) == "00+0"
    assert support(x) == ("1", "2", "3")
    assert zero_set(x) == ("4",)
    assert str(restrict(x, ["1", "4"])) == "+000"
    assert str(reorient(x, ["1"])) == "--+0"
    assert x["2"] == "-"


def test_from_sets_and_zero():
    assert str(SignVector.from_sets(G3, ["a"], ["c"])) == "+0-"
    assert str(SignVector.zero(G3)) == "000"


def test_conformance():
    assert conforms(sv("+00"), sv("+-0"))
    assert not conforms(sv("-00"), sv("+-0"))


def test_lift_and_drop():
    x = sv("+-0", G3)
    up = lift(x, "-", "g")
    assert str(up) == "+-0-"
    assert up.ground.labels == ("a", "b", "c", "g")
    assert drop(up, "g") == x


def test_invalid_inputs():
    with pytest.raises(ValueError):
        sv("+x0")
    with pytest.raises(ValueError):
        SignVector.from_string(G3, "++")
    with pytest.raises(ValueError):
        GroundSet("aa")
    with pytest.raises(ValueError):
        GroundSet.of_size(25)
    with pytest.raises(ValueError):
        SignVector.from_sets(G3, ["a"], ["a"])
    with pytest.raises(GroundSetMismatch):
        compose(sv("+0"), sv("+00"))


def test_all_vectors_count_and_order():
    got = [str(v) for v in all_vectors(GroundSet.of_size(3))]
    assert len(got) == 27 and len(set(got)) == 27
    assert len(list(all_keys(4))) == 81


@given(pairs(3))
def test_composition_associative(t):
    x, y, z = (sv(s) for s in t)
    assert compose(compose(x, y), z) == compose(x, compose(y, z))


@given(pairs(2))
def test_operations_match_oracle(t):
    a, b = t
    x, y = sv(a), sv(b)
    assert str(compose(x, y)) == oracle.comp(a, b)
    assert str(vector_sum(x, y)) == oracle.vsum(a, b)
    assert {x.ground.index(l) for l in separation(x, y)} == oracle.sep(a, b)
    assert conforms(x, y) == oracle.conforms(a, b)


@given(pairs(2))
def test_involution_and_symmetry(t):
    x, y = (sv(s) for s in t)
    assert -(-x) == x
    assert separation(x, y) == separation(y, x)
    assert vector_sum(x, y) == vector_sum(y, x)
    assert compose(x, x) == x


@given(pairs(2))
def test_sum_conforms_to_composition(t):
    x, y = (sv(s) for s in t)
    assert conforms(vector_sum(x, y), compose(x, y))


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(vecs(n), vecs(n))))
def test_sum_is_minimum_of_elimination_set(t):
    a, b = t
    x, y = sv(a), sv(b)
    if x.support_mask != y.support_mask or x == y or not separation(x, y):
        return
    s = vector_sum(x, y)
    members = list(elim_I(x, y))
    assert s in members
    assert all(conforms(s, m) for m in members)


def test_conformance_is_partial_order():
    for n in range(1, 4):
        vs = list(all_vectors(GroundSet.of_size(n)))
        for x in vs:
            assert conforms(x, x)
        for x, y in itertools.product(vs, repeat=2):
            if conforms(x, y) and conforms(y, x):
                assert x == y
        for x, y, z in itertools.product(vs, repeat=3):
            if conforms(x, y) and conforms(y, z):
                assert conforms(x, z)
