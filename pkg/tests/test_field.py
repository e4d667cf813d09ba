import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lcdcodes.field import FieldError, FqVector, dot, fq_arith, pack, unpack, valid_word, weight


def vectors(q, min_size=0, max_size=64):
    return st.lists(st.integers(0, q - 1), min_size=min_size, max_size=max_size)


fields = st.sampled_from([2, 3])


@st.composite
def vector_pair(draw):
    q = draw(fields)
    n = draw(st.integers(0, 64))
    u = draw(vectors(q, n, n))
    v = draw(vectors(q, n, n))
    return q, u, v


# -- scalar examples --------------------------------------------------------

def test_scalar_examples():
    assert fq_arith(3, 2, 2, "mul") == 1
    assert fq_arith(3, 2, kind="inv") == 2
    assert fq_arith(2, 1, 1, "add") == 0


def test_inverse_of_zero():
    for q in (2, 3):
        with pytest.raises(ZeroDivisionError):
            fq_arith(q, 0, kind="inv")


def test_bad_inputs():
    with pytest.raises(FieldError):
        fq_arith(5, 1, 1)
    with pytest.raises(FieldError):
        fq_arith(3, 3, 1)
    with pytest.raises(FieldError):
        fq_arith(2, 1, 1, "pow")


@pytest.mark.parametrize("q", [2, 3])
def test_scalar_axioms_exhaustive(q):
    for a in range(q):
        assert fq_arith(q, a, fq_arith(q, a, kind="neg")) == 0
        if a:
            assert fq_arith(q, a, fq_arith(q, a, kind="inv"), "mul") == 1
        for b in range(q):
            assert fq_arith(q, a, b, "sub") == fq_arith(q, a, fq_arith(q, b, kind="neg"))


# -- vector examples --------------------------------------------------------

def test_dot_examples():
    assert dot(FqVector.from_digits(2, [1, 1]), FqVector.from_digits(2, [1, 1])) == 0
    assert dot(FqVector.from_digits(3, [1, 2, 0]), FqVector.from_digits(3, [2, 2, 1])) == 0
    ones = FqVector.from_digits(3, [1, 1, 1, 1])
    assert dot(ones, ones) == 1


def test_weight_examples():
    assert weight(FqVector.from_digits(3, [2, 0, 1, 2])) == 3
    assert weight(FqVector.zero(2, 5)) == 0
    assert weight(FqVector.from_digits(2, [1] * 7)) == 7


def test_dot_shape_mismatch():
    with pytest.raises(FieldError):
        dot(FqVector.zero(2, 3), FqVector.zero(2, 4))
    with pytest.raises(FieldError):
        dot(FqVector.zero(2, 3), FqVector.zero(3, 3))


def test_reserved_pattern_rejected():
    assert not valid_word(3, 0b11, 1)
    with pytest.raises(FieldError):
        FqVector(3, 1, 0b11)


def test_string_round_trip():
    v = FqVector.from_string(3, "2001")
    assert v.digits() == [2, 0, 0, 1]
    assert str(v) == "2001"
    with pytest.raises(FieldError):
        FqVector.from_string(3, "20x1")
    with pytest.raises(FieldError):
        FqVector.from_string(2, "0120")


@pytest.mark.parametrize("q", [2, 3])
def test_dot_bilinear_exhaustive(q):
    n = 3
    vecs = [FqVector.from_digits(q, d) for d in itertools.product(range(q), repeat=n)]
    for u in vecs:
        for v in vecs:
            assert dot(u, v) == dot(v, u)
            for c in range(q):
                assert dot(u.scale(c), v) == fq_arith(q, c, dot(u, v), "mul")
        for v, w in itertools.product(vecs[:9], repeat=2):
            assert dot(u, v + w) == (dot(u, v) + dot(u, w)) % q


# -- properties: packed operations against entrywise arithmetic -------------

@given(vector_pair())
def test_packed_agrees_with_naive(data):
    q, a, b = data
    u, v = FqVector.from_digits(q, a), FqVector.from_digits(q, b)
    assert (u + v).digits() == [(x + y) % q for x, y in zip(a, b)]
    assert (u - v).digits() == [(x - y) % q for x, y in zip(a, b)]
    assert (-u).digits() == [(-x) % q for x in a]
    assert dot(u, v) == sum(x * y for x, y in zip(a, b)) % q
    assert weight(u) == sum(1 for x in a if x)
    for c in range(q):
        assert u.scale(c).digits() == [(c * x) % q for x in a]


@given(fields.flatmap(lambda q: st.tuples(st.just(q), vectors(q))))
def test_weight_zero_iff_zero_vector(data):
    q, a = data
    u = FqVector.from_digits(q, a)
    assert (weight(u) == 0) == all(x == 0 for x in a)
    assert (u + (-u)).is_zero()


@given(fields.flatmap(lambda q: st.tuples(st.just(q), vectors(q))))
def test_pack_round_trip(data):
    q, a = data
    w = pack(q, a)
    assert valid_word(q, w, len(a))
    assert unpack(q, w, len(a)) == a
