import itertools
import math
import random

import pytest
from conftest import AUT6, M6, M8, M12
from hypothesis import given
from hypothesis import strategies as st

import oracles
from lcdcodes.canon import (
    ColoredGraph,
    are_equivalent,
    automorphism_order,
    build_graph,
    canonical_key,
    canonical_labeling,
)
from lcdcodes.code import LinearCode, from_standard_form
from lcdcodes.field import FieldError
from lcdcodes.matrix import FqMatrix


def random_code(rng, q, n, k):
    rows = [[rng.randrange(q) for _ in range(n)] for _ in range(k)]
    return LinearCode(FqMatrix.from_lists(q, rows, n))


def random_monomial(rng, q, n):
    perm = list(range(n))
    rng.shuffle(perm)
    scales = [1 if q == 2 else rng.choice((1, 2)) for _ in range(n)]
    return perm, scales


def table1():
    return [from_standard_form(2, 3, FqMatrix.from_strings(2, m)) for m in M6]


# -- graph construction -----------------------------------------------------

def test_graph_sizes():
    c8 = from_standard_form(3, 4, FqMatrix.from_strings(3, M8))
    assert build_graph(c8).n_vertices == 81 + 16
    g = build_graph(LinearCode.zero(2, 5))
    assert g.n_vertices == 6 and g.arcs == ()
    c = LinearCode.from_rows(3, ["1201", "0112"])
    assert build_graph(c).n_vertices == 3 ** 2 + 2 * 4


def test_graph_validation():
    with pytest.raises(ValueError):
        ColoredGraph(2, ((0, 2),), (0, 0))
    with pytest.raises(ValueError):
        ColoredGraph(2, (), (0,))


# -- the canonical labeler on plain digraphs --------------------------------

def _brute_graph(n, arcs, colors):
    arcset = set(arcs)
    autos = 0
    for p in itertools.permutations(range(n)):
        if all(colors[p[v]] == colors[v] for v in range(n)) and {(p[u], p[v]) for u, v in arcs} == arcset:
            autos += 1
    return autos


@st.composite
def small_digraphs(draw):
    n = draw(st.integers(1, 7))
    arcs = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda a: a[0] != a[1]),
                        max_size=12))
    colors = draw(st.lists(st.integers(0, 2), min_size=n, max_size=n))
    return n, tuple(sorted(arcs)), tuple(colors)


@given(small_digraphs(), st.randoms(use_true_random=False))
def test_labeling_against_brute_force(graph, rnd):
    n, arcs, colors = graph
    res = canonical_labeling(ColoredGraph(n, arcs, colors))
    assert res.group_order == _brute_graph(n, arcs, colors)
    # relabel at random: same certificate
    p = list(range(n))
    rnd.shuffle(p)
    arcs2 = tuple((p[u], p[v]) for u, v in arcs)
    colors2 = [0] * n
    for v in range(n):
        colors2[p[v]] = colors[v]
    assert canonical_labeling(ColoredGraph(n, arcs2, tuple(colors2))).certificate == res.certificate


@given(small_digraphs(), small_digraphs())
def test_certificate_separates_non_isomorphic(g1, g2):
    n1, a1, c1 = g1
    n2, a2, c2 = g2
    same = canonical_labeling(ColoredGraph(*g1)).certificate == canonical_labeling(ColoredGraph(*g2)).certificate
    iso = n1 == n2 and sorted(c1) == sorted(c2) and len(a1) == len(a2) and any(
        all(c2[p[v]] == c1[v] for v in range(n1)) and {(p[u], p[v]) for u, v in a1} == set(a2)
        for p in itertools.permutations(range(n1)))
    assert same == iso


# -- codes: paper examples --------------------------------------------------

def test_table1_groups_and_keys():
    cs = table1()
    assert [automorphism_order(c).order for c in cs] == AUT6
    keys = {canonical_key(c) for c in cs}
    assert len(keys) == 8
    assert not are_equivalent(cs[0], cs[1])
    assert not are_equivalent(cs[3], cs[4])


def test_named_codes():
    b12 = from_standard_form(2, 6, FqMatrix.from_strings(2, M12))
    assert (b12.min_weight, automorphism_order(b12).order) == (3, 1)
    c8 = from_standard_form(3, 4, FqMatrix.from_strings(3, M8))
    assert (c8.min_weight, automorphism_order(c8).order) == (3, 2)


def test_degenerate_codes():
    for q in (2, 3):
        for n in (1, 4):
            group = math.factorial(n) * (q - 1) ** n
            assert automorphism_order(LinearCode.zero(q, n)).order == group
            assert automorphism_order(LinearCode.full(q, n)).order == group


def test_equivalence_basics():
    rng = random.Random(3)
    c = random_code(rng, 3, 6, 3)
    assert are_equivalent(c, c)
    assert are_equivalent(c, c.transform(*random_monomial(rng, 3, 6)))
    assert not are_equivalent(c, LinearCode.full(3, 6))
    with pytest.raises(FieldError):
        are_equivalent(c, random_code(rng, 2, 6, 3))


def test_key_header_separates_parameters():
    a = LinearCode.from_rows(2, ["1100"])
    b = LinearCode.from_rows(2, ["11000"])
    assert canonical_key(a) != canonical_key(b)
    assert not are_equivalent(a, b)


# -- codes: invariance and oracles ------------------------------------------

def test_key_invariance_random_monomials():
    rng = random.Random(20240611)
    checked = 0
    while checked < 1000:
        q = rng.choice((2, 3))
        n = rng.randint(2, 8)
        k = rng.randint(1, min(4, n))
        c = random_code(rng, q, n, k)
        key, aut = canonical_key(c), automorphism_order(c).order
        for _ in range(5):
            d = c.transform(*random_monomial(rng, q, n))
            assert canonical_key(d) == key
            assert automorphism_order(d).order == aut
            checked += 1


@pytest.mark.parametrize("q", [2, 3])
def test_equivalence_and_groups_against_brute_force(q):
    rng = random.Random(q)
    for _ in range(100):
        n = rng.randint(1, 5)
        k = rng.randint(1, n)
        c = random_code(rng, q, n, k)
        if rng.random() < 0.5:
            d = c.transform(*random_monomial(rng, q, n))
        else:
            d = random_code(rng, q, n, k)
        rc, rd = c.G.to_lists(), d.G.to_lists()
        assert are_equivalent(c, d) == oracles.equivalent(q, rc, rd, n)
        assert automorphism_order(c).order == oracles.aut_order(q, rc, n)


@given(st.sampled_from([2, 3]), st.integers(1, 7), st.data())
def test_group_order_divisibility(q, n, data):
    k = data.draw(st.integers(0, n))
    rows = data.draw(st.lists(st.lists(st.integers(0, q - 1), min_size=n, max_size=n), min_size=k, max_size=k))
    c = LinearCode(FqMatrix.from_lists(q, rows, n))
    order = automorphism_order(c).order
    assert (math.factorial(n) * (q - 1) ** n) % order == 0
    if q == 3:
        assert order % 2 == 0
    # equivalent codes share weight enumerators (and their duals do too)
    d = c.transform(*random_monomial(random.Random(order), q, n))
    assert d.weight_enumerator == c.weight_enumerator
    assert automorphism_order(c.dual()).order == order
