from __future__ import annotations

from fractions import Fraction

import pytest

from nsmacdonald.cartan_weyl import CartanType, RootDatum, parse_weight, root_datum
from nsmacdonald.errors import ParseError

from conftest import SMALL_TYPES
from oracles import group_closure, matvec, subword_products, word_matrix


def test_parse_cartan_type():
    assert CartanType.parse("a2") == CartanType("A", 2)
    assert str(CartanType.parse(" G_2 ")) == "G2"
    for bad in ["Z3", "E5", "D3", "B1", "G3", "F5", "A0", "", "A"]:
        with pytest.raises(ParseError):
            CartanType.parse(bad)


@pytest.mark.parametrize("name,count", [
    # standard counts: n(n+1)/2, n^2, n(n-1), and the exceptional values
    ("A1", 1), ("A2", 3), ("A3", 6), ("B2", 4), ("B3", 9), ("C3", 9),
    ("D4", 12), ("G2", 6), ("F4", 24), ("E6", 36), ("E7", 63), ("E8", 120),
])
def test_positive_root_counts(name, count):
    assert len(RootDatum(name).positive_roots) == count


def test_a2_small_facts():
    R = root_datum("A2")
    # s2 varpi_2 = varpi_2 - alpha_2 = varpi_1 - varpi_2 [DERIVED: alpha_2 = (-1, 2)]
    assert R.act(R.parse_word("s2"), (0, 1)) == (1, -1)
    # and s1 then fixes nothing: s1 (varpi_1 - varpi_2) = -varpi_1
    assert R.act(R.parse_word("s1 s2"), (0, 1)) == (-1, 0)
    theta = (1, 1)
    assert R.pair(theta, R.rho) == 2
    assert len(R.minimal_reps({2})) == 3


@pytest.mark.parametrize("name", SMALL_TYPES + ["D4", "F4"])
def test_coroots_pair_to_two(name):
    R = root_datum(name)
    for b in R.positive_roots:
        assert R.pair(b, R.root_weight(b)) == 2
        assert R.inner(b, b) > 0


@pytest.mark.parametrize("name", SMALL_TYPES)
def test_group_matches_matrix_closure(name):
    R = root_datum(name)
    gens, length = group_closure(R.cartan)
    elts = R.elements()
    assert len(elts) == len(length)
    # lengths agree, and the length is the number of inversions
    for w in elts:
        m = word_matrix(gens, w.word)
        assert length[m] == w.length
        assert matvec(m, R.rho) == w.key
        inv = sum(1 for b in R.positive_roots if any(c < 0 for c in R.act_root(w, b)))
        assert inv == w.length


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "B3", "G2"])
def test_bruhat_matches_subword_property(name):
    R = root_datum(name)
    gens, _ = group_closure(R.cartan)
    mats = {w: word_matrix(gens, w.word) for w in R.elements()}
    for w in R.elements():
        below = subword_products(gens, w.word)
        for u in R.elements():
            assert R.bruhat_leq(u, w) == (mats[u] in below)


@pytest.mark.parametrize("name", SMALL_TYPES)
def test_longest_and_omega(name):
    R = root_datum(name)
    w0 = R.longest
    assert w0.length == len(R.positive_roots)
    for i in range(1, R.rank + 1):
        k = R.omega(i)
        img = R.act_root(w0, R.simple_root(i))
        assert img == tuple(-c for c in R.simple_root(k))
        assert R.omega(k) == i
    for w in R.elements():
        assert R.omega_elt(w) == R.mul(R.mul(w0, w), w0)


def test_omega_types():
    assert [root_datum("A3").omega(i) for i in (1, 2, 3)] == [3, 2, 1]
    assert [root_datum("B3").omega(i) for i in (1, 2, 3)] == [1, 2, 3]
    assert [RootDatum("E6").omega(i) for i in range(1, 7)] == [6, 2, 5, 4, 3, 1]


@pytest.mark.parametrize("name", ["A3", "B3", "G2"])
def test_min_coset_reps(name):
    R = root_datum(name)
    W = R.elements()
    for J in [set(), {1}, {2}, set(range(1, R.rank + 1)), {1, R.rank}]:
        reps = R.minimal_reps(J)
        WJ = [w for w in W if all(min(R.act_root(w, R.simple_root(j))) >= 0 for j in J)]
        assert set(reps) == set(WJ)
        # every coset has exactly one representative, which is the shortest
        for w in W:
            u = R.min_coset_rep(w, J)
            assert u in reps
            coset = [v for v in W if R.min_coset_rep(v, J) == u]
            assert min(coset, key=lambda v: v.length) == u
        wJ = R.longest_in(J)
        assert wJ.length == len(R.positive_roots_in(J))
        assert R.min_coset_rep(R.longest, J) == R.mul(R.longest, wJ)


def test_group_operations():
    R = root_datum("B3")
    W = R.elements()
    e = R.identity
    for u in W[::5]:
        assert R.mul(u, R.inv(u)) == e
        for v in W[::7]:
            assert R.mul(u, v).key == R.act(u, R.act(v, R.rho))
    for b in R.positive_roots:
        r = R.reflection(b)
        assert R.mul(r, r) == e
        assert R.act(r, R.root_weight(b)) == tuple(-c for c in R.root_weight(b))


def test_parse_word_forms():
    R = root_datum("A2")
    assert R.parse_word("e") == R.identity
    assert R.parse_word("w0") == R.longest
    assert R.parse_word("s1 s2 s1") == R.parse_word("s2s1s2") == R.parse_word("1 2 1") == R.longest
    assert str(R.parse_word("s2 s1 s1")) == "s2"
    for bad in ["s3", "x1", "s1 t2"]:
        with pytest.raises(ParseError):
            R.parse_word(bad)


def test_parse_and_check_weight():
    R = root_datum("A2")
    assert parse_weight("1,0", 2) == (1, 0)
    assert parse_weight("[2, 3]") == (2, 3)
    for bad in ["1", "a,b", "1,2,3"]:
        with pytest.raises(ParseError):
            parse_weight(bad, 2)
    with pytest.raises(ParseError):
        R.check_weight((1, -1))


def test_affine_reflection():
    R = root_datum("A1")
    p = (Fraction(1, 2),)
    assert R.reflect_by((1,), p, level=0) == (Fraction(-1, 2),)
    assert R.reflect_by((1,), p, level=-1) == (Fraction(-5, 2),)
