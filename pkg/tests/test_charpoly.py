from __future__ import annotations

from fractions import Fraction

import pytest

from nsmacdonald.cartan_weyl import root_datum
from nsmacdonald.charpoly import (
    apply_word, demazure_character, demazure_D, is_symmetric, macdonald_recursive,
    reduced_words, specialize_q0, specialize_q1, weyl_act,
)
from nsmacdonald.errors import InvariantViolation
from nsmacdonald.graded import GradedChar, from_terms, render_latex, render_text, to_terms
from nsmacdonald.qls import QLS

from conftest import BATTERY
from oracles import schur_in_fundamental


def mono(*wt, q=0, c=1):
    return GradedChar.monomial(tuple(wt), q, c)


def times(a: GradedChar, b: GradedChar) -> GradedChar:
    out = []
    for (w1, k1), c1 in a.items():
        for (w2, k2), c2 in b.items():
            out.append(((tuple(x + y for x, y in zip(w1, w2)), k1 + k2), c1 * c2))
    return GradedChar(out)


def test_a1_operator_on_monomials():
    R = root_datum("A1")
    assert demazure_D(R, 1, mono(2)) == mono(2) + mono(0) + mono(-2)
    assert demazure_D(R, 1, mono(0)) == mono(0)
    assert demazure_D(R, 1, mono(-1)) == GradedChar()
    assert demazure_D(R, 1, mono(-3)) == -(mono(-1) + mono(1))
    assert demazure_D(R, 1, mono(1, q=2)) == mono(1, q=2) + mono(-1, q=2)


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_operator_solves_its_defining_equation(name):
    """(1 - x^{-alpha_i}) D_i f = f - x^{-alpha_i} (s_i f) for every monomial f."""
    R = root_datum(name)
    for i in (1, 2):
        a = R.root_weight(R.simple_root(i))
        one_minus = mono(*([0] * R.rank)) - mono(*(-x for x in a))
        for xi in [(3, -1), (-2, 1), (0, 0), (-1, 4), (1, -3), (-4, -2)]:
            f = mono(*xi)
            lhs = times(one_minus, demazure_D(R, i, f))
            rhs = f - times(mono(*(-x for x in a)), weyl_act(R, R.elt((i,)), f))
            assert lhs == rhs


@pytest.mark.parametrize("name,m", [("A2", 3), ("B2", 4), ("G2", 6)])
def test_idempotent_and_braid(name, m):
    R = root_datum(name)
    f = mono(2, -1) + mono(-1, 1, q=1) + mono(0, -2, c=3)
    for i in (1, 2):
        assert demazure_D(R, i, demazure_D(R, i, f)) == demazure_D(R, i, f)
    w12 = [1 + (k % 2) for k in range(m)]
    w21 = [2 - (k % 2) for k in range(m)]
    assert apply_word(R, w12, f) == apply_word(R, w21, f)


@pytest.mark.parametrize("name,lam", BATTERY)
def test_recursion_is_word_independent(name, lam):
    R = root_datum(name)
    Q = QLS(R, lam)
    for w in R.minimal_reps(Q.J):
        chars = {macdonald_recursive(R, w, lam, word) for word in reduced_words(R, w)}
        assert chars == {Q.gch(w)}


@pytest.mark.parametrize("lam", [(1,), (3,), (1, 0), (1, 1), (2, 1), (0, 1, 0), (1, 0, 1)])
def test_top_demazure_character_is_schur(lam):
    R = root_datum(f"A{len(lam)}")
    ch = demazure_character(R, R.longest, lam)
    assert {wt: c for (wt, k), c in ch.items()} == schur_in_fundamental(lam)


@pytest.mark.parametrize("name,lam", [("B2", (1, 1)), ("C2", (0, 2)), ("G2", (1, 0)), ("G2", (0, 1)), ("B3", (1, 0, 1))])
def test_top_demazure_character_dimension(name, lam):
    R = root_datum(name)
    ch = demazure_character(R, R.longest, lam)
    dim = 1
    for b in R.positive_roots:
        dim *= Fraction(R.pair(b, [x + 1 for x in lam]), R.pair(b, R.rho))
    assert ch.total() == dim
    assert is_symmetric(R, ch)
    assert all(c > 0 for _, c in ch.items())


def test_recursion_rejects_non_minimal():
    R = root_datum("A2")
    with pytest.raises(ValueError):
        macdonald_recursive(R, R.parse_word("s2"), (1, 0))
    with pytest.raises(ValueError):
        macdonald_recursive(R, R.parse_word("s1"), (1, 1), (1, 2))


def test_graded_char_basics():
    a = mono(1, 0) + mono(0, 0, q=1, c=2)
    assert a - a == GradedChar()
    assert len(a) == 2 and a[((0, 0), 1)] == 2
    assert from_terms(to_terms(a)) == a
    assert specialize_q0(a) == mono(1, 0)
    assert specialize_q1(a) == mono(1, 0) + mono(0, 0, c=2)
    with pytest.raises(InvariantViolation):
        GradedChar({((0,), -1): 1})


def test_rendering():
    ch = mono(2) + mono(-2) + mono(0) + mono(0, q=1)
    assert render_text(ch) == "x^[2] + x^[-2] + 1 + q"
    assert render_text(GradedChar()) == "0"
    assert render_text(mono(1, -1, q=2, c=3) - mono(0, 0)) == "-1 + 3*x^[1,-1]*q^2"
    assert render_latex(mono(2, -1, q=1)) == r"e^{2\varpi_{1}-\varpi_{2}} q"
