"""Demazure operators and the recursive construction of ``E_{w lam}(x; q, 0)``."""

from __future__ import annotations

from typing import Sequence

from .cartan_weyl import RootDatum, WeylElt
from .errors import InvariantViolation
from .graded import GradedChar
from .qls import QLS


def demazure_D(datum: RootDatum, i: int, ch: GradedChar) -> GradedChar:
    """Demazure operator ``D_i``, acting on weights and ignoring ``q``.

    On a monomial ``x^xi`` with ``n = <alpha_i^vee, xi>`` it gives
    ``x^xi + x^(xi - alpha_i) + ... + x^(xi - n alpha_i)`` for ``n >= 0``,
    zero for ``n = -1``, and
    ``-(x^(xi + alpha_i) + ... + x^(xi + (-n-1) alpha_i))`` for ``n <= -2``.
    """
    a = datum.root_weight(datum.simple_root(i))
    out = []
    for (xi, k), c in ch.items():
        n = xi[i - 1]
        if n >= 0:
            steps, sign = range(0, -n - 1, -1), 1
        else:
            steps, sign = range(1, -n), -1
        for s in steps:
            out.append(((tuple(x + s * y for x, y in zip(xi, a)), k), sign * c))
    return GradedChar(out)


def apply_word(datum: RootDatum, word: Sequence[int], ch: GradedChar) -> GradedChar:
    """``D_{i1} D_{i2} ... D_{ik} ch`` (the last letter acts first)."""
    for i in reversed(word):
        ch = demazure_D(datum, i, ch)
    return ch


def macdonald_recursive(datum: RootDatum, w: WeylElt, lam: Sequence[int], word: Sequence[int] | None = None) -> GradedChar:
    """Start from the graded character at ``w = e`` and apply ``D_i`` along a
    reduced word of ``w`` (which must lie in ``W^J``)."""
    Q = QLS(datum, lam)
    if not datum.in_min_reps(w, Q.J):
        raise ValueError(f"{w} is not a minimal coset representative")
    word = tuple(w.word if word is None else word)
    if datum.elt(word) != w or len(word) != w.length:
        raise ValueError(f"{word} is not a reduced word for {w}")
    return apply_word(datum, word, Q.gch(datum.identity))


def demazure_character(datum: RootDatum, w: WeylElt, lam: Sequence[int]) -> GradedChar:
    return apply_word(datum, w.word, GradedChar.monomial(tuple(lam)))


def specialize_q0(ch: GradedChar) -> GradedChar:
    return GradedChar([(t, c) for t, c in ch.items() if t[1] == 0])


def specialize_q1(ch: GradedChar) -> GradedChar:
    return GradedChar([((wt, 0), c) for (wt, k), c in ch.items()])


def weyl_act(datum: RootDatum, w: WeylElt, ch: GradedChar) -> GradedChar:
    return ch.map_weights(lambda wt: datum.act(w, wt))


def is_symmetric(datum: RootDatum, ch: GradedChar) -> bool:
    return all(weyl_act(datum, datum.elt((i,)), ch) == ch for i in range(1, datum.rank + 1))


def reduced_words(datum: RootDatum, w: WeylElt) -> list[tuple[int, ...]]:
    """Every reduced word of ``w``."""
    if w.length == 0:
        return [()]
    out = []
    for i in range(1, datum.rank + 1):
        if datum.is_left_descent(w, i):
            out += [(i,) + rest for rest in reduced_words(datum, datum.left_mul(i, w))]
    return out


def check_nonnegative(ch: GradedChar) -> GradedChar:
    if any(c < 0 for _, c in ch.items()):
        raise InvariantViolation("negative coefficient in a graded character")
    return ch

