"""Graded characters: finite sums of ``c * x^wt * q^k``."""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .cartan_weyl import Weight
from .errors import InvariantViolation

Term = tuple[Weight, int]


class GradedChar:
    """Immutable map ``(weight, q-exponent) -> nonzero integer``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Term, int] | Iterable[tuple[Term, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Term, int] = {}
        for (wt, k), c in items:
            if k < 0:
                raise InvariantViolation(f"negative q-exponent {k}")
            key = (tuple(int(x) for x in wt), int(k))
            acc[key] = acc.get(key, 0) + int(c)
        self._terms = {key: acc[key] for key in sorted(acc) if acc[key]}

    @classmethod
    def monomial(cls, wt: Weight, k: int = 0, c: int = 1) -> "GradedChar":
        return cls({(tuple(wt), k): c})

    def items(self) -> Iterator[tuple[Term, int]]:
        return iter(self._terms.items())

    def __iter__(self):
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __getitem__(self, key: Term) -> int:
        return self._terms.get(key, 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, GradedChar) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "GradedChar") -> "GradedChar":
        return GradedChar(list(self.items()) + list(other.items()))

    def __sub__(self, other: "GradedChar") -> "GradedChar":
        return GradedChar(list(self.items()) + [(k, -c) for k, c in other.items()])

    def __neg__(self) -> "GradedChar":
        return GradedChar([(k, -c) for k, c in self.items()])

    def total(self) -> int:
        """Sum of coefficients, i.e. the value at ``x = 1, q = 1``."""
        return sum(self._terms.values())

    def map_weights(self, f) -> "GradedChar":
        return GradedChar([((f(wt), k), c) for (wt, k), c in self.items()])

    def __repr__(self) -> str:
        return f"GradedChar({render_text(self)!r})"


def _coef(c: int, body: str) -> str:
    if not body:
        return str(abs(c))
    return body if abs(c) == 1 else f"{abs(c)}*{body}"


def _join(parts: list[tuple[int, str]]) -> str:
    if not parts:
        return "0"
    out = ""
    for n, (c, body) in enumerate(parts):
        s = _coef(c, body)
        if n == 0:
            out = s if c > 0 else "-" + s
        else:
            out += (" + " if c > 0 else " - ") + s
    return out


def display_order(term: Term):
    """q-degree first; inside a degree, the constant last, other weights decreasing."""
    wt, k = term
    zero = not any(wt)
    return (k, zero, tuple(-x for x in wt))


def render_text(ch: GradedChar) -> str:
    """E.g. ``x^[2] + x^[-2] + 1 + q``."""
    parts = []
    for term in sorted(ch, key=display_order):
        wt, k = term
        factors = []
        if any(wt):
            factors.append("x^[" + ",".join(str(x) for x in wt) + "]")
        if k == 1:
            factors.append("q")
        elif k > 1:
            factors.append(f"q^{k}")
        parts.append((ch[term], "*".join(factors)))
    return _join(parts)


def render_latex(ch: GradedChar) -> str:
    parts = []
    for term in sorted(ch, key=display_order):
        wt, k = term
        lin = ""
        for i, x in enumerate(wt, start=1):
            if not x:
                continue
            mag = "" if abs(x) == 1 else str(abs(x))
            sign = "-" if x < 0 else ("+" if lin else "")
            lin += f"{sign}{mag}\\varpi_{{{i}}}"
        body = f"e^{{{lin}}}" if lin else ""
        if k:
            body += (" " if body else "") + ("q" if k == 1 else f"q^{{{k}}}")
        parts.append((ch[term], body))
    return _join(parts).replace("*", " ")


def to_terms(ch: GradedChar) -> list[dict]:
    return [{"wt": list(wt), "q": k, "c": c} for (wt, k), c in ch.items()]


def from_terms(terms: Iterable[Mapping]) -> GradedChar:
    return GradedChar([((tuple(t["wt"]), t["q"]), t["c"]) for t in terms])
