"""Quantum Lakshmibai-Seshadri paths.

A path is a sequence of directions ``x_1, ..., x_s`` in ``W^J`` with cut
points ``0 = sigma_0 < ... < sigma_s = 1``.  Consecutive directions differ
and ``x_u`` is reachable from ``x_{u+1}`` in the quantum Bruhat graph keeping
only edges with ``sigma_u <beta^vee, lam>`` integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Sequence

from .cartan_weyl import RootDatum, Weight, WeylElt, root_datum
from .errors import InvariantViolation
from .graded import GradedChar
from .qbg import QBGraph


@dataclass(frozen=True)
class QLSPath:
    dirs: tuple[WeylElt, ...]
    cuts: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.cuts) != len(self.dirs) + 1:
            raise ValueError("need one more cut than directions")

    @property
    def initial(self) -> WeylElt:
        return self.dirs[0]

    @property
    def final(self) -> WeylElt:
        return self.dirs[-1]

    def __str__(self) -> str:
        d = "; ".join(str(x) for x in self.dirs)
        c = ", ".join(str(t) for t in self.cuts)
        return f"({d} | {c})"


def breakpoints(datum: RootDatum, lam: Sequence[int]) -> list[Fraction]:
    """Rationals in (0, 1) of the form ``a / <beta^vee, lam>``."""
    out = set()
    for b in datum.positive_roots:
        h = datum.pair(b, lam)
        for a in range(1, h):
            out.add(Fraction(a, h))
    return sorted(out)


class QLS:
    """All QLS paths of shape ``lam`` plus their statistics and operators."""

    def __init__(self, datum: RootDatum | str, lam: Sequence[int]):
        self.datum = R = datum if isinstance(datum, RootDatum) else root_datum(datum)
        self.lam: Weight = R.check_weight(lam)
        self.J = R.stabilizer(self.lam)
        self.graph = QBGraph(R, self.J)
        self.cuts = breakpoints(R, self.lam)
        self._by_vector = {R.act(u, self.lam): u for u in self.graph.vertices}

    # ----------------------------------------------------------- enumeration

    @cached_property
    def paths(self) -> tuple[QLSPath, ...]:
        V = self.graph.vertices
        # reach[s][y] = directions x reachable from y in the sigma-restricted graph
        reach = {}
        for s in self.cuts:
            g = self.graph.restricted(s, self.lam)
            reach[s] = {y: [x for x in V if x != y and g.reachable(y, x)] for y in V}
        out: list[QLSPath] = []

        def extend(dirs: list[WeylElt], cuts: list[Fraction]):
            out.append(QLSPath(tuple(dirs), tuple(cuts) + (Fraction(1),)))
            for s in self.cuts:
                if s <= cuts[-1]:
                    continue
                for y in V:
                    if dirs[-1] in reach[s][y]:
                        extend(dirs + [y], cuts + [s])

        for x in V:
            extend([x], [Fraction(0)])
        out.sort(key=self._sort_key)
        return tuple(out)

    @staticmethod
    def _sort_key(p: QLSPath):
        return (tuple((x.length, x.word) for x in p.dirs), p.cuts)

    def __iter__(self) -> Iterator[QLSPath]:
        return iter(self.paths)

    def __len__(self) -> int:
        return len(self.paths)

    def is_valid(self, p: QLSPath) -> bool:
        """Check the defining conditions directly."""
        V = set(self.graph.vertices)
        if p.cuts[0] != 0 or p.cuts[-1] != 1 or any(a >= b for a, b in zip(p.cuts, p.cuts[1:])):
            return False
        if any(x not in V for x in p.dirs):
            return False
        for u in range(1, len(p.dirs)):
            x, y, s = p.dirs[u - 1], p.dirs[u], p.cuts[u]
            if x == y or not self.graph.restricted(s, self.lam).reachable(y, x):
                return False
        return True

    # ----------------------------------------------------------- statistics

    def wt(self, p: QLSPath) -> Weight:
        total = [Fraction(0)] * self.datum.rank
        for x, a, b in zip(p.dirs, p.cuts, p.cuts[1:]):
            for k, c in enumerate(self.datum.act(x, self.lam)):
                total[k] += (b - a) * c
        if any(t.denominator != 1 for t in total):
            raise InvariantViolation(f"non-integral weight for {p}")
        return tuple(int(t) for t in total)

    def deg(self, p: QLSPath) -> int:
        """``-sum_u (1 - sigma_u) wt_lam(x_{u+1} => x_u)``; always <= 0."""
        total = Fraction(0)
        for u in range(1, len(p.dirs)):
            total += (1 - p.cuts[u]) * self.graph.wt(p.dirs[u], p.dirs[u - 1], self.lam)
        if total.denominator != 1:
            raise InvariantViolation(f"non-integral degree for {p}")
        return -int(total)

    def gch(self, w: WeylElt) -> GradedChar:
        """Graded character of the paths with initial direction below ``w``."""
        R = self.datum
        terms: dict = {}
        for p in self.paths:
            if R.bruhat_leq(p.initial, w):
                key = (self.wt(p), -self.deg(p))
                terms[key] = terms.get(key, 0) + 1
        return GradedChar(terms)

    # ------------------------------------------------------------- dualities

    def dual(self) -> "QLS":
        return QLS(self.datum, self.datum.dual_weight(self.lam))

    def star(self, p: QLSPath) -> QLSPath:
        """Reverse the path and twist each direction by ``w0``; lands in the dual shape."""
        R = self.datum
        J2 = R.omega_set(self.J)
        w0 = R.longest
        dirs = tuple(R.min_coset_rep(R.mul(x, w0), J2) for x in reversed(p.dirs))
        cuts = tuple(1 - t for t in reversed(p.cuts))
        return QLSPath(dirs, cuts)

    def omega(self, p: QLSPath) -> QLSPath:
        """Relabel each direction by the diagram automorphism ``-w0``."""
        return QLSPath(tuple(self.datum.omega_elt(x) for x in p.dirs), p.cuts)

    def lusztig(self, p: QLSPath) -> QLSPath:
        return self.omega(self.star(p))

    # ---------------------------------------------------------- root operators

    def _height(self, i: int, p: QLSPath):
        """Breakpoint values of ``<alpha_i^vee, eta(t)>`` and segment slopes."""
        slopes = [self.datum.act(x, self.lam)[i - 1] for x in p.dirs]
        vals = [Fraction(0)]
        for k, sl in enumerate(slopes):
            vals.append(vals[-1] + (p.cuts[k + 1] - p.cuts[k]) * sl)
        return vals, slopes

    def _reflect_between(self, i: int, p: QLSPath, t0: Fraction, t1: Fraction) -> QLSPath:
        R = self.datum
        pts = sorted(set(p.cuts) | {t0, t1})
        vecs = []
        for a, b in zip(pts, pts[1:]):
            k = max(u for u in range(len(p.dirs)) if p.cuts[u] <= a)
            v = R.act(p.dirs[k], self.lam)
            if t0 <= a and b <= t1:
                v = R.reflect(i, v)
            vecs.append(v)
        dirs, cuts = [], [pts[0]]
        for v, b in zip(vecs, pts[1:]):
            if dirs and dirs[-1] == v:
                cuts[-1] = b
            else:
                dirs.append(v)
                cuts.append(b)
        return QLSPath(tuple(self._by_vector[v] for v in dirs), tuple(cuts))

    def f(self, i: int, p: QLSPath) -> QLSPath | None:
        """Lowering operator; ``None`` stands for the zero path."""
        vals, slopes = self._height(i, p)
        m = min(vals)
        if vals[-1] - m < 1:
            return None
        k0 = max(k for k, v in enumerate(vals) if v == m)
        t0 = p.cuts[k0]
        # first time after t0 at level m + 1; the height increases on the way
        for k in range(k0, len(slopes)):
            if vals[k + 1] >= m + 1:
                t1 = p.cuts[k] + (m + 1 - vals[k]) / slopes[k]
                break
        return self._reflect_between(i, p, t0, t1)

    def e(self, i: int, p: QLSPath) -> QLSPath | None:
        """Raising operator; ``None`` stands for the zero path."""
        vals, slopes = self._height(i, p)
        m = min(vals)
        if m > -1:
            return None
        k1 = min(k for k, v in enumerate(vals) if v == m)
        t1 = p.cuts[k1]
        # last time before t1 at level m + 1; the height decreases on the way
        for k in range(k1 - 1, -1, -1):
            if vals[k] >= m + 1:
                t0 = p.cuts[k] + (m + 1 - vals[k]) / slopes[k]
                break
        return self._reflect_between(i, p, t0, t1)

    def string(self, i: int, p: QLSPath) -> list[QLSPath]:
        """The ``i``-string through ``p``, from its highest element down."""
        top = p
        while (q := self.e(i, top)) is not None:
            top = q
        out = [top]
        while (q := self.f(i, out[-1])) is not None:
            out.append(q)
        return out

    # ----------------------------------------------------------------- output

    def to_json(self, p: QLSPath) -> dict:
        return {
            "dirs": [[str(i) for i in x.word] for x in p.dirs],
            "cuts": [str(t) for t in p.cuts],
            "wt": list(self.wt(p)),
            "deg": self.deg(p),
        }


def enumerate_qls(datum: RootDatum | str, lam: Sequence[int]) -> tuple[QLSPath, ...]:
    return QLS(datum, lam).paths


def gch_qls(datum: RootDatum | str, w: WeylElt, lam: Sequence[int]) -> GradedChar:
    return QLS(datum, lam).gch(w)
