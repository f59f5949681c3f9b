"""Parabolic quantum Bruhat graph and the weight of shortest paths."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .cartan_weyl import RootDatum, Root, WeylElt
from .errors import InvariantViolation


@dataclass(frozen=True)
class QBGEdge:
    source: WeylElt
    target: WeylElt
    root: Root
    quantum: bool


class QBGraph:
    """Quantum Bruhat graph on ``W^J``.

    There is an edge ``w -> floor(w r_beta)`` for every positive root ``beta``
    outside ``Phi_J`` such that the representative is either one longer than
    ``w`` (a Bruhat edge) or ``2<beta^vee, rho - rho_J> - 1`` shorter (a
    quantum edge).
    """

    def __init__(self, datum: RootDatum, J: Iterable[int] = (), edges: list[QBGEdge] | None = None):
        self.datum = datum
        self.J = frozenset(J)
        self.vertices = datum.minimal_reps(self.J)
        if edges is None:
            edges = self._build()
        self.edges = edges
        self.out: dict[WeylElt, list[QBGEdge]] = {v: [] for v in self.vertices}
        for e in edges:
            self.out[e.source].append(e)
        self._dist: dict[WeylElt, dict[WeylElt, int]] = {}

    def _build(self) -> list[QBGEdge]:
        R, J = self.datum, self.J
        two_rho = [2 * c for c in R.rho]
        two_rho_J = R.two_rho_in(J)
        shift = [a - b for a, b in zip(two_rho, two_rho_J)]
        phiJ = set(R.positive_roots_in(J))
        roots = [b for b in R.positive_roots if b not in phiJ]
        edges = []
        for w in self.vertices:
            for beta in roots:
                t = R.min_coset_rep(R.right_reflect(w, beta), J)
                if t.length == w.length + 1:
                    edges.append(QBGEdge(w, t, beta, False))
                elif t.length == w.length - R.pair(beta, shift) + 1:
                    edges.append(QBGEdge(w, t, beta, True))
        return edges

    def restricted(self, sigma, lam: Sequence[int]) -> "QBGraph":
        """Subgraph keeping edges with ``sigma <beta^vee, lam>`` integral."""
        sigma = Fraction(sigma)
        keep = [e for e in self.edges if (sigma * self.datum.pair(e.root, lam)).denominator == 1]
        return QBGraph(self.datum, self.J, keep)

    def distances_from(self, x: WeylElt) -> dict[WeylElt, int]:
        d = self._dist.get(x)
        if d is None:
            d = {x: 0}
            queue = deque([x])
            while queue:
                v = queue.popleft()
                for e in self.out[v]:
                    if e.target not in d:
                        d[e.target] = d[v] + 1
                        queue.append(e.target)
            self._dist[x] = d
        return d

    def reachable(self, x: WeylElt, y: WeylElt) -> bool:
        return y in self.distances_from(x)

    def shortest_path(self, x: WeylElt, y: WeylElt) -> list[QBGEdge]:
        """A shortest directed path from ``x`` to ``y``; the BFS visits edges in
        root order so the answer is deterministic."""
        parent: dict[WeylElt, QBGEdge | None] = {x: None}
        queue = deque([x])
        while queue and y not in parent:
            v = queue.popleft()
            for e in self.out[v]:
                if e.target not in parent:
                    parent[e.target] = e
                    queue.append(e.target)
        if y not in parent:
            raise InvariantViolation(f"no path from {x} to {y}")
        path = []
        v = y
        while parent[v] is not None:
            path.append(parent[v])
            v = parent[v].source
        return path[::-1]

    def path_weight(self, path: Iterable[QBGEdge], lam: Sequence[int]) -> int:
        return sum(self.datum.pair(e.root, lam) for e in path if e.quantum)

    def wt(self, x: WeylElt, y: WeylElt, lam: Sequence[int]) -> int:
        """``wt_lam(x => y)``: quantum contribution of a shortest path."""
        return self.path_weight(self.shortest_path(x, y), lam)

    def all_shortest_weights(self, x: WeylElt, y: WeylElt, lam: Sequence[int]) -> set[int]:
        """Quantum weights over every shortest path from ``x`` to ``y``."""
        dist = self.distances_from(x)
        if y not in dist:
            raise InvariantViolation(f"no path from {x} to {y}")
        memo: dict[WeylElt, set[int]] = {}

        def go(v: WeylElt) -> set[int]:
            # weights of shortest paths v -> y, where v lies on a shortest x -> y path
            if v == y:
                return {0}
            if v in memo:
                return memo[v]
            out = set()
            for e in self.out[v]:
                t = e.target
                if dist.get(t) == dist[v] + 1 and dist[t] <= dist[y]:
                    w = self.datum.pair(e.root, lam) if e.quantum else 0
                    out |= {w + s for s in go(t)}
            memo[v] = out
            return out

        return go(x)


def build_qbg(datum: RootDatum, J: Iterable[int] = ()) -> QBGraph:
    return QBGraph(datum, J)


def to_dot(graph: QBGraph) -> str:
    """Graphviz rendering; solid edges are Bruhat, dashed ones quantum."""
    name = {v: str(v) for v in graph.vertices}
    lines = [f'digraph "QBG {graph.datum.ctype}" {{']
    for v in graph.vertices:
        lines.append(f'  "{name[v]}";')
    for e in graph.edges:
        style = "dashed" if e.quantum else "solid"
        label = ",".join(str(c) for c in e.root)
        lines.append(f'  "{name[e.source]}" -> "{name[e.target]}" [label="{label}", style={style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
