"""Lex chains of roots, admissible subsets and the quantum alcove model."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .cartan_weyl import RootDatum, Root, Weight, WeylElt
from .errors import InvariantViolation, ParseError
from .graded import GradedChar
from .qls import QLSPath


@dataclass(frozen=True)
class ChainEntry:
    gamma: Root
    b: int
    h: int  # <gamma^vee, mu>

    @property
    def d(self) -> Fraction:
        return Fraction(self.b, self.h)

    @property
    def a(self) -> int:
        return self.h - self.b


@dataclass(frozen=True)
class ReflectionOrder:
    """Total order on positive roots read off a reduced word of ``w0``."""

    word: tuple[int, ...]
    roots: tuple[Root, ...]

    @cached_property
    def _pos(self) -> dict[Root, int]:
        return {b: k for k, b in enumerate(self.roots)}

    def position(self, beta: Root) -> int:
        return self._pos[beta]


def build_reflection_order(datum: RootDatum, word: Sequence[int]) -> ReflectionOrder:
    """``gamma_k = r_{p1} ... r_{p(k-1)} alpha_{pk}`` for a reduced word ``p`` of ``w0``."""
    word = tuple(word)
    if len(word) != datum.longest.length or datum.elt(word) != datum.longest:
        raise ParseError(f"{word} is not a reduced word for the longest element")
    roots = tuple(datum.act_root(datum.elt(word[:k]), datum.simple_root(p)) for k, p in enumerate(word))
    return ReflectionOrder(word, roots)


def is_reflection_order(datum: RootDatum, roots: Sequence[Root]) -> bool:
    """Whenever ``a alpha + b beta`` (a, b > 0) is a root it sits between ``alpha`` and ``beta``."""
    pos = {r: k for k, r in enumerate(roots)}
    if set(pos) != set(datum.positive_roots):
        return False
    for al in roots:
        for be in roots:
            if pos[al] >= pos[be]:
                continue
            for a in range(1, 4):
                for b in range(1, 4):
                    g = tuple(a * x + b * y for x, y in zip(al, be))
                    if g in pos and not pos[al] < pos[g] < pos[be]:
                        return False
    return True


def default_order(datum: RootDatum, mu: Sequence[int]) -> ReflectionOrder:
    """Order whose last roots are those orthogonal to ``mu``.

    Built from ``w0 = floor(w0)^K . w_{K,0}`` with ``K = omega(J_mu)``.
    """
    K = datum.omega_set(datum.stabilizer(mu))
    head = datum.min_coset_rep(datum.longest, K).word
    tail = datum.longest_in(K).word
    return build_reflection_order(datum, head + tail)


class LambdaChain:
    """Entries ``(gamma, b)`` for ``0 <= b < <gamma^vee, mu>``, sorted by
    ``d = b / <gamma^vee, mu>`` and then by a reflection order."""

    def __init__(self, datum: RootDatum, mu: Sequence[int], entries: Sequence[ChainEntry], order: ReflectionOrder):
        self.datum = datum
        self.mu: Weight = tuple(mu)
        self.entries = tuple(entries)
        self.order = order

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, k: int) -> ChainEntry:
        return self.entries[k]

    def __iter__(self):
        return iter(self.entries)

    @property
    def M(self) -> int:
        """Number of entries with ``b = 0``."""
        return sum(1 for e in self.entries if e.b == 0)

    def to_json(self) -> list[dict]:
        return [{"gamma": list(e.gamma), "b": e.b, "d": str(e.d)} for e in self.entries]


def build_lex_chain(datum: RootDatum, mu: Sequence[int], order: ReflectionOrder | None = None, check: bool = True) -> LambdaChain:
    mu = datum.check_weight(mu)
    if order is None:
        order = default_order(datum, mu)
    entries = []
    for beta in datum.positive_roots:
        h = datum.pair(beta, mu)
        entries += [ChainEntry(beta, b, h) for b in range(h)]
    entries.sort(key=lambda e: (e.d, order.position(e.gamma)))
    chain = LambdaChain(datum, mu, entries, order)
    if check:
        bad = validate_chain(chain)
        if bad:
            raise InvariantViolation("invalid chain: " + "; ".join(bad))
    return chain


def validate_chain(chain: LambdaChain) -> list[str]:
    """Replay the alcove walk and report every failed check.

    Start at ``p0 = rho / (1 + max <beta^vee, rho>)`` in the fundamental alcove.
    Step ``k`` must cross the wall ``<gamma_k^vee, .> = -b_k`` into an adjacent
    alcove, and the walk must end at ``p0 - mu`` after exactly the minimal
    number of steps.
    """
    R = chain.datum
    top = max(R.pair(b, R.rho) for b in R.positive_roots)
    p0 = tuple(Fraction(c, 1 + top) for c in R.rho)
    p = p0
    problems = []
    for k, e in enumerate(chain.entries):
        n = math.floor(R.pair(e.gamma, p))
        if n != -e.b:
            problems.append(f"step {k}: crossed level {n}, expected {-e.b}")
        q = R.reflect_by(e.gamma, p, level=n)
        sep = sum(abs(math.floor(R.pair(b, p)) - math.floor(R.pair(b, q))) for b in R.positive_roots)
        if sep != 1:
            problems.append(f"step {k}: alcoves {sep} walls apart")
        p = q
    target = tuple(x - m for x, m in zip(p0, chain.mu))
    if p != target:
        problems.append(f"walk ends at {p}, expected {target}")
    want = sum(R.pair(b, chain.mu) for b in R.positive_roots)
    if len(chain) != want:
        problems.append(f"length {len(chain)}, expected {want}")
    return problems


@dataclass(frozen=True)
class AdmissibleSubset:
    """Indices ``j_1 < ... < j_r`` into a chain such that
    ``e -> r_{j1} -> r_{j1} r_{j2} -> ...`` is a path in the quantum Bruhat graph of W."""

    indices: tuple[int, ...]
    dirs: tuple[WeylElt, ...]  # x_0 = e, x_1, ..., x_r
    quantum: tuple[bool, ...]  # step k is a quantum edge

    @property
    def final(self) -> WeylElt:
        return self.dirs[-1]

    @property
    def negative(self) -> tuple[int, ...]:
        """Indices taken along quantum edges."""
        return tuple(j for j, q in zip(self.indices, self.quantum) if q)


def qbg_step(datum: RootDatum, w: WeylElt, beta: Root) -> tuple[WeylElt, bool] | None:
    """The edge ``w -> w r_beta`` of the quantum Bruhat graph on W, if there is one."""
    t = datum.right_reflect(w, beta)
    if t.length == w.length + 1:
        return t, False
    if t.length == w.length - 2 * datum.pair(beta, datum.rho) + 1:
        return t, True
    return None


def enumerate_admissible(chain: LambdaChain) -> list[AdmissibleSubset]:
    R = chain.datum
    out = []

    def grow(idx: list[int], dirs: list[WeylElt], quantum: list[bool]):
        out.append(AdmissibleSubset(tuple(idx), tuple(dirs), tuple(quantum)))
        start = idx[-1] + 1 if idx else 0
        for j in range(start, len(chain)):
            step = qbg_step(R, dirs[-1], chain[j].gamma)
            if step is not None:
                grow(idx + [j], dirs + [step[0]], quantum + [step[1]])

    grow([], [R.identity], [])
    return out


def wt_A(chain: LambdaChain, A: AdmissibleSubset) -> Weight:
    """``-r_{j1} ... r_{jr} (-mu)`` with affine reflections in ``<gamma^vee, .> = -b``."""
    R = chain.datum
    z = tuple(-m for m in chain.mu)
    for j in reversed(A.indices):
        e = chain[j]
        z = R.reflect_by(e.gamma, z, level=-e.b)
    return tuple(-x for x in z)


def height(chain: LambdaChain, A: AdmissibleSubset) -> int:
    return sum(chain[j].a for j in A.negative)


def coheight(chain: LambdaChain, A: AdmissibleSubset) -> int:
    return sum(chain[j].b for j in A.negative)


def final_direction(A: AdmissibleSubset) -> WeylElt:
    return A.final


def project_pi(chain: LambdaChain, A: AdmissibleSubset) -> QLSPath:
    """Group the steps of ``A`` by their ratio ``d`` and read off a QLS path of
    shape ``-w0 mu``: the direction on ``[sigma_{p-1}, sigma_p]`` is
    ``floor(x w0)`` for the position ``x`` reached after all steps with
    ``d <= sigma_{p-1}``."""
    R = chain.datum
    K = R.omega_set(R.stabilizer(chain.mu))
    ds = [chain[j].d for j in A.indices]
    cuts = [Fraction(0)] + sorted({d for d in ds if d > 0}) + [Fraction(1)]
    dirs = []
    for c in cuts[:-1]:
        k = sum(1 for d in ds if d <= c)
        dirs.append(R.min_coset_rep(R.mul(A.dirs[k], R.longest), K))
    if any(x == y for x, y in zip(dirs, dirs[1:])):
        raise InvariantViolation(f"repeated direction while projecting {A.indices}")
    return QLSPath(tuple(dirs), tuple(cuts))


def macdonald_alcove(datum: RootDatum, w: WeylElt, lam: Sequence[int], order: ReflectionOrder | None = None) -> GradedChar:
    """Sum of ``q^coheight x^wt`` over admissible subsets of a ``lam``-chain whose
    final direction projects into the Bruhat interval below ``w``."""
    chain = build_lex_chain(datum, lam, order)
    J = datum.stabilizer(chain.mu)
    terms = []
    for A in enumerate_admissible(chain):
        if datum.bruhat_leq(datum.min_coset_rep(A.final, J), w):
            terms.append(((wt_A(chain, A), coheight(chain, A)), 1))
    return GradedChar(terms)


def admissible_to_json(chain: LambdaChain, A: AdmissibleSubset) -> dict:
    return {
        "indices": [j + 1 for j in A.indices],
        "wt": list(wt_A(chain, A)),
        "height": height(chain, A),
        "coheight": coheight(chain, A),
        "final": [str(i) for i in A.final.word],
    }


__all__ = [
    "ChainEntry", "ReflectionOrder", "LambdaChain", "AdmissibleSubset",
    "build_reflection_order", "is_reflection_order", "default_order", "build_lex_chain",
    "validate_chain", "qbg_step", "enumerate_admissible", "wt_A", "height", "coheight",
    "final_direction", "project_pi", "macdonald_alcove", "admissible_to_json",
]
