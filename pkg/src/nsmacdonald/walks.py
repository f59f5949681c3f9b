"""Quantum walks along a lex chain for ``-w0 lam``.

A walk picks chain positions ``j_1 < ... < j_r`` so that the directions
``e, r_{j1}, r_{j1} r_{j2}, ...`` follow edges of the quantum Bruhat graph on W.
Its weight starts at ``w0 lam`` and at each step moves by ``a_j`` times the
current direction applied to ``gamma_j``, where ``a_j = <gamma_j^vee, mu> - b_j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .alcove import LambdaChain, ReflectionOrder, build_lex_chain, qbg_step
from .cartan_weyl import RootDatum, Weight, WeylElt
from .errors import InvariantViolation
from .graded import GradedChar
from .qls import QLSPath


@dataclass(frozen=True)
class Walk:
    indices: tuple[int, ...]
    dirs: tuple[WeylElt, ...]  # direction before the first step and after each step
    weights: tuple[Weight, ...]  # weight before the first step and after each step
    quantum: tuple[bool, ...]

    @property
    def wt(self) -> Weight:
        return self.weights[-1]

    @property
    def final(self) -> WeylElt:
        return self.dirs[-1]


def walk_chain(datum: RootDatum, lam: Sequence[int], order: ReflectionOrder | None = None) -> LambdaChain:
    return build_lex_chain(datum, datum.dual_weight(lam), order)


def enumerate_walks(datum: RootDatum, lam: Sequence[int], chain: LambdaChain | None = None) -> list[Walk]:
    R = datum
    lam = R.check_weight(lam)
    if chain is None:
        chain = walk_chain(R, lam)
    start = R.act(R.longest, lam)
    out = []

    def grow(idx, dirs, wts, quantum):
        out.append(Walk(tuple(idx), tuple(dirs), tuple(wts), tuple(quantum)))
        first = idx[-1] + 1 if idx else 0
        for j in range(first, len(chain)):
            e = chain[j]
            step = qbg_step(R, dirs[-1], e.gamma)
            if step is None:
                continue
            move = R.root_weight(R.act_root(dirs[-1], e.gamma))
            wt = tuple(x + e.a * y for x, y in zip(wts[-1], move))
            grow(idx + [j], dirs + [step[0]], wts + [wt], quantum + [step[1]])

    grow([], [R.identity], [start], [])
    return out


def qwt_deg(chain: LambdaChain, p: Walk) -> int:
    """Sum of ``a_j`` over the quantum steps."""
    return sum(chain[j].a for j, q in zip(p.indices, p.quantum) if q)


def tilde_iota(chain: LambdaChain, p: Walk) -> WeylElt:
    """Direction reached after the steps with ``b = 0``."""
    k = sum(1 for j in p.indices if chain[j].b == 0)
    return p.dirs[k]


def macdonald_walks(datum: RootDatum, w: WeylElt, lam: Sequence[int], chain: LambdaChain | None = None) -> GradedChar:
    """Sum of ``x^wt q^deg`` over walks with ``tilde_iota >= w floor(w0)^{-1}``."""
    R = datum
    lam = R.check_weight(lam)
    if chain is None:
        chain = walk_chain(R, lam)
    J = R.stabilizer(lam)
    bound = R.mul(w, R.inv(R.min_coset_rep(R.longest, J)))
    terms = []
    for p in enumerate_walks(R, lam, chain):
        if R.bruhat_leq(bound, tilde_iota(chain, p)):
            terms.append(((p.wt, qwt_deg(chain, p)), 1))
    return GradedChar(terms)


def xi_bijection(chain: LambdaChain, p: Walk) -> QLSPath:
    """QLS path obtained by cutting the walk where the ratio ``d`` changes."""
    R = chain.datum
    J = R.omega_set(R.stabilizer(chain.mu))
    dirs, cuts = [], [Fraction(0)]
    done = 0
    level = Fraction(0)
    ds = [chain[j].d for j in p.indices]
    while True:
        while done < len(ds) and ds[done] == level:
            done += 1
        dirs.append(R.min_coset_rep(R.mul(p.dirs[done], R.longest), J))
        if done == len(ds):
            break
        level = ds[done]
        cuts.append(level)
    cuts.append(Fraction(1))
    if any(x == y for x, y in zip(dirs, dirs[1:])):
        raise InvariantViolation(f"repeated direction for walk {p.indices}")
    return QLSPath(tuple(dirs), tuple(cuts))


def walk_to_json(chain: LambdaChain, p: Walk) -> dict:
    return {
        "indices": [j + 1 for j in p.indices],
        "wt": list(p.wt),
        "deg": qwt_deg(chain, p),
        "final": [str(i) for i in p.final.word],
    }
