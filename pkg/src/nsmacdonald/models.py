"""One entry point per model, plus a helper comparing them."""

from __future__ import annotations

from typing import Sequence

from .alcove import ReflectionOrder, macdonald_alcove
from .cartan_weyl import RootDatum, WeylElt
from .charpoly import macdonald_recursive
from .graded import GradedChar
from .qls import QLS
from .walks import macdonald_walks

MODELS = ("qls", "alcove", "os", "demazure")


def compute(model: str, datum: RootDatum, w: WeylElt, lam: Sequence[int], order: ReflectionOrder | None = None) -> GradedChar:
    """``E_{w lam}(x; q, 0)`` for ``w`` in ``W^J``; ``order`` only affects the alcove model."""
    if model == "qls":
        return QLS(datum, lam).gch(w)
    if model == "alcove":
        return macdonald_alcove(datum, w, lam, order)
    if model == "os":
        return macdonald_walks(datum, w, lam)
    if model == "demazure":
        return macdonald_recursive(datum, w, lam)
    raise ValueError(f"unknown model {model!r}")


def compute_all(datum: RootDatum, w: WeylElt, lam: Sequence[int], order: ReflectionOrder | None = None) -> dict[str, GradedChar]:
    return {m: compute(m, datum, w, lam, order) for m in MODELS}


def crosscheck(datum: RootDatum, lam: Sequence[int], ws: Sequence[WeylElt] | None = None, order: ReflectionOrder | None = None):
    """List of ``(w, results, agree)`` over ``ws`` (default: all of ``W^J``)."""
    if ws is None:
        ws = datum.minimal_reps(datum.stabilizer(lam))
    out = []
    for w in ws:
        res = compute_all(datum, w, lam, order)
        vals = list(res.values())
        out.append((w, res, all(v == vals[0] for v in vals)))
    return out
