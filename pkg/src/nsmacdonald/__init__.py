"""Nonsymmetric Macdonald polynomials at t = 0 through four combinatorial models:
quantum LS paths, the quantum alcove model, quantum walks on lex chains and
Demazure operators."""

from .cartan_weyl import CartanType, RootDatum, WeylElt, root_datum
from .graded import GradedChar, render_text
from .models import MODELS, compute, compute_all, crosscheck
from .qls import QLS, QLSPath

__all__ = [
    "CartanType", "RootDatum", "WeylElt", "root_datum", "GradedChar", "render_text",
    "MODELS", "compute", "compute_all", "crosscheck", "QLS", "QLSPath",
]
__version__ = "0.1.0"
