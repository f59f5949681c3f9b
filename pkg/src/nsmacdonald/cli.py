"""Command line interface.

Exit codes: 0 success, 1 models disagree, 2 bad input, 3 broken invariant,
4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .alcove import admissible_to_json, build_lex_chain, build_reflection_order, enumerate_admissible
from .cartan_weyl import RootDatum, parse_weight, root_datum
from .errors import InvariantViolation, ParseError
from .graded import render_latex, render_text, to_terms
from .models import MODELS, compute, crosscheck
from .qbg import QBGraph, to_dot
from .qls import QLS
from .walks import enumerate_walks, walk_chain, walk_to_json

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_INVARIANT, EXIT_IO = range(5)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def _common(p: argparse.ArgumentParser):
    p.add_argument("ctype", nargs="?", help="Cartan type, e.g. A2 (or use --type)")
    p.add_argument("--type", dest="type_opt")
    p.add_argument("--lambda", dest="lam", required=True, help="dominant weight, e.g. 1,0")
    p.add_argument("--format", default=None, choices=["text", "json", "latex", "dot"])
    p.add_argument("--out", help="write output here instead of stdout")


def make_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="nsmac", description="E_{w lam}(x; q, 0) via four combinatorial models")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", help="compute E_{w lam}(x; q, 0)")
    _common(c)
    c.add_argument("--w", default="e", help='Weyl group element: "e", "w0" or "s1 s2"')
    c.add_argument("--model", default="qls", choices=MODELS + ("all",))
    c.add_argument("--chain-tiebreak", help="reduced word of w0 ordering ties in the alcove model")

    x = sub.add_parser("crosscheck", help="compare all models")
    _common(x)
    x.add_argument("--w", default=None)
    x.add_argument("--all-w", action="store_true", help="check every minimal coset representative")
    x.add_argument("--chain-tiebreak")

    e = sub.add_parser("export", help="dump an intermediate object")
    e.add_argument("what", choices=["qbg", "chain", "qls", "admissible", "os"])
    _common(e)
    e.add_argument("--chain-tiebreak")
    return ap


def _setup(args):
    name = args.type_opt or args.ctype
    if not name:
        raise ParseError("missing Cartan type")
    R = root_datum(name)
    lam = R.check_weight(parse_weight(args.lam, R.rank))
    order = None
    if getattr(args, "chain_tiebreak", None):
        word = [int(t) for t in args.chain_tiebreak.replace("s", " ").replace(",", " ").split()]
        order = build_reflection_order(R, word)
    return R, lam, order


def _canonical(R: RootDatum, text: str, lam):
    w = R.parse_word(text)
    J = R.stabilizer(lam)
    rep = R.min_coset_rep(w, J)
    if rep != w:
        print(f"note: using the minimal coset representative {rep} in place of {w}", file=sys.stderr)
    return rep


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render(fmt: str, ch) -> str:
    if fmt == "latex":
        return render_latex(ch)
    return render_text(ch)


def cmd_compute(args) -> int:
    R, lam, order = _setup(args)
    w = _canonical(R, args.w, lam)
    fmt = args.format or "text"
    if fmt == "dot":
        raise ParseError("dot output is only available for export qbg")
    models = MODELS if args.model == "all" else (args.model,)
    res = {m: compute(m, R, w, lam, order) for m in models}
    head = {"type": str(R.ctype), "lambda": list(lam), "w": str(w)}
    if fmt == "json":
        if len(models) == 1:
            doc = dict(head, model=models[0], terms=to_terms(res[models[0]]))
        else:
            doc = [dict(head, model=m, terms=to_terms(ch)) for m, ch in res.items()]
        text = json.dumps(doc, indent=2) + "\n"
    elif len(models) == 1:
        text = _render(fmt, res[models[0]]) + "\n"
    else:
        text = "".join(f"{m}: {_render(fmt, ch)}\n" for m, ch in res.items())
    _emit(text, args.out)
    vals = list(res.values())
    return EXIT_OK if all(v == vals[0] for v in vals) else EXIT_MISMATCH


def cmd_crosscheck(args) -> int:
    R, lam, order = _setup(args)
    ws = None
    if args.w and not args.all_w:
        ws = [_canonical(R, args.w, lam)]
    rows = crosscheck(R, lam, ws, order)
    good = sum(1 for _, _, ok in rows if ok)
    bad = [str(w) for w, _, ok in rows if not ok]
    if (args.format or "text") == "json":
        text = json.dumps({
            "type": str(R.ctype), "lambda": list(lam), "models": list(MODELS),
            "checked": len(rows), "agree": good, "mismatches": bad,
        }, indent=2) + "\n"
    else:
        text = f"{good}/{len(rows)} agree ({len(MODELS)} models)\n"
        text += "".join(f"mismatch at w = {w}\n" for w in bad)
    _emit(text, args.out)
    return EXIT_OK if not bad else EXIT_MISMATCH


def cmd_export(args) -> int:
    R, lam, order = _setup(args)
    what = args.what
    if what == "qbg":
        g = QBGraph(R, R.stabilizer(lam))
        if (args.format or "dot") == "dot":
            text = to_dot(g)
        else:
            text = json.dumps({
                "vertices": [str(v) for v in g.vertices],
                "edges": [{"source": str(e.source), "target": str(e.target), "root": list(e.root),
                           "quantum": e.quantum} for e in g.edges],
            }, indent=2) + "\n"
    elif what == "chain":
        text = json.dumps(build_lex_chain(R, lam, order).to_json(), indent=2) + "\n"
    elif what == "qls":
        Q = QLS(R, lam)
        text = json.dumps([Q.to_json(p) for p in Q], indent=2) + "\n"
    elif what == "admissible":
        ch = build_lex_chain(R, lam, order)
        text = json.dumps([admissible_to_json(ch, A) for A in enumerate_admissible(ch)], indent=2) + "\n"
    else:
        ch = walk_chain(R, lam)
        text = json.dumps([walk_to_json(ch, p) for p in enumerate_walks(R, lam, ch)], indent=2) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def main(argv=None) -> int:
    try:
        args = make_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = {"compute": cmd_compute, "crosscheck": cmd_crosscheck, "export": cmd_export}[args.cmd]
    try:
        return handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvariantViolation as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
