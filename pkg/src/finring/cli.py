"""Command line front end: check, survey, laws, describe.

Exit codes: 0 ok (a failing property verdict is still 0 for check), 1
law violations, 2 usage or parse errors, 3 size guard aborts.  Machine
reports are a single JSON object with stable key order and no floats,
so byte-identical reruns and load/dump round-trips hold.
"""
from __future__ import annotations

import argparse
import json
import sys

from .core import DEFAULT_GUARDS, Guards, RingError, SizeGuardError
from .core import verify_axioms
from .construct import build_expr, resolve_element
from .dsl import ParseError, parse
from .expr import serialize
from .laws import LAW_ORDER, default_corpus, load_corpus, run_laws
from .predicates import (E_PROPS, GLOBAL_PROPS, center, check_property,
                         idempotents, is_left_semicentral,
                         is_right_semicentral, nilpotents)

SCHEMA = "finring/1"

_MARK = {"holds": "ok", "fails": "FAIL", "skipped": "skip"}
_CELL = {"holds": "+", "fails": "-", "skipped": "?"}
_SHORT = (
    ("right_e_reversible", "r-rev"),
    ("left_e_reversible", "l-rev"),
    ("right_e_reduced", "r-red"),
    ("left_e_reduced", "l-red"),
    ("e_symmetric", "sym"),
    ("right_e_semicommutative", "r-scm"),
    ("left_e_semicommutative", "l-scm"),
)


def _guards(args) -> Guards:
    return Guards(pair_cap=args.max_pair_order,
                  triple_cap=args.max_triple_order)


def _emit(args, payload: dict):
    if args.format == "json":
        print(json.dumps(payload, indent=2))


def _payload(args, ring_text, results) -> dict:
    return {
        "schema": SCHEMA,
        "command": args.echo,
        "ring": ring_text,
        "results": results,
        "timings": None,
    }


def _build(args, text):
    node = parse(text)
    ring = build_expr(node, _guards(args), args.cache)
    return ring, serialize(node)


def _verify_note(ring, guards):
    try:
        report = verify_axioms(ring, guards)
        if not report.passed:
            raise RingError("axiom check failed on %s: %s"
                            % (ring.provenance, report.violations))
        return "ok"
    except SizeGuardError as err:
        return "skipped (%s)" % err


def _clip(text, width=44):
    return text if len(text) <= width else text[:width - 2] + ".."


def cmd_check(args) -> int:
    ring, canon = _build(args, args.expr)
    guards = _guards(args)
    axioms = _verify_note(ring, guards)
    verdict = check_property(ring, args.property, args.e, guards)
    results = [{"kind": "axioms", "status": axioms},
               verdict.to_dict()]
    if args.format == "json":
        _emit(args, _payload(args, canon, results))
    else:
        print("ring: %s  (order %d)" % (ring.provenance, ring.order))
        print("axioms: %s" % axioms)
        rel = ("%s relative to %s" % (verdict.property, verdict.idempotent)
               if verdict.idempotent is not None else verdict.property)
        print("%s: %s" % (rel, _MARK[verdict.status]))
        if verdict.witness_labels:
            print("witness: %s" % (", ".join(verdict.witness_labels)))
        if verdict.detail:
            print("detail: %s" % verdict.detail)
        if verdict.reason:
            print("reason: %s" % verdict.reason)
    # a failing property is an answer, not an error; a guard skip is not
    # an answer
    return 3 if verdict.status == "skipped" else 0


def cmd_survey(args) -> int:
    ring, canon = _build(args, args.expr)
    guards = _guards(args)
    axioms = _verify_note(ring, guards)
    globals_res = [check_property(ring, p, None, guards).to_dict()
                   for p in GLOBAL_PROPS]
    rows = []
    for f in (int(x) for x in idempotents(ring)):
        verdicts = {}
        for prop in E_PROPS:
            if f == ring.zero:
                # relative conditions degenerate at zero: every product
                # is crushed by the idempotent
                verdicts[prop] = "holds"
            else:
                verdicts[prop] = check_property(ring, prop, f, guards).status
        rows.append({
            "idempotent": ring.labels[f],
            "left_semicentral": bool(is_left_semicentral(ring, f)),
            "right_semicentral": bool(is_right_semicentral(ring, f)),
            "verdicts": verdicts,
        })
    results = [{"kind": "axioms", "status": axioms},
               {"kind": "global", "verdicts": globals_res},
               {"kind": "matrix", "rows": rows}]
    if args.format == "json":
        _emit(args, _payload(args, canon, results))
        return 0
    print("ring: %s  (order %d, %d idempotents)"
          % (ring.provenance, ring.order, len(rows)))
    print("axioms: %s" % axioms)
    for v in globals_res:
        print("  %-28s %s" % (v["property"], _MARK[v["status"]]))
    head = ("idempotent", "lsc", "rsc") + tuple(s for _, s in _SHORT)
    width = max([len(head[0])] + [len(_clip(r["idempotent"])) for r in rows])
    print("  ".join(["%-*s" % (width, head[0])] + list(head[1:])))
    for r in rows:
        cells = ["%-*s" % (width, _clip(r["idempotent"])),
                 "yes" if r["left_semicentral"] else "no ",
                 "yes" if r["right_semicentral"] else "no "]
        for prop, short in _SHORT:
            cells.append("%-*s" % (len(short), _CELL[r["verdicts"][prop]]))
        print("  ".join(cells))
    print("cells: + holds, - fails, ? guard-skipped")
    return 0


def cmd_laws(args) -> int:
    guards = _guards(args)
    if args.corpus:
        corpus = load_corpus(args.corpus, guards, args.cache)
    else:
        corpus = default_corpus(guards, args.cache)
    reports = run_laws(corpus, guards, args.law or None)
    violated = sum(r.totals["violated"] for r in reports)
    results = [r.to_dict() for r in reports]
    if args.format == "json":
        _emit(args, _payload(args, None, results))
        return 1 if violated else 0
    print("corpus: %s (%d entries)" % (corpus.source, len(corpus.entries)))
    for ent in corpus.entries:
        if ent.note:
            print("  note: %s: %s" % (ent.text, ent.note))
    for r in reports:
        t = r.totals
        print("%-22s holds=%-4d violated=%-3d not-applicable=%-3d skipped=%d"
              % (r.law, t["holds"], t["violated"], t["not-applicable"],
                 t["skipped"]))
        for c in r.cases:
            if c.status == "violated":
                print("  VIOLATED %s idempotent=%s: %s"
                      % (c.ring, c.idempotent, c.reason or c.detail))
                if c.witness_labels:
                    print("    witness: %s" % ", ".join(c.witness_labels))
    print("violated cases: %d" % violated)
    return 1 if violated else 0


def cmd_describe(args) -> int:
    ring, canon = _build(args, args.expr)
    guards = _guards(args)
    axioms = _verify_note(ring, guards)
    ids = [int(x) for x in idempotents(ring)]
    nil = [int(x) for x in nilpotents(ring)]
    cen = [int(x) for x in center(ring)]
    summary = {
        "kind": "summary",
        "order": ring.order,
        "zero": ring.labels[ring.zero],
        "one": ring.labels[ring.one],
        "idempotent_count": len(ids),
        "idempotents": [{
            "label": ring.labels[f],
            "left_semicentral": bool(is_left_semicentral(ring, f)),
            "right_semicentral": bool(is_right_semicentral(ring, f)),
        } for f in ids],
        "nilpotent_count": len(nil),
        "nilpotents": [ring.labels[x] for x in nil],
        "center_size": len(cen),
        "center": [ring.labels[x] for x in cen],
    }
    globals_res = [check_property(ring, p, None, guards).to_dict()
                   for p in GLOBAL_PROPS]
    results = [{"kind": "axioms", "status": axioms}, summary,
               {"kind": "global", "verdicts": globals_res}]
    if args.format == "json":
        _emit(args, _payload(args, canon, results))
        return 0
    print("ring: %s  (order %d)" % (ring.provenance, ring.order))
    print("axioms: %s" % axioms)
    print("zero: %s   one: %s" % (summary["zero"], summary["one"]))
    print("idempotents (%d):" % len(ids))
    for row in summary["idempotents"]:
        flags = []
        if row["left_semicentral"]:
            flags.append("left-semicentral")
        if row["right_semicentral"]:
            flags.append("right-semicentral")
        print("  %s%s" % (_clip(row["label"]),
                          ("  [" + ", ".join(flags) + "]") if flags else ""))
    shown = ", ".join(_clip(x, 20) for x in summary["nilpotents"][:12])
    more = "" if len(nil) <= 12 else ", ... (%d total)" % len(nil)
    print("nilpotents (%d): %s%s" % (len(nil), shown or "none", more))
    print("center: %d elements" % len(cen))
    for v in globals_res:
        print("  %-28s %s" % (v["property"], _MARK[v["status"]]))
    return 0


def _parser():
    top = argparse.ArgumentParser(
        prog="finring",
        description="finite ring toolkit: build rings from expressions, "
                    "check properties, sweep laws")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"),
                        default="table", help="output mode")
    common.add_argument("--max-pair-order", type=int,
                        default=DEFAULT_GUARDS.pair_cap,
                        help="largest order for quadratic sweeps")
    common.add_argument("--max-triple-order", type=int,
                        default=DEFAULT_GUARDS.triple_cap,
                        help="largest order for cubic sweeps")
    common.add_argument("--cache", metavar="DIR", default=None,
                        help="directory for cached operation tables")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common],
                       help="decide one property of one ring")
    p.add_argument("expr", help="ring expression, e.g. 'U(2,Z(3))'")
    p.add_argument("property", help="property name; dashes are fine")
    p.add_argument("--e", default=None,
                   help="idempotent element literal for relative properties")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("survey", parents=[common],
                       help="full idempotent-by-property matrix")
    p.add_argument("expr")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("laws", parents=[common],
                       help="sweep the law suite over a corpus")
    p.add_argument("--law", action="append", default=[],
                   metavar="ID", help="run only this law (repeatable); "
                                      "known: %s" % ", ".join(LAW_ORDER))
    p.add_argument("--corpus", default=None,
                   help="corpus manifest path (default: bundled)")
    p.set_defaults(func=cmd_laws)

    p = sub.add_parser("describe", parents=[common],
                       help="order, idempotents, nilpotents, center, "
                            "global properties")
    p.add_argument("expr")
    p.set_defaults(func=cmd_describe)
    return top


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    top = _parser()
    args = top.parse_args(argv)
    args.echo = argv
    try:
        return args.func(args)
    except ParseError as err:
        print("parse error: %s" % err, file=sys.stderr)
        return 2
    except SizeGuardError as err:
        print("size guard: %s" % err, file=sys.stderr)
        return 3
    except (RingError, ValueError) as err:
        print("error: %s" % err, file=sys.stderr)
        return 2
    except OSError as err:
        print("error: %s" % err, file=sys.stderr)
        return 2


def entry():
    sys.exit(main())
