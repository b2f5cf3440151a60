"""Command-line entry point.

Exit codes: 0 when every requested check passes, 1 when some mathematical
check fails, 2 for operational errors (I/O, malformed files, caps).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import enumeration as en
from . import semibrace as sb
from . import structfile as sf
from . import suite, truss, ybe
from .algebra import as_group
from .errors import KindFieldMismatch, NotVerified, TrussLabError
from .report import VerificationReport

log = logging.getLogger("trusslab")

OK, FAIL, ERROR = 0, 1, 2


def _resolve(path):
    """Paths under ``fixtures/`` fall back to the bundled fixtures."""
    if not os.path.exists(path):
        head, name = os.path.split(path)
        if os.path.basename(head) == "fixtures" and name in sf.fixture_names():
            return sf.load_fixture(name)
    return sf.load(path)


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, indent=2))
    elif not args.quiet:
        print(text)


def _emit_report(args, rep: VerificationReport):
    _emit(args, rep.to_dict(), rep.format_text())
    return OK if rep.passed else FAIL


def _structure_id(path, doc):
    return doc.name or os.path.basename(path)


def _verify_kind(doc, kind):
    t = lambda m: tuple(tuple(r) for r in m)
    if kind == "semigroup":
        return suite.semigroup_suite(t(doc.table))
    if kind == "group":
        rep = VerificationReport("group")
        rep.run("is a group", truss._group_check, t(doc.table))
        if rep:
            rep.extend(suite.group_suite(as_group(t(doc.table))))
        return rep
    if kind == "semi-truss":
        return truss.verify_left_semi_truss(t(doc.add), t(doc.mul), t(doc.lam))
    if kind == "brace-like":
        return truss.verify_brace_like(t(doc.add), t(doc.mul), t(doc.lam))
    if kind == "skew-truss":
        return truss.verify_skew_truss(t(doc.add), t(doc.mul), tuple(doc.sigma))
    if kind == "semi-brace":
        return sb.verify_left_semi_brace(t(doc.add), t(doc.mul))
    if kind == "almost":
        return sb.verify_almost(t(doc.add), t(doc.mul), tuple(doc.iota))
    raise KindFieldMismatch(f"no verifier for kind {kind!r}")


AUTO_ORDER = {
    "iota": ["almost"],
    "lambda": ["brace-like", "semi-truss"],
    "sigma": ["skew-truss"],
    None: ["semi-brace"],
}


def cmd_verify(args):
    doc = _resolve(args.path)
    if doc.kind in sf.SINGLE:
        kind_choice = doc.kind
    else:
        kind_choice = args.kind
    if kind_choice == "auto":
        field = next((f for f, v in (("iota", doc.iota), ("lambda", doc.lam), ("sigma", doc.sigma))
                      if v is not None), None)
        rep = None
        for kind in AUTO_ORDER[field]:
            rep = _verify_kind(doc, kind)
            if rep:
                break
        rep.info["verified as"] = rep.kind if rep else None
    elif kind_choice == "explicit":
        rep = _verify_kind(doc, doc.kind)
    else:
        if kind_choice == "semi-truss" and doc.kind == "brace-like":
            rep = _verify_kind(doc, "semi-truss")
        elif kind_choice != doc.kind:
            raise KindFieldMismatch(f"file is kind {doc.kind!r}, asked to verify as {kind_choice!r}")
        else:
            rep = _verify_kind(doc, kind_choice)
    if doc.kind == "almost" and args.strict:
        s = doc.to_structure()
        rep = sb.verify_almost(s.add, s.mul, s.iota, strict=True)
    rep.structure_id = _structure_id(args.path, doc)
    return _emit_report(args, rep)


def _as_brace_like_or_truss(doc):
    obj = doc.to_structure()
    if isinstance(obj, truss.BraceLikeSemiTruss):
        if not truss.verify_brace_like(obj.add, obj.mul, obj.lam):
            # a brace-like file that is only a semi-truss still gets the weaker analysis
            return truss.LeftSemiTruss(obj.add, obj.mul, obj.lam)
        return obj
    if isinstance(obj, truss.LeftSemiTruss):
        return obj
    if isinstance(obj, sb.LeftSemiBrace):
        obj = sb.as_almost(obj)
    if isinstance(obj, sb.AlmostLeftSemiBrace):
        return sb.almost_to_bracelike(obj)
    raise KindFieldMismatch(f"analyze needs a truss or semi-brace kind, got {doc.kind!r}")


def cmd_analyze(args):
    doc = _resolve(args.path)
    T = _as_brace_like_or_truss(doc)
    rep = truss.analyze(T)
    rep.structure_id = _structure_id(args.path, doc)
    if doc.labels:
        rep.info["labels"] = doc.labels
    return _emit_report(args, rep)


def _write_json(path, obj):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=2)
        fh.write("\n")


def cmd_solution(args):
    doc = _resolve(args.path)
    if doc.kind not in ("semi-brace", "almost"):
        raise KindFieldMismatch(f"solution needs kind semi-brace or almost, got {doc.kind!r}")
    obj = doc.to_structure()
    A = sb.as_almost(obj) if isinstance(obj, sb.LeftSemiBrace) else obj
    rep = ybe.solution_report(
        A,
        check_ybe_=args.check_ybe,
        nondegenerate=args.check_nondegenerate,
        associate=args.associate or args.isocheck,
        isocheck=args.isocheck,
    )
    rep.structure_id = _structure_id(args.path, doc)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        _write_json(os.path.join(args.out, "r.json"), rep.info["r_B"])
        if "r'_B" in rep.info:
            _write_json(os.path.join(args.out, "r-prime.json"), rep.info["r'_B"])
            S = sb.associated_semi_brace(A)
            with open(os.path.join(args.out, "associated.json"), "w", encoding="utf-8") as fh:
                fh.write(sf.serialize(sf.from_structure(S, name="associated left semi-brace")))
    return _emit_report(args, rep)


def cmd_enumerate(args):
    spec = en.EnumSpec(
        order=args.order,
        kind=args.kind,
        modulo_iso=args.modulo_iso,
        max_count=args.max_count,
        time_budget=args.time_budget,
        jobs=args.jobs,
        slow=args.slow,
    )
    res = en.run_enumeration(spec)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        for i, inst in enumerate(res.instances):
            name = f"{args.kind}-{args.order}-{i:05d}"
            path = os.path.join(args.out, name + ".json")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(sf.serialize(sf.from_structure(inst, name=name)))
    payload = {
        "kind": args.kind,
        "order": args.order,
        "modulo_iso": args.modulo_iso,
        "count": len(res.instances),
        "complete": res.complete,
    }
    if not res.complete:
        payload["partial_reason"] = res.reason
    lines = [f"{args.kind} order {args.order}{' up to isomorphism' if args.modulo_iso else ''}: "
             f"{len(res.instances)} instances" + ("" if res.complete else f" (partial: {res.reason})")]
    code = OK
    if args.check_all:
        tally = suite.check_all(args.kind, res.instances, args.jobs)
        payload["check_all"] = tally.to_dict()
        for name in tally.checks:
            lines.append(f"  {tally.passes[name]:6d}/{tally.checks[name]:<6d} {name}")
        for (k, v), c in sorted(tally.info.items()):
            lines.append(f"  {c:6d} with {k} = {v}")
        for idx, name, wit in tally.failures[:20]:
            lines.append(f"  FAIL instance {idx}: {name} witness={wit}")
        if not tally.all_passed:
            code = FAIL
    _emit(args, payload, "\n".join(lines))
    return code


def build_parser():
    def flags(parser, default):
        # accepted before or after the subcommand
        parser.add_argument("--json", action="store_true", default=default,
                            help="machine-readable output")
        parser.add_argument("--quiet", action="store_true", default=default,
                            help="no output, exit code only")
        parser.add_argument("-v", "--verbose", action="store_true", default=default)

    p = argparse.ArgumentParser(prog="trusslab", description=__doc__.splitlines()[0])
    flags(p, False)
    common = argparse.ArgumentParser(add_help=False)
    flags(common, argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="check the axioms of a structure file")
    v.add_argument("path")
    v.add_argument("--kind", default="explicit",
                   help="auto, explicit (the file's kind, default) or a kind name")
    v.add_argument("--strict", action="store_true",
                   help="almost kinds: also require left cancellation and compatibility")
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("analyze", parents=[common], help="additive-structure lemmas on a truss")
    a.add_argument("path")
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("solution", parents=[common], help="build and check the Yang-Baxter solution")
    s.add_argument("path")
    s.add_argument("--check-ybe", action="store_true")
    s.add_argument("--check-nondegenerate", action="store_true")
    s.add_argument("--associate", action="store_true")
    s.add_argument("--isocheck", action="store_true")
    s.add_argument("--out", help="directory for emitted tables")
    s.set_defaults(func=cmd_solution)

    e = sub.add_parser("enumerate", parents=[common], help="all structures of a given order")
    e.add_argument("--order", type=int, required=True)
    e.add_argument("--kind", required=True, choices=en.KINDS)
    e.add_argument("--modulo-iso", action="store_true")
    e.add_argument("--out")
    e.add_argument("--check-all", action="store_true")
    e.add_argument("--max-count", type=int)
    e.add_argument("--time-budget", type=float)
    e.add_argument("--jobs", type=int, default=1)
    e.add_argument("--slow", action="store_true", help="lift the brace-like cap to order 4")
    e.set_defaults(func=cmd_enumerate)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except NotVerified as e:
        if not args.quiet:
            _emit(args, e.report.to_dict(), e.report.format_text())
        return FAIL
    except (TrussLabError, OSError) as e:
        log.debug("operational error", exc_info=True)
        if args.json:
            print(json.dumps({"error": type(e).__name__, "message": str(e)}))
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
