"""Command-line front end.

Exit codes: 0 success / true, 1 verification false or failed, 2 usage,
parse or cap errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .closed import decode, eq_via_decode
from .coxeter import format_word, parse_word
from .fold import apply_morphism, check_respects_lcm, fold_once, fold_to_small_no_triangle
from .graph import GraphError, has_no_triangle, is_small_type, is_spherical, load_graph
from .laurent import to_text
from .monoid import DEFAULT_CAP, CapExceeded, LcmUndecided, lcm, monoid_eq_bfs
from .rep import RepContext, verify_inverse, verify_relations, verify_tpoly
from .roots import RootError, root_context
from .suites import verify_closed, verify_order

OK, FALSE, ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, payload, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, default=str))
    elif text:
        print(text)


def _small_no_triangle(g):
    if not (is_small_type(g) and has_no_triangle(g)):
        raise UsageError("this command needs a small-type graph with no triangle")


def cmd_graph_check(args) -> int:
    g = load_graph(args.file)
    verdicts = {}
    if args.small_type:
        verdicts["small_type"] = is_small_type(g)
    if args.no_triangle:
        verdicts["no_triangle"] = has_no_triangle(g)
    if args.spherical:
        T = args.subset.split(",") if args.subset else None
        verdicts["spherical"] = is_spherical(g, T)
    if not verdicts:
        verdicts = {
            "small_type": is_small_type(g),
            "no_triangle": has_no_triangle(g),
            "spherical": is_spherical(g),
        }
        _emit(args, verdicts, "\n".join(f"{k}: {str(v).lower()}" for k, v in verdicts.items()))
        return OK
    if len(verdicts) == 1:
        text = str(next(iter(verdicts.values()))).lower()
    else:
        text = "\n".join(f"{k}: {str(v).lower()}" for k, v in verdicts.items())
    _emit(args, verdicts, text)
    return OK if all(verdicts.values()) else FALSE


def cmd_roots(args) -> int:
    g = load_graph(args.file)
    ctx = root_context(g)
    roots = ctx.enumerate_positive_roots(args.max_depth)
    rows = [{"root": ctx.to_dict(r), "depth": ctx.depth(r)} for r in roots]
    text = "\n".join(f"{ctx.depth(r):>3}  {ctx.format(r)}" for r in roots)
    _emit(args, rows, text)
    return OK


def cmd_tpoly(args) -> int:
    g = load_graph(args.file)
    _small_no_triangle(g)
    rep = RepContext(g)
    R = rep.roots
    if args.root:
        roots = [R.root(json.loads(args.root))]
    else:
        roots = R.enumerate_positive_roots(args.max_depth)
    verts = [args.vertex] if args.vertex else list(g.vertices)
    rows = []
    for beta in roots:
        for s in verts:
            rows.append({"s": s, "root": R.to_dict(beta), "depth": R.depth(beta),
                         "T": to_text(rep.tpoly(s, beta))})
    text = "\n".join(f"T({r['s']}, {R.format(R.vector(r['root']))}) = {r['T']}" for r in rows)
    _emit(args, rows, text)
    return OK


def cmd_verify(args) -> int:
    g = load_graph(args.file)
    suite = args.suite
    if suite in ("relations", "tpoly", "inverse"):
        _small_no_triangle(g)
        ctx = RepContext(g)
        fn = {"relations": verify_relations, "tpoly": verify_tpoly,
              "inverse": verify_inverse}[suite]
        report = fn(ctx, args.max_depth)
    elif suite == "order":
        report = verify_order(g, args.max_depth)
    else:
        report = verify_closed(g, args.max_depth, samples=args.samples, seed=args.seed)
    report.graph = args.file
    _emit(args, report.to_dict(), report.to_text())
    if not report.ok and not args.json:
        failed = [c for c in report.to_dict()["checks"] if not c["passed"]]
        print(json.dumps(failed, indent=2, default=str), file=sys.stderr)
    return OK if report.ok else FALSE


def cmd_decode(args) -> int:
    g = load_graph(args.file)
    _small_no_triangle(g)
    seq = decode(g, parse_word(args.word or ""))
    _emit(args, [list(u.canonical) for u in seq], "\n".join(str(u) for u in seq))
    return OK


def cmd_eq(args) -> int:
    g = load_graph(args.file)
    a, b = parse_word(args.a), parse_word(args.b)
    if args.method == "decode":
        _small_no_triangle(g)
        res = eq_via_decode(g, a, b)
    else:
        res = monoid_eq_bfs(g, a, b, args.cap)
    _emit(args, {"equal": res}, str(res).lower())
    return OK if res else FALSE


def cmd_lcm(args) -> int:
    g = load_graph(args.file)
    res = lcm(g, parse_word(args.a), parse_word(args.b), length_cap=args.cap)
    if res is None:
        _emit(args, {"lcm": None}, "none")
    else:
        _emit(args, {"lcm": list(res)}, format_word(res))
    return OK


def cmd_fold(args) -> int:
    g = load_graph(args.file)
    phi = fold_to_small_no_triangle(g) if args.twice else fold_once(g)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(phi.target.to_json(indent=2) + "\n")
    if args.map:
        with open(args.map, "w") as fh:
            fh.write(phi.to_json(indent=2) + "\n")
    summary = {
        "source_vertices": len(g),
        "target_vertices": len(phi.target),
        "target_edges": len(phi.target.labels),
        "small_type": is_small_type(phi.target),
        "no_triangle": has_no_triangle(phi.target),
    }
    if args.word is not None:
        summary["image"] = list(apply_morphism(phi, parse_word(args.word)))
    lines = [f"{k}: {str(v).lower() if isinstance(v, bool) else v}" for k, v in summary.items()
             if k != "image"]
    if "image" in summary:
        lines.append("image: " + format_word(summary["image"]))
    status = OK
    if args.check_lcm:
        first = phi.stages[0] if phi.stages else phi
        report = check_respects_lcm(first, cap=args.cap)
        summary["respects_lcm"] = report.to_dict()
        lines.append(report.to_text())
        status = OK if report.ok else FALSE
    if not args.output and not args.map and not args.json:
        lines.append(phi.target.to_json())
    _emit(args, summary, "\n".join(lines))
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="artinkit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("file", help="graph JSON file")
        sp.add_argument("--json", action="store_true", help="machine-readable output")

    sp = sub.add_parser("graph-check", help="structural predicates of a graph")
    common(sp)
    sp.add_argument("--small-type", action="store_true")
    sp.add_argument("--no-triangle", action="store_true")
    sp.add_argument("--spherical", action="store_true")
    sp.add_argument("--subset", help="comma-separated vertex subset for --spherical")
    sp.set_defaults(func=cmd_graph_check)

    sp = sub.add_parser("roots", help="positive roots up to a depth")
    common(sp)
    sp.add_argument("--max-depth", type=int, default=5)
    sp.set_defaults(func=cmd_roots)

    sp = sub.add_parser("tpoly", help="the polynomials T(s, beta)")
    common(sp)
    sp.add_argument("--vertex")
    sp.add_argument("--root", help='root as JSON, e.g. \'{"s": 1, "t": 1}\'')
    sp.add_argument("--max-depth", type=int, default=3)
    sp.set_defaults(func=cmd_tpoly)

    sp = sub.add_parser("verify", help="run a verification suite")
    common(sp)
    sp.add_argument("--suite", choices=["relations", "tpoly", "inverse", "closed", "order"],
                    required=True)
    sp.add_argument("--max-depth", type=int, default=5,
                    help="root depth (relations, tpoly, inverse) or word length (order, closed)")
    sp.add_argument("--samples", type=int, default=500)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("decode", help="decode a positive word into its u_i sequence")
    common(sp)
    sp.add_argument("--word", default="")
    sp.set_defaults(func=cmd_decode)

    sp = sub.add_parser("eq", help="equality of two positive words")
    common(sp)
    sp.add_argument("-a", required=True)
    sp.add_argument("-b", required=True)
    sp.add_argument("--method", choices=["decode", "bfs"], default="decode")
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.set_defaults(func=cmd_eq)

    sp = sub.add_parser("lcm", help="least common multiple of two positive words")
    common(sp)
    sp.add_argument("-a", required=True)
    sp.add_argument("-b", required=True)
    sp.add_argument("--cap", type=int, default=200, help="maximal lcm length searched")
    sp.set_defaults(func=cmd_lcm)

    sp = sub.add_parser("fold", help="fold into small type with no triangle")
    common(sp)
    sp.add_argument("--twice", action="store_true")
    sp.add_argument("-o", "--output", help="write the target graph here")
    sp.add_argument("--map", help="write the morphism JSON here")
    sp.add_argument("--check-lcm", action="store_true")
    sp.add_argument("--word", help="also print the image of this word")
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.set_defaults(func=cmd_fold)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ERROR if exc.code else OK
    try:
        return args.func(args)
    except (GraphError, RootError, UsageError, CapExceeded, LcmUndecided,
            OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
