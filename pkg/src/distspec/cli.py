"""Command-line entry point.

Exit codes: 0 success / all claims hold, 1 a verified claim was violated,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import families
from .classify import classification_json, classify_structural
from .graphs import Graph, Graph6Error, DisconnectedError, apsp, parse_graph6, write_graph6
from .scan import family_cross_check, moment_audit, scan_order, write_report
from .spectra import char_poly_exact, eigenvalues, lambda2_vs_threshold
from .verify import SUITES, run_suite


def _digits(tol):
    if tol <= 0:
        return 4
    return max(0, -math.floor(math.log10(tol)))


def _parse_edges(spec):
    edges = []
    top = -1
    for chunk in spec.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            u, v = (int(x) for x in chunk.split("-"))
        except ValueError as exc:
            raise ValueError(f"bad edge {chunk!r}; expected like 0-1") from exc
        edges.append((u, v))
        top = max(top, u, v)
    if not edges:
        raise ValueError("no edges given")
    return Graph.from_edges(top + 1, edges)


def _gen_graph(kind, params):
    if kind == "complete":
        (n,) = params
        return families.build_complete(n)
    if kind == "pendant":
        s, t = params
        return families.build_pendant_clique(s, t)
    if kind == "cone":
        if len(params) < 2:
            raise ValueError("cone needs at least two clique sizes")
        return families.build_cone_of_cliques(tuple(params))
    raise ValueError(f"unknown generator {kind!r}; use complete|pendant|cone")


def _add_graph_args(sp):
    sp.add_argument("graph6", nargs="?", help="graph as a graph6 string")
    sp.add_argument("--edges", help='edge list like "0-1,1-2,2-3"')
    sp.add_argument("--gen", nargs="+", metavar=("FAMILY", "PARAM"),
                    help="generate: complete N | pendant S T | cone N1 N2 ...")


def _resolve_graph(args):
    picked = [x for x in (args.graph6, args.edges, args.gen) if x]
    if len(picked) != 1:
        raise ValueError("give exactly one of: graph6 string, --edges, --gen")
    if args.graph6:
        return parse_graph6(args.graph6)
    if args.edges:
        return _parse_edges(args.edges)
    kind, *params = args.gen
    return _gen_graph(kind, [int(p) for p in params])


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="distspec",
        description="Distance spectra of connected graphs: exact polynomials, "
                    "family classification against (17-sqrt329)/2, and "
                    "desk-scale cospectrality scans.")
    ap.add_argument("--json", action="store_true", help="emit JSON instead of text")
    ap.add_argument("--tol", type=float, default=1e-4,
                    help="float display tolerance (sets printed decimals; default 1e-4)")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="exact char poly and floating spectrum")
    _add_graph_args(sp)

    sp = sub.add_parser("classify", help="family membership and exact threshold verdict")
    _add_graph_args(sp)

    sp = sub.add_parser("gen", help="emit a family graph as graph6")
    sp.add_argument("family", choices=["complete", "pendant", "cone"])
    sp.add_argument("params", nargs="+", type=int)

    sp = sub.add_parser("verify", help="run a named property suite")
    sp.add_argument("suite", choices=sorted(SUITES))

    sp = sub.add_parser("scan", help="cospectrality scan of a full census")
    sp.add_argument("--order", type=int)
    sp.add_argument("--graph6", dest="graph6_file", help="graph6 file (one graph per line)")
    sp.add_argument("--jobs", type=int,
                    default=int(os.environ.get("DISTSPEC_JOBS", "1")))
    sp.add_argument("--out", help="directory for JSON/CSV reports")

    sp = sub.add_parser("cross-check", help="family polynomial distinctness per order")
    sp.add_argument("--max-order", type=int, default=14)

    sp = sub.add_parser("moment-audit", help="exact trace identities for one graph")
    _add_graph_args(sp)
    return ap


def _fmt(x, digits):
    return f"{x:.{digits}f}"


def _cmd_spectrum(args, digits):
    g = _resolve_graph(args)
    dm = apsp(g)
    p = char_poly_exact(dm)
    eig = eigenvalues(dm.d)
    if args.json:
        print(json.dumps({"graph6": write_graph6(g), "poly": p.serialize(),
                          "eigenvalues": [round(v, digits) for v in eig]}))
    else:
        print(f"P_D(x) = {p.pretty()}")
        print("spectrum: " + " ".join(_fmt(v, digits) for v in eig))
    return 0


def _cmd_classify(args, digits):
    g = _resolve_graph(args)
    cert = classify_structural(g)
    payload = classification_json(g, cert)
    if args.json:
        print(json.dumps(payload))
    else:
        if payload["verdict"] == "family":
            print(f"family {payload['descriptor']}, exact: {payload['exact']}")
        else:
            print(f"above threshold, witness {payload['witness']}, "
                  f"exact: {payload['exact']}")
    return 0


def _cmd_gen(args, digits):
    g = _gen_graph(args.family, args.params)
    print(write_graph6(g))
    return 0


def _cmd_verify(args, digits):
    rows = run_suite(args.suite)
    ok = all(passed for _, passed, _ in rows)
    if args.json:
        print(json.dumps({"suite": args.suite, "ok": ok,
                          "checks": [{"name": n, "pass": p, "detail": d}
                                     for n, p, d in rows]}))
    else:
        width = max(len(n) for n, _, _ in rows)
        for name, passed, detail in rows:
            print(f"{name:<{width}}  {'PASS' if passed else 'FAIL'}  {detail}")
        print(f"{args.suite}: {sum(p for _, p, _ in rows)}/{len(rows)} checks pass")
    return 0 if ok else 1


def _cmd_scan(args, digits):
    report = scan_order(n=args.order, graph6_path=args.graph6_file, jobs=args.jobs)
    if args.out:
        write_report(report, args.out)
    if args.json:
        print(json.dumps(report.to_json()))
    else:
        print(report.banner)
        print(f"order {report.order}: {report.count} graphs, "
              f"{len(report.buckets)} polynomial buckets, "
              f"{report.below_equal_count} below/equal threshold "
              f"({report.family_below_count} by the independent family route), "
              f"{report.seconds:.1f}s")
        if report.violations:
            for v in report.violations:
                print(f"VIOLATION: {v}")
        else:
            print("zero violations")
    return 0 if report.ok else 1


def _cmd_cross_check(args, digits):
    res = family_cross_check(args.max_order)
    if args.json:
        print(json.dumps(res))
    else:
        print(f"orders <= {res['n_max']}: {res['polynomials_checked']} checks, "
              f"{len(res['violations'])} violations")
        for v in res["violations"]:
            print(f"VIOLATION: {v}")
    return 0 if res["ok"] else 1


def _cmd_moment_audit(args, digits):
    g = _resolve_graph(args)
    ok = moment_audit(g)
    if args.json:
        print(json.dumps({"graph6": write_graph6(g), "ok": ok}))
    else:
        print("moment identities hold" if ok else "moment identity VIOLATED")
    return 0 if ok else 1


_COMMANDS = {
    "spectrum": _cmd_spectrum,
    "classify": _cmd_classify,
    "gen": _cmd_gen,
    "verify": _cmd_verify,
    "scan": _cmd_scan,
    "cross-check": _cmd_cross_check,
    "moment-audit": _cmd_moment_audit,
}


def main(argv=None):
    ap = _build_parser()
    args = ap.parse_args(argv)
    digits = _digits(args.tol)
    try:
        return _COMMANDS[args.command](args, digits)
    except (Graph6Error, DisconnectedError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
