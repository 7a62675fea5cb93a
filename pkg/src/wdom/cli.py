"""``wdom`` command line: compute, classify, verify, catalog, table.

Exit status: 0 success or all PASS, 1 a FAIL verdict, 2 usage error,
3 node budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog as cat
from . import harness as hv
from .domination import LabelingError, WeightVector, format_labeling, is_secure_w_dominating, is_w_dominating
from .graph import GraphError, product_symmetries, parse_graph_expr
from .solver import SolverConfig, Status, solve

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
DEFAULT_BUDGET = 10**8


class UsageError(Exception):
    pass


def _budget(text: str) -> int:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"budget must be a number, got {text!r}") from None
    if v < 1 or v != int(v):
        raise argparse.ArgumentTypeError(f"budget must be a positive integer, got {text!r}")
    return int(v)


def _n_range(text: str) -> range:
    for sep in ("..", "-"):
        if sep in text:
            a, b = text.split(sep, 1)
            break
    else:
        a = b = text
    try:
        lo, hi = int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"empty or invalid range {text!r}")
    return range(lo, hi + 1)


def _param_name(w, secure) -> str:
    return ("γ^s" if secure else "γ") + "_(" + ",".join(map(str, w)) + ")"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wdom", description="Exact (secure) w-domination numbers of small graphs.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--budget", type=_budget, default=DEFAULT_BUDGET, help="node budget per solve (e.g. 2e8)")
    common.add_argument("--workers", type=int, default=1, help="worker processes for the solver")
    sub = p.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("compute", parents=[common], help="solve one graph")
    c.add_argument("--graph", required=True, help="graph expression, e.g. lex(path:4,cycle:7)")
    c.add_argument("--w", required=True, help="weight vector, e.g. 2,2,1")
    c.add_argument("--secure", action="store_true", help="secure variant")
    c.add_argument("--check", action="store_true", help="re-verify the witness independently")

    k = sub.add_parser("classify", parents=[common], help="H-class and the product case it selects")
    k.add_argument("--graph", required=True, help="graph expression for H")

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("--suite", required=True, choices=list(hv.SUITES))
    v.add_argument("--seed", type=int, default=0, help="seed for --random instances")
    v.add_argument("--random", type=int, default=0, metavar="K",
                   help="also check the inequalities on K seeded random graphs")
    v.add_argument("--verbose", action="store_true", help="show every sub-check")

    t = sub.add_parser("catalog", parents=[common], help="export the formula catalog (CSV by default)")
    t.add_argument("--out", help="write to a file instead of stdout")

    e = sub.add_parser("table", parents=[common], help="closed-form values of a path or cycle formula")
    e.add_argument("--family", required=True, choices=("path", "cycle"))
    e.add_argument("--param", required=True, help="formula key, e.g. 221, s111, secdom:v")
    e.add_argument("--n", type=_n_range, required=True, help="N or A..B")
    e.add_argument("--check", action="store_true", help="add the exact solver value per row")
    e.add_argument("--graph", help="H for product formulas (default: a representative of the case)")
    return p


# -- verbs ---------------------------------------------------------------------

def _parse(expr):
    try:
        return parse_graph_expr(expr)
    except GraphError as exc:
        raise UsageError(str(exc)) from None


def _solve_parsed(pg, w, secure, args):
    syms = ()
    if pg.factors is not None:
        a, b, idx = pg.factors
        syms = tuple(product_symmetries(a.graph, b.graph, idx))
    cfg = SolverConfig(secure=secure, node_budget=args.budget, workers=args.workers, symmetries=syms)
    return solve(pg.graph, w, cfg)


def cmd_compute(args, out) -> int:
    pg = _parse(args.graph)
    try:
        w = WeightVector(int(t) for t in args.w.strip().strip("()").split(","))
    except (ValueError, LabelingError) as exc:
        raise UsageError(f"malformed weight vector {args.w!r}: {exc}") from None
    r = _solve_parsed(pg, w, args.secure, args)
    verified = None
    if args.check and r.witness is not None:
        if args.secure:
            verified = is_secure_w_dominating(pg.graph, w, r.witness)[0]
        else:
            verified = is_w_dominating(pg.graph, w, r.witness)
    if args.json:
        doc = {
            "graph": args.graph,
            "w": list(w.entries),
            "secure": args.secure,
            "value": r.value,
            "witness": list(r.witness.values) if r.witness else None,
            "status": r.status.value,
            "nodes": r.stats.nodes,
            "ms": int(round(r.stats.elapsed * 1000)),
        }
        if verified is not None:
            doc["verified"] = verified
        print(json.dumps(doc, ensure_ascii=False), file=out)
    else:
        g = pg.graph
        print(f"graph    {args.graph} ({g.n} vertices, {g.m} edges)", file=out)
        print(f"param    {_param_name(w.entries, args.secure)}", file=out)
        if r.status is Status.BUDGET:
            print(f"value    unknown, >= {r.lower_bound}" + (f", <= {r.upper_bound}" if r.upper_bound else ""),
                  file=out)
        else:
            print(f"value    {r.value if r.value is not None else 'none (no such function)'}", file=out)
        if r.witness is not None:
            print(f"witness  {format_labeling(r.witness)}", file=out)
        if verified is not None:
            print(f"check    witness {'verified' if verified else 'REJECTED'}", file=out)
        print(f"status   {r.status.value}, {r.stats.nodes} nodes, {r.stats.elapsed * 1000:.0f} ms", file=out)
    if r.status is Status.BUDGET:
        return EXIT_BUDGET
    if verified is False:
        return EXIT_FAIL
    return EXIT_OK


def cmd_classify(args, out) -> int:
    pg = _parse(args.graph)
    hs = hv.Harness(args.budget, args.workers)
    try:
        cls = hv.classify_H(pg.graph, hs)
    except hv._Skip as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_BUDGET
    rows = {}
    for fam, (w, dispatch) in hv.PRODUCT_PARAMS.items():
        try:
            rows[fam] = str(dispatch(cls))
        except cat.CaseError as exc:
            rows[fam] = f"no case ({exc})"
    sec_case = None
    try:
        sec_case = cat.secure_domination_case(cls)
    except cat.CaseError:
        pass
    if args.json:
        tot = cls.sec_tot if cls.sec_tot != cat.INF else None
        print(json.dumps({"graph": args.graph, "gamma": cls.gamma, "secure_domination": cls.sec_dom,
                          "secure_total": tot, "complete": cls.is_complete, "case": sec_case,
                          "products": rows}, ensure_ascii=False), file=out)
    else:
        print(f"H        {args.graph} ({pg.graph.n} vertices)", file=out)
        print(f"class    {cls.short()}", file=out)
        if sec_case:
            print(f"case     ({sec_case})", file=out)
        for fam, text in rows.items():
            w = hv.PRODUCT_PARAMS[fam][0]
            print(f"{fam:13s}{_param_name(w, True)}(G∘H) {text}", file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    hs = hv.Harness(args.budget, args.workers)
    reports = hv.run_suite(args.suite, hs)
    if args.random:
        for i in range(args.random):
            g = hv.random_graph(6, 0.5, args.seed + i, no_isolated=True)
            for w in hv.WEIGHT_MATRIX:
                reports.append(hv.verify_inequalities(g, w, harness=hs,
                                                      label=f"random seed={args.seed + i} w={hv._fmt_w(w)}"))
    if args.json:
        print(hv.reports_json(reports), file=out)
    else:
        print(hv.format_reports(reports, args.verbose), file=out)
    verdicts = {r.verdict for r in reports}
    if hv.Verdict.FAIL in verdicts:
        return EXIT_FAIL
    if any(r.verdict is hv.Verdict.SKIPPED and "budget" in r.observed for r in reports):
        return EXIT_BUDGET
    return EXIT_OK


def cmd_catalog(args, out) -> int:
    text = cat.export_json() if args.json else cat.export_csv()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
        if not text.endswith("\n"):
            out.write("\n")
    return EXIT_OK


def emit_table(family: str, param: str, n_range, check: bool = False, h_expr: str | None = None,
               budget: int | None = DEFAULT_BUDGET, workers: int = 1) -> list[dict]:
    """One row per n: formula value (or the domain violation) and, with
    ``check``, the exact solver value on P_n / C_n (or on P_n∘H, C_n∘H)."""
    f = (cat.path_formula if family == "path" else cat.cycle_formula)(param)
    h = None
    if check and f.h_case is not None:
        if h_expr is None:
            fam = hv._FAMILY_PREFIX[f.product_family]
            h_expr = "path:3" if fam == "weak-roman" else hv.H_REPRESENTATIVES[fam][f.h_case]
        h = parse_graph_expr(h_expr).graph
    hs = hv.Harness(budget, workers)
    rows = []
    for n in n_range:
        row = {"n": n, "formula": None, "solver": None, "note": ""}
        try:
            row["formula"] = f(n)
        except cat.DomainError as exc:
            row["note"] = f"outside domain (n >= {exc.min_n})"
        if check:
            g = parse_graph_expr(f"{family}:{n}").graph
            try:
                if h is None:
                    row["solver"] = hs.value(g, f.target.w, f.target.secure)
                else:
                    row["solver"] = hs.product_value(g, h, f.target.w, f.target.secure)
            except hv._Skip:
                row["note"] = (row["note"] + "; " if row["note"] else "") + "budget exhausted"
            except GraphError as exc:
                row["note"] = (row["note"] + "; " if row["note"] else "") + str(exc)
            if row["formula"] is not None and row["solver"] is not None and row["formula"] != row["solver"]:
                row["note"] = "MISMATCH"
        rows.append(row)
    return rows


def cmd_table(args, out) -> int:
    try:
        f = (cat.path_formula if args.family == "path" else cat.cycle_formula)(args.param)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    rows = emit_table(args.family, args.param, args.n, args.check, args.graph, args.budget, args.workers)
    if args.json:
        print(json.dumps({"family": args.family, "param": args.param, "target": str(f.target),
                          "formula": f.text, "rows": rows}, ensure_ascii=False), file=out)
    else:
        shown = ("P" if args.family == "path" else "C") + "_n" + ("∘H" if f.h_case else "")
        print(f"{f.target}({shown}) = {f.text}", file=out)
        print("   n  formula" + ("  solver" if args.check else "") + "  note", file=out)
        for r in rows:
            fv = "-" if r["formula"] is None else str(r["formula"])
            line = f"{r['n']:4d}  {fv:>7s}"
            if args.check:
                line += f"  {'-' if r['solver'] is None else r['solver']:>6}"
            print(line + ("  " + r["note"] if r["note"] else ""), file=out)
    if any(r["note"] == "MISMATCH" for r in rows):
        return EXIT_FAIL
    if any("budget" in r["note"] for r in rows):
        return EXIT_BUDGET
    return EXIT_OK


VERBS = {"compute": cmd_compute, "classify": cmd_classify, "verify": cmd_verify,
         "catalog": cmd_catalog, "table": cmd_table}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.workers < 1:
        print("wdom: --workers must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return VERBS[args.verb](args, out)
    except (UsageError, GraphError, LabelingError, cat.DomainError) as exc:
        print(f"wdom: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
