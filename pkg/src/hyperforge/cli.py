"""Command-line driver.

Exit codes: 0 success, 1 a check failed, 2 usage or input error, 3 search
budget exceeded. With ``--format json`` the machine-readable document goes to
stdout and human-readable errors to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from itertools import product

from . import __version__
from .bounds import THEOREMS, evaluate
from .constructions import (
    ConstructionManifest,
    furedi_order_family,
    lambda_lift,
    one_intersecting_h_a,
    sps_star_family,
    sunflower_family,
)
from .diagnostics import diagnostics_report
from .errors import BudgetExceeded, HyperforgeError
from .geometry import affine_plane, projective_plane
from .hypergraph import Hypergraph, format_text, parse_text
from .kernel import DEFAULT_SUPPORT_LIMIT, kernel_degree_rule, min_kernel_exact
from .oracle import SearchSpace, enumerate_trees, max_order, max_size, min_kernel_brute, tree_count
from .sps import (
    SetPairSystem,
    Tree,
    classify_a_graph,
    format_sps,
    is_bounded,
    is_one_cross_intersecting,
    parse_sps,
    sps_order,
    sps_report,
    tree_odd_sum,
    verify_sps,
)

SCHEMA = "hyperforge/1"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(HyperforgeError):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _emit_json(doc: dict) -> None:
    print(json.dumps({"schema": SCHEMA, **doc}, indent=2, sort_keys=False))


def _is_sps_text(text: str) -> bool:
    return text.lstrip().startswith("{")


def _measured(h: Hypergraph) -> dict:
    return {"m": h.m, "order": h.order, "k": h.uniformity, "max_degree": h.max_degree}


# -- construct ---------------------------------------------------------------


def _construct(args) -> int:
    kind = args.family
    if kind == "projective-plane":
        plane = projective_plane(args.q)
        h = plane.hypergraph()
        n = args.q**2 + args.q + 1
        manifest = ConstructionManifest("projective-plane", {"q": args.q}, n, n, n)
    elif kind == "affine-plane":
        h = affine_plane(args.q).hypergraph()
        manifest = ConstructionManifest("affine-plane", {"q": args.q}, args.q**2, args.q**2 + args.q)
    elif kind == "furedi-order":
        h, manifest = furedi_order_family(args.q, args.delta, args.k)
    elif kind == "h-a":
        h, manifest = one_intersecting_h_a(args.k, args.a, args.q)
    elif kind == "lambda-lift":
        base = parse_text(_read(args.input))
        h = lambda_lift(base, args.lam)
        manifest = ConstructionManifest(
            "lambda-lift", {"lambda": args.lam}, base.order + args.lam - 1, base.m
        )
    elif kind == "sunflower":
        h = sunflower_family(args.k, args.lam, args.m)
        manifest = ConstructionManifest(
            "sunflower", {"k": args.k, "lambda": args.lam, "m": args.m}, args.lam + args.m * (args.k - args.lam), args.m
        )
    elif kind == "sps-star":
        return _emit_sps_construction(args, *sps_star_family(args.n))
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(kind)

    text = format_text(h)
    if args.output:
        _write(args.output, text)
    if args.manifest:
        _write(args.manifest, json.dumps({"schema": SCHEMA, **manifest.to_dict()}, indent=2) + "\n")
    if args.format == "json":
        _emit_json({"kind": "hypergraph", "manifest": manifest.to_dict(), "measured": _measured(h), "hypergraph": text})
    elif not args.output:
        sys.stdout.write(text)
    return EXIT_OK


def _emit_sps_construction(args, s: SetPairSystem, manifest: ConstructionManifest) -> int:
    text = format_sps(s)
    if args.output:
        _write(args.output, text)
    if getattr(args, "manifest", None):
        _write(args.manifest, json.dumps({"schema": SCHEMA, **manifest.to_dict()}, indent=2) + "\n")
    if args.format == "json":
        _emit_json(
            {
                "kind": "sps",
                "manifest": manifest.to_dict(),
                "measured": {"m": s.m, "order": sps_order(s)},
                "sps": json.loads(text),
            }
        )
    elif not args.output:
        sys.stdout.write(text)
    return EXIT_OK


# -- verify ------------------------------------------------------------------


def _verify(args) -> int:
    text = _read(args.input)
    if _is_sps_text(text):
        return _verify_sps(parse_sps(text), args.n, args.format)
    h = parse_text(text)
    lam = args.lam
    predicates = {
        "uniformity": h.uniformity,
        "intersecting": h.is_intersecting(),
        "inferred_lambda": h.infer_lambda() if h.m >= 2 else None,
        "sunflower": h.is_sunflower(),
        "trivial_intersecting": h.is_trivial_intersecting(),
    }
    ok = True
    if lam is not None:
        predicates["lambda_intersecting"] = h.is_lambda_intersecting(lam)
        ok = predicates["lambda_intersecting"]
    report = bound_report_for(h, lam if ok else None, args.kernel)
    ok = ok and report.passed
    diagnostics = None
    if args.diagnostics:
        if lam is None:
            raise UsageError("--diagnostics needs --lambda")
        if predicates["lambda_intersecting"]:
            try:
                diagnostics = diagnostics_report(h, lam)
            except HyperforgeError as exc:
                diagnostics = [{"lemma": "all", "applicable": False, "reason": str(exc)}]
            ok = ok and all(r.get("holds", True) for r in diagnostics)

    if args.format == "json":
        _emit_json({"kind": "hypergraph", "ok": ok, "predicates": predicates, "report": report.to_dict(), "diagnostics": diagnostics})
    elif args.format == "csv":
        _write_csv(report.rows())
    else:
        for key, value in predicates.items():
            print(f"{key}: {value}")
        _print_report(report)
        for rec in diagnostics or []:
            status = rec.get("holds") if rec["applicable"] else f"n/a ({rec['reason']})"
            print(f"lemma {rec['lemma']}: {status}")
        print("ok" if ok else "FAILED")
    return EXIT_OK if ok else EXIT_FAILED


def bound_report_for(h, lam, kernel):
    from .bounds import bound_report

    return bound_report(h, lam, kernel)


def _print_report(report) -> None:
    for e in report.entries:
        if not e.applicable:
            print(f"  {e.name}: not applicable ({e.reason})")
            continue
        v = e.value
        exact = v.exact_str() or f"[{v.floor_certified}, {v.ceiling}]"
        tag = " [conjecture]" if v.status != "theorem" else ""
        eq = " (equality)" if e.equality else ""
        print(f"  {e.name}: {e.quantity} {e.measured} vs {exact} -> {e.verdict}{eq}{tag}")


def _verify_sps(s: SetPairSystem, n: int | None, fmt: str) -> int:
    valid = verify_sps(s)
    doc = {"kind": "sps", "valid": valid, "m": s.m, "order": sps_order(s)}
    ok = valid
    report = None
    if valid:
        doc["one_cross_intersecting"] = is_one_cross_intersecting(s)
        doc["max_a"] = max((len(a) for a in s.a_sets), default=0)
        doc["max_b"] = max((len(b) for b in s.b_sets), default=0)
        if n is None:
            n = doc["max_b"]
        doc["n"] = n
        doc["bounded_2_n"] = is_bounded(s, 2, n)
        if s.m and all(len(a) == 2 for a in s.a_sets):
            doc["a_graph"] = classify_a_graph(s)._asdict()
        if doc["one_cross_intersecting"] and doc["bounded_2_n"] and n >= 1:
            report = sps_report(s, n)
            doc["report"] = report.to_dict()
            ok = report.passed
    if fmt == "json":
        _emit_json({"ok": ok, **doc})
    elif fmt == "csv":
        _write_csv(report.rows() if report else [])
    else:
        for key, value in doc.items():
            if key != "report":
                print(f"{key}: {value}")
        if report:
            _print_report(report)
        print("ok" if ok else "FAILED")
    return EXIT_OK if ok else EXIT_FAILED


# -- kernel ------------------------------------------------------------------


def _kernel(args) -> int:
    h = parse_text(_read(args.input))
    doc = {"method": args.method}
    try:
        if args.method == "exact":
            res = min_kernel_exact(h, max_support=args.max_support, budget=args.budget, workers=args.workers)
            doc.update(size=res.size, witness=sorted(res.witness), exact=True)
        elif args.method == "degree-rule":
            w = kernel_degree_rule(h)
            doc.update(size=len(w), witness=sorted(w), exact=True)
        else:
            doc.update(size=min_kernel_brute(h, budget=args.budget), witness=None, exact=True)
    except BudgetExceeded as exc:
        doc.update(
            size=None,
            exact=False,
            upper_bound=exc.best,
            witness=sorted(exc.witness) if exc.witness is not None else None,
            visited=exc.visited,
        )
        print(f"budget exceeded: {exc}", file=sys.stderr)
        _kernel_out(doc, args.format)
        return EXIT_BUDGET
    _kernel_out(doc, args.format)
    return EXIT_OK


def _kernel_out(doc: dict, fmt: str) -> None:
    if fmt == "json":
        _emit_json(doc)
        return
    for key, value in doc.items():
        print(f"{key}: {value}")


# -- bounds ------------------------------------------------------------------


def _int_list(spec: str | None) -> list[int | None]:
    if spec is None:
        return [None]
    out: list[int | None] = []
    for part in spec.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _bounds(args) -> int:
    names = list(THEOREMS) if args.theorem == "all" else [t.strip() for t in args.theorem.split(",")]
    try:
        grid = {p: _int_list(getattr(args, p.replace("lambda", "lam"))) for p in ("k", "lambda", "delta", "n")}
    except ValueError:
        raise UsageError("parameter values must be integers, lists a,b,c or ranges a..b") from None
    values = []
    for name in names:
        if name not in THEOREMS:
            raise UsageError(f"unknown theorem {name!r}; choose from {', '.join(THEOREMS)}")
        needed = THEOREMS[name].params
        if args.theorem == "all" and any(grid[p] == [None] for p in needed):
            continue
        for combo in product(*(grid[p] for p in needed)):
            values.append(evaluate(name, **dict(zip(needed, combo))))
    if not values:
        raise UsageError("no theorem could be evaluated with the given parameters")
    if args.format == "json":
        _emit_json({"bounds": [v.to_dict() for v in values]})
    elif args.format == "csv":
        _write_csv(
            [
                {
                    "bound": v.name,
                    **{p: v.params.get(p, "") for p in ("k", "lambda", "delta", "n")},
                    "exact": v.exact_str() or "",
                    "floor_certified": v.floor_certified,
                    "ceiling": v.ceiling,
                    "display": v.display,
                    "status": v.status,
                }
                for v in values
            ]
        )
    else:
        for v in values:
            params = ", ".join(f"{k}={x}" for k, x in v.params.items())
            print(f"{v.name}({params})")
            if v.exact is not None:
                print(f"  exact: {v.exact}")
            print(f"  certified: [{v.floor_certified}, {v.ceiling}]")
            print(f"  display: {v.display}")
            if v.status != "theorem":
                print(f"  status: {v.status}")
    return EXIT_OK


def _write_csv(rows: list[dict]) -> None:
    buf = io.StringIO()
    if rows:
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


# -- sps ---------------------------------------------------------------------


def _sps(args) -> int:
    if args.action == "construct-star":
        return _emit_sps_construction(args, *sps_star_family(args.n))
    text = _read(args.input)
    if args.action == "verify":
        return _verify_sps(parse_sps(text), args.n, args.format)
    if args.action == "report":
        report = sps_report(parse_sps(text), args.n)
        if args.format == "json":
            _emit_json({"kind": "sps", "ok": report.passed, "report": report.to_dict()})
        elif args.format == "csv":
            _write_csv(report.rows())
        else:
            for key, value in report.stats.items():
                print(f"{key}: {value}")
            _print_report(report)
        return EXIT_OK if report.passed else EXIT_FAILED
    # tree-sum: the tree is a file of 2-vertex edges
    tree = Tree.from_edges(parse_text(text).sorted_edges())
    res = tree_odd_sum(tree)
    t = tree.t
    doc = {
        "t": t,
        "sum": res.total,
        "b": res.b,
        "w": res.w,
        "colour_formula": res.b * (res.b - 1) + res.w * (res.w - 1),
        "lower_bound": t * t // 2,
    }
    ok = res.total == doc["colour_formula"] and res.total >= doc["lower_bound"]
    if args.format == "json":
        _emit_json({"ok": ok, **doc})
    else:
        for key, value in doc.items():
            print(f"{key}: {value}")
    return EXIT_OK if ok else EXIT_FAILED


# -- oracle ------------------------------------------------------------------


def _oracle(args) -> int:
    if args.action in ("max-size", "max-order"):
        space = SearchSpace(
            k=args.k,
            n_max=args.n_max,
            m_max=args.m_max,
            intersecting=args.intersecting,
            lam=args.lam,
            non_sunflower=args.non_sunflower,
            max_degree=args.max_degree,
            budget=args.budget,
        )
        fn = max_size if args.action == "max-size" else max_order
        try:
            res = fn(space, workers=args.workers)
        except BudgetExceeded as exc:
            doc = {
                "action": args.action,
                "space": space.to_dict(),
                "exact": False,
                "best": exc.best,
                "witness": format_text(exc.witness) if exc.witness is not None else None,
                "visited": exc.visited,
            }
            print(f"budget exceeded: {exc}", file=sys.stderr)
            _kernel_out(doc, args.format)
            return EXIT_BUDGET
        doc = {
            "action": args.action,
            "space": space.to_dict(),
            "exact": True,
            "value": res.value,
            "witness": format_text(res.witness) if res.witness is not None else None,
        }
        _kernel_out(doc, args.format)
        return EXIT_OK
    if args.action == "min-kernel":
        h = parse_text(_read(args.input))
        try:
            size = min_kernel_brute(h, budget=args.budget)
        except BudgetExceeded as exc:
            _kernel_out({"action": "min-kernel", "exact": False, "upper_bound": exc.best}, args.format)
            return EXIT_BUDGET
        _kernel_out({"action": "min-kernel", "exact": True, "size": size}, args.format)
        return EXIT_OK
    # trees
    count = 0
    failures = 0
    equality = 0
    listing = []
    for tree in enumerate_trees(args.n):
        count += 1
        res = tree_odd_sum(tree)
        if res.total != res.b * (res.b - 1) + res.w * (res.w - 1) or res.total < tree.t**2 // 2:
            failures += 1
        if res.total == tree.t**2 // 2:
            equality += 1
        if args.list:
            listing.append({"edges": [list(e) for e in tree.edges], "sum": res.total, "b": res.b, "w": res.w})
    doc = {
        "action": "trees",
        "n": args.n,
        "count": count,
        "expected_count": tree_count(args.n),
        "claim_failures": failures,
        "equality_cases": equality,
    }
    if args.list:
        doc["trees"] = listing
    _kernel_out(doc, args.format)
    return EXIT_OK if failures == 0 and count == tree_count(args.n) else EXIT_FAILED


# -- parser ------------------------------------------------------------------


def _add_format(p, choices=("text", "json")):
    p.add_argument("--format", choices=choices, default="text", help="output format (default: text)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperforge",
        description="Build, measure and check extremal intersecting hypergraphs and set pair systems.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    con = sub.add_parser("construct", help="generate a family")
    fam = con.add_subparsers(dest="family", required=True)

    def family(name, help_):
        p = fam.add_parser(name, help=help_, formatter_class=argparse.ArgumentDefaultsHelpFormatter)
        p.add_argument("-o", "--output", help="write the hypergraph/SPS file here instead of stdout")
        p.add_argument("--manifest", help="write the construction manifest (JSON) here")
        _add_format(p)
        return p

    p = family("projective-plane", "lines of PG(2, q), q prime")
    p.add_argument("--q", type=int, required=True)
    p = family("affine-plane", "lines of AG(2, q), q prime")
    p.add_argument("--q", type=int, required=True)
    p = family("furedi-order", "padded, repeated projective plane")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--k", type=int, default=None, help="uniformity (default 2(q+1))")
    p = family("h-a", "1-intersecting family from the affine plane with a split classes")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--q", type=int, default=None, help="plane order (default: largest prime with q+1+ceil(q/2) <= k)")
    p = family("lambda-lift", "add lambda-1 common vertices to a 1-intersecting family")
    p.add_argument("input", help="hypergraph file ('-' for stdin)")
    p.add_argument("--lambda", dest="lam", type=int, required=True)
    p = family("sunflower", "sunflower with a lambda-vertex core")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p = family("sps-star", "order-extremal (2, n) set pair system, 3 | n")
    p.add_argument("--n", type=int, required=True)

    ver = sub.add_parser("verify", help="predicates, bound report and optional lemma diagnostics")
    ver.add_argument("input", help="hypergraph or SPS file ('-' for stdin)")
    ver.add_argument("--lambda", dest="lam", type=int, default=None, help="require and use this intersection size")
    ver.add_argument("--diagnostics", action="store_true", help="run the lambda-intersecting lemma checks")
    ver.add_argument("--kernel", type=int, default=None, help="known minimum kernel size")
    ver.add_argument("--n", type=int, default=None, help="B-set size bound for SPS input (default: largest B-set)")
    _add_format(ver, ("text", "json", "csv"))

    ker = sub.add_parser("kernel", help="minimum kernel")
    ker.add_argument("method", choices=("exact", "degree-rule", "brute"))
    ker.add_argument("input")
    ker.add_argument("--max-support", type=int, default=DEFAULT_SUPPORT_LIMIT)
    ker.add_argument("--budget", type=int, default=None, help="node budget (default: $HYPERFORGE_BUDGET or built-in)")
    ker.add_argument("--workers", type=int, default=1)
    _add_format(ker)

    bnd = sub.add_parser("bounds", help="evaluate closed-form bounds")
    bnd.add_argument("--theorem", required=True, help=f"one of {', '.join(THEOREMS)}, a comma list, or 'all'")
    for flag, dest in (("--k", "k"), ("--lambda", "lam"), ("--delta", "delta"), ("--n", "n")):
        bnd.add_argument(flag, dest=dest, default=None, help="integer, list a,b,c or range a..b")
    _add_format(bnd, ("text", "json", "csv"))

    sp = sub.add_parser("sps", help="set pair systems")
    acts = sp.add_subparsers(dest="action", required=True)
    p = acts.add_parser("verify")
    p.add_argument("input")
    p.add_argument("--n", type=int, default=None)
    _add_format(p, ("text", "json", "csv"))
    p = acts.add_parser("report")
    p.add_argument("input")
    p.add_argument("--n", type=int, required=True)
    _add_format(p, ("text", "json", "csv"))
    p = acts.add_parser("tree-sum", help="odd-distance sum of a tree given as 2-vertex edges")
    p.add_argument("input")
    _add_format(p)
    p = acts.add_parser("construct-star")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--manifest")
    _add_format(p)

    orc = sub.add_parser("oracle", help="brute-force searches")
    acts = orc.add_subparsers(dest="action", required=True)
    for name in ("max-size", "max-order"):
        p = acts.add_parser(name, formatter_class=argparse.ArgumentDefaultsHelpFormatter)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--n-max", type=int, required=True)
        p.add_argument("--m-max", type=int, default=None)
        p.add_argument("--intersecting", action="store_true")
        p.add_argument("--lambda", dest="lam", type=int, default=None)
        p.add_argument("--non-sunflower", action="store_true")
        p.add_argument("--max-degree", type=int, default=None)
        p.add_argument("--budget", type=int, default=None)
        p.add_argument("--workers", type=int, default=1)
        _add_format(p)
    p = acts.add_parser("min-kernel")
    p.add_argument("input")
    p.add_argument("--budget", type=int, default=None)
    _add_format(p)
    p = acts.add_parser("trees")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--list", action="store_true", help="include every tree in the output")
    _add_format(p)
    return parser


HANDLERS = {
    "construct": _construct,
    "verify": _verify,
    "kernel": _kernel,
    "bounds": _bounds,
    "sps": _sps,
    "oracle": _oracle,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return HANDLERS[args.command](args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (HyperforgeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
