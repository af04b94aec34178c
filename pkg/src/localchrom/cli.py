"""Command-line front end.

Subcommands: gen (graph families), solve (exact quantities), orient
(orientation builders), translate (colorings <-> set families), setsys
(family checks, bounds, search), verify (named suites), experiment
(open-ended sweeps).  Machine output is one JSON document per
invocation; human output is plain lines.  Usage errors exit 2, failed
checks exit 1.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence

from .constructions import (
    balanced_pullback_orientation,
    coloring_to_families,
    decide_local2,
    families_to_coloring,
    mycielski_orientation,
    oriented_shift_with_coloring,
    swide_orientation,
    wide_orientation,
)
from .core import (
    BadParameter,
    Coloring,
    ConditionViolated,
    Digraph,
    Graph,
    ToolkitError,
)
from .generators import (
    alternating_odd_cycle,
    balanced_complete_orientation,
    complete_graph,
    cycle_graph,
    generalized_mycielski,
    kneser,
    schrijver,
    shift_graph,
    sym_directed_shift,
    symmetric_shift_graph,
    wide_universal,
)
from .io import (
    coloring_from_dict,
    coloring_to_dict,
    digraph_to_dict,
    dumps,
    graph_from_dict,
    graph_to_dict,
    load_json,
    read_dimacs,
    write_dimacs,
)
from .setsystems import (
    CrossFamily,
    bollobas_sum,
    check_family,
    family_size_bound,
    skew_uniform_bound,
)
from .solvers import (
    OrientationWitness,
    chromatic_number,
    directed_local_chromatic,
    independence_number,
    local_chromatic,
    max_directed_local_chromatic,
    min_directed_local_chromatic,
)
from .suites import (
    SUITES,
    family_search_experiment,
    run_suite,
    wide_threshold_experiment,
)


def _emit(doc: dict, args) -> None:
    text = dumps(doc)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _say(line: str, args) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(line + "\n")
    else:
        print(line)


def _load_graph_file(path: str) -> Graph | Digraph:
    if path.endswith(".col"):
        return read_dimacs(path)
    return graph_from_dict(load_json(path))


def _need_graph(obj) -> Graph:
    if isinstance(obj, Digraph):
        raise BadParameter("this quantity needs an undirected graph document")
    return obj


def _need_digraph(obj) -> Digraph:
    if not isinstance(obj, Digraph):
        raise BadParameter("this quantity needs a digraph document (arcs)")
    return obj


def _load_coloring(path: str) -> Coloring:
    return coloring_from_dict(load_json(path))


def _ints(params: list[str], want: int, usage: str) -> list[int]:
    if len(params) != want:
        raise BadParameter(f"expected {usage}")
    try:
        return [int(p) for p in params]
    except ValueError:
        raise BadParameter(f"expected integer parameters: {usage}") from None


def _cmd_gen(args) -> int:
    fam = args.family
    p = args.params
    colors = None
    if fam == "shift":
        (m,) = _ints(p, 1, "gen shift M")
        out = shift_graph(m)
    elif fam == "symshift":
        (m,) = _ints(p, 1, "gen symshift M")
        out = symmetric_shift_graph(m)
    elif fam == "symdirshift":
        (m,) = _ints(p, 1, "gen symdirshift M")
        out = sym_directed_shift(m)
    elif fam == "orientedshift":
        (m,) = _ints(p, 1, "gen orientedshift M")
        out, colors = oriented_shift_with_coloring(m)
    elif fam == "kneser":
        n, k = _ints(p, 2, "gen kneser N K")
        out = kneser(n, k)
    elif fam == "schrijver":
        n, k = _ints(p, 2, "gen schrijver N K")
        out = schrijver(n, k)
    elif fam == "mycielski":
        if len(p) not in (1, 2):
            raise BadParameter("expected gen mycielski BASE.json [LEVELS]")
        base = _need_graph(_load_graph_file(p[0]))
        levels = int(p[1]) if len(p) == 2 else 2
        out = generalized_mycielski(base, levels)
    elif fam == "wide":
        s, t = _ints(p, 2, "gen wide S T")
        out, colors = wide_universal(s, t)
    elif fam == "altcycle":
        (h,) = _ints(p, 1, "gen altcycle H")
        out = alternating_odd_cycle(h)
    elif fam == "tournament":
        (r,) = _ints(p, 1, "gen tournament R")
        out = balanced_complete_orientation(r)
    elif fam == "complete":
        (r,) = _ints(p, 1, "gen complete R")
        out = complete_graph(r)
    elif fam == "cycle":
        (n,) = _ints(p, 1, "gen cycle N")
        out = cycle_graph(n)
    else:
        raise BadParameter(f"unknown family {fam!r}")
    if getattr(args, "out", None) and args.out.endswith(".col"):
        if isinstance(out, Digraph):
            raise BadParameter("DIMACS output is undirected only")
        write_dimacs(out, args.out)
        return 0
    doc = digraph_to_dict(out) if isinstance(out, Digraph) else graph_to_dict(out)
    if colors is not None:
        doc["colors"] = list(colors.colors)
    _emit(doc, args)
    return 0


def _witness_doc(w):
    if w is None:
        return None
    if isinstance(w, Coloring):
        return coloring_to_dict(w)
    if isinstance(w, OrientationWitness):
        return {
            "arcs": [list(a) for a in w.digraph.arc_list()],
            "colors": list(w.coloring.colors),
        }
    if isinstance(w, tuple):
        return {"vertices": list(w)}
    return None


def _cmd_solve(args) -> int:
    obj = _load_graph_file(args.input)
    q = args.quantity
    budget = {"budget_nodes": args.budget_nodes, "budget_ms": args.budget_ms}
    if q == "chi":
        rep = chromatic_number(_need_graph(obj), **budget)
    elif q == "alpha":
        rep = independence_number(_need_graph(obj), **budget)
    elif q == "psi":
        rep = local_chromatic(_need_graph(obj), **budget)
    elif q == "psid":
        rep = directed_local_chromatic(_need_digraph(obj), **budget)
    elif q == "psid-min":
        rep = min_directed_local_chromatic(
            _need_graph(obj), max_edges=args.max_edges, **budget
        )
    elif q == "psid-max":
        rep = max_directed_local_chromatic(
            _need_graph(obj), max_edges=args.max_edges, **budget
        )
    elif q == "local2":
        return _solve_local2(_need_digraph(obj), args)
    else:
        raise BadParameter(f"unknown quantity {q!r}")
    doc = {
        "value": rep.value,
        "exact": rep.exact,
        "witness": _witness_doc(rep.witness),
        "nodes": rep.nodes,
        "ms": 0.0 if args.no_timing else round(rep.ms, 3),
    }
    if args.json or args.out:
        _emit(doc, args)
    else:
        tag = "exact" if rep.exact else "bound"
        print(f"{q} = {rep.value} ({tag}, {rep.nodes} nodes)")
    return 0


def _solve_local2(d: Digraph, args) -> int:
    out = decide_local2(d)
    doc: dict = {"value_le_2": out.value_le_2}
    if out.value_le_2:
        doc["colors"] = list(out.coloring.colors)
        doc["universal"] = digraph_to_dict(out.universal)
        doc["universal_hom"] = list(out.universal_hom)
    else:
        doc["obstruction_h"] = out.obstruction_h
        doc["obstruction"] = digraph_to_dict(out.obstruction)
        doc["obstruction_hom"] = list(out.obstruction_hom)
    if args.json or args.out:
        _emit(doc, args)
    elif out.value_le_2:
        print("value <= 2: class coloring found")
    else:
        print(f"value >= 3: alternating odd cycle h={out.obstruction_h} maps in")
    return 0


def _cmd_orient(args) -> int:
    mode = args.mode
    p = args.params
    if mode == "balanced":
        if len(p) != 2:
            raise BadParameter("expected orient balanced GRAPH.json COLORING.json")
        g = _need_graph(_load_graph_file(p[0]))
        d = balanced_pullback_orientation(g, _load_coloring(p[1]))
        _emit(digraph_to_dict(d), args)
    elif mode == "wide":
        if len(p) != 2:
            raise BadParameter("expected orient wide GRAPH.json COLORING.json")
        g = _need_graph(_load_graph_file(p[0]))
        d = wide_orientation(g, _load_coloring(p[1]))
        _emit(digraph_to_dict(d), args)
    elif mode == "swide":
        s, t = _ints(p, 2, "orient swide S T")
        res = swide_orientation(s, t, max_vertices=args.max_vertices)
        doc = {
            "digraph": None if res.digraph is None else digraph_to_dict(res.digraph),
            "natural": coloring_to_dict(res.natural),
            "report": res.report_dict(),
        }
        _emit(doc, args)
        return 0 if res.report.edges_ok else 1
    elif mode == "mycielski":
        if len(p) != 1:
            raise BadParameter("expected orient mycielski DIGRAPH.json")
        d = _need_digraph(_load_graph_file(p[0]))
        _emit(digraph_to_dict(mycielski_orientation(d)), args)
    else:
        raise BadParameter(f"unknown orient mode {mode!r}")
    return 0


def _cmd_translate(args) -> int:
    if args.direction == "c2f":
        if len(args.params) != 2:
            raise BadParameter("expected translate c2f GRAPH.json COLORING.json")
        g = _need_graph(_load_graph_file(args.params[0]))
        fam, mode = coloring_to_families(g, _load_coloring(args.params[1]))
        doc = fam.to_dict()
        doc["mode"] = mode
        _emit(doc, args)
    elif args.direction == "f2c":
        if len(args.params) != 1:
            raise BadParameter("expected translate f2c FAMILY.json")
        raw = load_json(args.params[0])
        mode = args.mode or raw.get("mode")
        if mode not in ("ordered", "symmetric"):
            raise BadParameter('need --mode ordered|symmetric (or a "mode" key)')
        g, colors = families_to_coloring(CrossFamily.from_dict(raw), mode)
        doc = graph_to_dict(g)
        doc["colors"] = list(colors.colors)
        _emit(doc, args)
    else:
        raise BadParameter(f"unknown direction {args.direction!r}")
    return 0


def _cmd_setsys(args) -> int:
    action = args.action
    if action == "check":
        if len(args.params) != 1:
            raise BadParameter("expected setsys check FAMILY.json --mode MODE")
        fam = CrossFamily.from_dict(load_json(args.params[0]))
        if args.mode in ("ordered", "symmetric") and args.k is None:
            raise BadParameter(f"mode {args.mode!r} needs --k")
        try:
            check_family(fam, args.mode, args.k)
            doc = {"ok": True, "mode": args.mode, "pairs": len(fam)}
        except ConditionViolated as exc:
            doc = {
                "ok": False,
                "mode": args.mode,
                "pairs": len(fam),
                "i": exc.i,
                "j": exc.j,
                "reason": exc.reason,
            }
        if args.json or args.out:
            _emit(doc, args)
        else:
            print("ok" if doc["ok"] else f"violated at ({doc['i']},{doc['j']}): {doc['reason']}")
        return 0 if doc["ok"] else 1
    if action == "sum":
        if len(args.params) != 1:
            raise BadParameter("expected setsys sum FAMILY.json")
        fam = CrossFamily.from_dict(load_json(args.params[0]))
        total = bollobas_sum(fam)
        doc = {"sum": str(total), "le_1": total <= 1, "pairs": len(fam)}
        if args.json or args.out:
            _emit(doc, args)
        else:
            print(f"sum = {total} (<= 1: {total <= 1})")
        return 0
    if action == "bound":
        if args.k is not None:
            mode = args.mode if args.mode in ("ordered", "symmetric") else "ordered"
            doc = {"k": args.k, "mode": mode, "bound": family_size_bound(args.k, mode)}
        elif args.r is not None and args.s is not None:
            doc = {"r": args.r, "s": args.s, "bound": skew_uniform_bound(args.r, args.s)}
        else:
            raise BadParameter("expected --k K [--mode MODE] or --r R --s S")
        if args.json or args.out:
            _emit(doc, args)
        else:
            print(doc["bound"])
        return 0
    if action == "search":
        if args.k is None:
            raise BadParameter("expected setsys search --k K")
        doc = family_search_experiment(
            args.k, args.ground, args.budget_nodes, args.budget_ms
        )
        if args.json or args.out:
            _emit(doc, args)
        else:
            print(
                f"k={doc['k']} best_m={doc['best_m']} bound={doc['bound']}"
                f" exhaustive={doc['exhaustive']} nodes={doc['nodes']}"
            )
        return 0
    raise BadParameter(f"unknown setsys action {action!r}")


def _cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = [run_suite(name, args.seed) for name in names]
    ok = all(r.ok for r in results)
    if args.json or args.out:
        doc = {
            "ok": ok,
            "suites": [
                {
                    "suite": r.suite,
                    "ok": r.ok,
                    "checks": [
                        {"name": c.name, "passed": c.passed, "detail": c.detail}
                        for c in r.checks
                    ],
                }
                for r in results
            ],
        }
        _emit(doc, args)
    else:
        for r in results:
            passed = sum(c.passed for c in r.checks)
            print(f"suite {r.suite}: {passed}/{len(r.checks)} checks passed")
            for c in r.checks:
                mark = "PASS" if c.passed else "FAIL"
                tail = f"  [{c.detail}]" if c.detail else ""
                print(f"  {mark}  {c.name}{tail}")
        total = sum(len(r.checks) for r in results)
        good = sum(sum(c.passed for c in r.checks) for r in results)
        print(f"overall: {good}/{total} checks passed")
    return 0 if ok else 1


def _cmd_experiment(args) -> int:
    if args.name == "wide-threshold":
        rows = wide_threshold_experiment(
            args.t, args.s_min, args.s_max, args.max_vertices
        )
        doc = {"experiment": "wide-threshold", "rows": rows}
        if args.json or args.out:
            _emit(doc, args)
        else:
            for row in rows:
                print(
                    f"s={row['s']} t={row['t']} n={row['vertices']}"
                    f" covered={row['property2_ok']} value={row['value']}"
                )
        return 0
    if args.name == "family-search":
        if args.k is None:
            raise BadParameter("expected experiment family-search --k K")
        doc = family_search_experiment(
            args.k, args.ground, args.budget_nodes, args.budget_ms
        )
        doc["experiment"] = "family-search"
        if args.json or args.out:
            _emit(doc, args)
        else:
            print(
                f"k={doc['k']} best_m={doc['best_m']} bound={doc['bound']}"
                f" exhaustive={doc['exhaustive']} nodes={doc['nodes']}"
            )
        return 0
    raise BadParameter(f"unknown experiment {args.name!r}")


def _parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--json", action="store_true", help="emit one JSON document")
    shared.add_argument("--out", help="write output to this file")
    shared.add_argument("--seed", type=int, default=0,
                        help="seed for randomized property checks")
    shared.add_argument("--budget-ms", type=float, default=None,
                        help="wall-clock budget for searches")

    top = argparse.ArgumentParser(
        prog="localchrom",
        description="local and directed local chromatic number toolkit",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[shared], help="generate a graph family member")
    p.add_argument("family", choices=[
        "shift", "symshift", "symdirshift", "orientedshift", "kneser",
        "schrijver", "mycielski", "wide", "altcycle", "tournament",
        "complete", "cycle",
    ])
    p.add_argument("params", nargs="*")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("solve", parents=[shared], help="compute an exact quantity")
    p.add_argument("quantity", choices=[
        "chi", "alpha", "psi", "psid", "psid-min", "psid-max", "local2",
    ])
    p.add_argument("input", help="graph document (.json) or DIMACS file (.col)")
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--max-edges", type=int, default=16,
                   help="orientation sweep edge cap")
    p.add_argument("--workers", type=int, default=1,
                   help="worker count hint; results are worker-independent")
    p.add_argument("--no-timing", action="store_true",
                   help="zero the ms field for byte-stable output")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("orient", parents=[shared], help="build an orientation")
    p.add_argument("mode", choices=["balanced", "wide", "swide", "mycielski"])
    p.add_argument("params", nargs="*")
    p.add_argument("--max-vertices", type=int, default=None)
    p.set_defaults(func=_cmd_orient)

    p = sub.add_parser("translate", parents=[shared],
                       help="colorings <-> cross-intersecting families")
    p.add_argument("direction", choices=["c2f", "f2c"])
    p.add_argument("params", nargs="*")
    p.add_argument("--mode", choices=["ordered", "symmetric"], default=None)
    p.set_defaults(func=_cmd_translate)

    p = sub.add_parser("setsys", parents=[shared], help="set-family tooling")
    p.add_argument("action", choices=["check", "sum", "bound", "search"])
    p.add_argument("params", nargs="*")
    p.add_argument("--mode", choices=["bollobas", "skew", "ordered", "symmetric"],
                   default="bollobas")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--ground", type=int, default=None)
    p.add_argument("--budget-nodes", type=int, default=None)
    p.set_defaults(func=_cmd_setsys)

    p = sub.add_parser("verify", parents=[shared], help="run a verification suite")
    p.add_argument("suite", help='suite id or "all": ' + ", ".join(SUITES))
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("experiment", parents=[shared], help="open-ended sweeps")
    p.add_argument("name", choices=["wide-threshold", "family-search"])
    p.add_argument("--t", type=int, default=4)
    p.add_argument("--s-min", type=int, default=2)
    p.add_argument("--s-max", type=int, default=None)
    p.add_argument("--max-vertices", type=int, default=1000)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--ground", type=int, default=None)
    p.add_argument("--budget-nodes", type=int, default=400_000)
    p.set_defaults(func=_cmd_experiment)

    return top


def main(argv: Sequence[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except (ToolkitError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
