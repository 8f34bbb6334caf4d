"""Command line entry point.

Exit codes: 0 every expectation met, 1 a check failed its expectation,
2 usage or input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from . import counterexamples as cx
from .errors import BudgetExceeded, CompletionError, FormatError, InvalidCertificateError, InvalidParameterError
from .extension import PH, PMH, CutCertificate, SearchOptions, extend_matching, verify_odd_cut_certificate
from .formats import (dumps, graph_from_json, graph_to_edgelist, graph_to_json, matching_from_compact,
                      matching_from_json, matching_to_compact, matching_to_json, parse_edgelist,
                      reports_to_csv, reports_to_jsonl)
from .graph import (Graph, build_complete, build_complete_bipartite, build_cycle, build_hypercube,
                    build_path, cylinder, torus)
from .matchings import count_perfect_matchings, enumerate_perfect_matchings
from .properties import (FAIL, INCONCLUSIVE, check_ph, check_pmh, default_workers,
                         verify_paper_claims)

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

FAMILIES = ("cycle", "path", "complete", "bipartite", "hypercube", "torus", "cylinder", "prism")


def build_family(family: str, args: List[int]) -> Graph:
    need = {"cycle": 1, "path": 1, "complete": 1, "hypercube": 1, "prism": 1,
            "bipartite": 2, "torus": 2, "cylinder": 2}
    if family not in need:
        raise FormatError(f"unknown graph family {family!r}; choose from {', '.join(FAMILIES)}")
    if len(args) != need[family]:
        raise FormatError(f"family {family!r} takes {need[family]} integer argument(s)")
    if family == "cycle":
        return build_cycle(*args)
    if family == "path":
        return build_path(*args)
    if family == "complete":
        return build_complete(*args)
    if family == "hypercube":
        return build_hypercube(*args)
    if family == "prism":
        return cylinder(args[0], 2)
    if family == "bipartite":
        return build_complete_bipartite(*args)
    if family == "torus":
        return torus(*args)
    return cylinder(*args)


def load_graph(spec: str) -> Graph:
    """``family:a,b`` inline spec, or a path to an edge-list or JSON file."""
    if os.path.exists(spec):
        with open(spec) as fh:
            text = fh.read()
        if spec.endswith(".json") or text.lstrip().startswith("{"):
            return graph_from_json(text)
        return parse_edgelist(text)
    family, _, rest = spec.partition(":")
    try:
        nums = [int(x) for x in rest.split(",") if x.strip()]
    except ValueError:
        raise FormatError(f"graph spec {spec!r}: expected family:int[,int]")
    return build_family(family, nums)


def load_matching(spec: str, g: Graph):
    """Matching from ``paper[:cylinder|q3|general]``, a file, or inline ``u-v u-v``."""
    if spec.startswith("paper"):
        _, _, which = spec.partition(":")
        shape = g.grid
        if shape is None:
            raise FormatError("paper matchings need a torus or cylinder graph")
        if not which:
            if not shape.q_cyclic:
                which = "cylinder"
            else:
                which = "q3" if shape.q == 3 else "general"
        if which == "cylinder":
            if shape.q_cyclic:
                raise FormatError("paper:cylinder needs a cylinder graph")
            return cx.cylinder_matching(shape.p, shape.q)[0]
        if not shape.q_cyclic:
            raise FormatError(f"paper:{which} needs a torus graph")
        if which == "q3":
            if shape.q != 3:
                raise FormatError("paper:q3 needs a torus C_p x C_3")
            return cx.torus_q3_matching(shape.p)
        if which == "general":
            return cx.torus_general_matching(shape.p, shape.q)
        raise FormatError(f"unknown paper matching {which!r}")
    if os.path.exists(spec):
        with open(spec) as fh:
            text = fh.read()
        if text.lstrip().startswith("{"):
            m = matching_from_json(text)
            if m.n != g.n:
                raise FormatError(f"field 'n' = {m.n} does not match the graph order {g.n}")
            return m
        return matching_from_compact(text, g.n)
    return matching_from_compact(spec, g.n)


def _options(args) -> SearchOptions:
    return SearchOptions(cut_parity=not args.no_cut_parity, forced_edges=not args.no_forced,
                         node_budget=args.node_budget, time_budget=args.item_time_budget)


def _config(args) -> dict:
    skip = {"func"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _emit(text: str, args) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- subcommands ------------------------------------------------------------

def cmd_gen(args) -> int:
    nums = [x for x in (args.n, args.p, args.q, args.d) if x is not None]
    g = build_family(args.family, nums)
    if args.format == "json":
        data = graph_to_json(g)
        data["config"] = _config(args)
        _emit(dumps(data) + "\n", args)
    else:
        _emit(f"c config {dumps(_config(args))}\n" + graph_to_edgelist(g), args)
    return EXIT_OK


def cmd_matchings(args) -> int:
    g = load_graph(args.graph)
    out = {"config": _config(args), "graph": g.label, "n": g.n}
    if args.count:
        out["count"] = count_perfect_matchings(g)
    else:
        items = []
        for i, m in enumerate(enumerate_perfect_matchings(g)):
            if args.limit and i >= args.limit:
                break
            items.append(matching_to_compact(m) if args.format == "compact" else
                         [list(e) for e in m.sorted_pairs()])
        out["matchings"] = items
        out["count"] = len(items)
    _emit(dumps(out) + "\n", args)
    return EXIT_OK


def cmd_gen_counterexample(args) -> int:
    if args.family == cx.CYLINDER:
        spec = cx.cylinder_spec(args.p, args.q)
    elif args.family == cx.TORUS_Q3:
        spec = cx.torus_q3_spec(args.p)
    else:
        spec = cx.torus_general_spec(args.p, args.q)
    m = spec.matching()
    out = matching_to_json(m)
    out.update({"family": spec.family, "p": spec.p, "q": spec.q, "kind": spec.kind,
                "listed": [list(e) for e in spec.listed_ids()],
                "graph": spec.graph().label, "config": _config(args)})
    _emit(dumps(out) + "\n", args)
    return EXIT_OK


def cmd_extend(args) -> int:
    g = load_graph(args.graph)
    m = load_matching(args.matching, g)
    outcome = extend_matching(g, m, args.mode, options=_options(args))
    out = outcome.to_dict(timing=not args.canonical)
    out["graph"] = g.label
    out["matching"] = [list(e) for e in m.sorted_pairs()]
    out["config"] = _config(args)
    _emit(dumps(out) + "\n", args)
    if args.expect and outcome.status != args.expect:
        return EXIT_FAILED
    return EXIT_OK


def _cmd_check(args, prop: str) -> int:
    g = load_graph(args.graph)
    if prop == "PH":
        rep = check_ph(g, workers=args.workers, options=_options(args),
                       symmetry=args.symmetry, time_budget=args.time_budget)
    else:
        rep = check_pmh(g, workers=args.workers, options=_options(args),
                        time_budget=args.time_budget)
    data = rep.to_dict(canonical=args.canonical)
    if args.format == "csv":
        _emit(reports_to_csv([data], config=_config(args)), args)
    else:
        _emit(reports_to_jsonl([data], config=_config(args)), args)
    if args.expect and rep.verdict != args.expect:
        return EXIT_FAILED
    return EXIT_OK


def cmd_check_pmh(args) -> int:
    return _cmd_check(args, "PMH")


def cmd_check_ph(args) -> int:
    return _cmd_check(args, "PH")


def cmd_cert_verify(args) -> int:
    g = load_graph(args.graph)
    m = load_matching(args.matching, g)
    try:
        side = [int(x) for x in args.side.replace(",", " ").split()]
    except ValueError:
        raise FormatError(f"--side must be a list of vertex ids, got {args.side!r}")
    cert = CutCertificate.from_side(g, side)
    ok = verify_odd_cut_certificate(g, m, cert)
    out = {"valid": ok, "certificate": cert.to_dict(), "graph": g.label,
           "config": _config(args)}
    _emit(dumps(out) + "\n", args)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_verify_paper(args) -> int:
    expectations = {}
    for flip in args.flip or []:
        expectations[flip] = "flipped"
    for item in args.expect or []:
        key, _, val = item.partition("=")
        expectations[key] = val
    results = verify_paper_claims(workers=args.workers, options=_options(args),
                                  symmetry=args.symmetry, time_budget=args.time_budget,
                                  only=args.only, expectations=expectations,
                                  canonical=args.canonical)
    rows = [r.to_dict(canonical=args.canonical) for r in results]
    if args.format == "csv":
        flat = [{"graph": r["item"], "property": r["expected"], "verdict": r["status"],
                 "total_checked": r["details"].get("total_checked"),
                 "elapsed": r.get("elapsed", "")} for r in rows]
        _emit(reports_to_csv(flat, config=_config(args)), args)
    else:
        _emit(reports_to_jsonl(rows, config=_config(args)), args)
    for r in results:
        print(f"{r.status.upper():12s} {r.item}: expected {r.expected}, observed {r.observed}",
              file=sys.stderr)
    if any(r.status == FAIL for r in results):
        return EXIT_FAILED
    if any(r.status == INCONCLUSIVE for r in results):
        return EXIT_BUDGET
    return EXIT_OK


# -- parser -----------------------------------------------------------------

def _search_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--no-cut-parity", action="store_true", help="disable cut-parity pruning")
    p.add_argument("--no-forced", action="store_true", help="disable forced-edge propagation")
    p.add_argument("--node-budget", type=int, default=0,
                   help="max search nodes per extension (0 = unlimited)")
    p.add_argument("--item-time-budget", type=float, default=0.0,
                   help="wall-clock cap in seconds per extension search")
    p.add_argument("--canonical", action="store_true", help="omit timing fields")
    p.add_argument("-o", "--output", help="write output here instead of stdout")


def _parallel_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--workers", type=int, default=default_workers(),
                   help="worker processes (default $PMHKIT_WORKERS or 1)")
    p.add_argument("--time-budget", type=float, default=0.0,
                   help="wall-clock cap in seconds per property check")
    p.add_argument("--format", choices=("json", "csv"), default="json")


def _nonneg(parser, args) -> None:
    if getattr(args, "workers", 1) < 1:
        parser.error("--workers must be >= 1")
    for name in ("node_budget", "time_budget", "item_time_budget"):
        if getattr(args, name, 0) < 0:
            parser.error(f"--{name.replace('_', '-')} must be non-negative")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pmhkit",
                                     description="Perfect matchings and Hamiltonian cycles "
                                                 "in products of cycles.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a graph as an edge list or JSON")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--format", choices=("edge-list", "json"), default="edge-list")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("matchings", help="enumerate or count perfect matchings")
    p.add_argument("--graph", required=True)
    p.add_argument("--count", action="store_true")
    p.add_argument("--limit", type=int, default=0)
    p.add_argument("--format", choices=("json", "compact"), default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_matchings)

    p = sub.add_parser("gen-counterexample", help="build a non-extendable matching")
    p.add_argument("--family", required=True,
                   choices=(cx.CYLINDER, cx.TORUS_Q3, cx.TORUS_GENERAL))
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, default=3)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen_counterexample)

    p = sub.add_parser("extend", help="search for a Hamiltonian extension of one matching")
    p.add_argument("--graph", required=True)
    p.add_argument("--matching", required=True)
    p.add_argument("--mode", choices=(PMH, PH), default=PMH)
    p.add_argument("--expect", choices=("Extended", "Refuted"))
    _search_flags(p)
    p.set_defaults(func=cmd_extend)

    for name, func, extra in (("check-pmh", cmd_check_pmh, False), ("check-ph", cmd_check_ph, True)):
        p = sub.add_parser(name, help=f"decide the {name[6:].upper()} property")
        p.add_argument("--graph", required=True)
        p.add_argument("--expect", choices=("holds", "fails", "vacuous"))
        if extra:
            p.add_argument("--symmetry", action="store_true",
                           help="fix vertex 0's partner up to automorphism")
        _search_flags(p)
        _parallel_flags(p)
        p.set_defaults(func=func, symmetry=False)

    p = sub.add_parser("cert-verify", help="check an odd-cut certificate")
    p.add_argument("--graph", required=True)
    p.add_argument("--matching", required=True)
    p.add_argument("--side", required=True, help="vertex ids of one side, e.g. '0,1,2'")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_cert_verify)

    p = sub.add_parser("verify-paper", help="run the reproduction battery")
    p.add_argument("--symmetry", action="store_true")
    p.add_argument("--only", nargs="*", help="item ids or id prefixes to run")
    p.add_argument("--flip", action="append", help="invert one item's expectation")
    p.add_argument("--expect", action="append", help="override: ITEM=VALUE")
    _search_flags(p)
    _parallel_flags(p)
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    _nonneg(parser, args)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc} {json.dumps(exc.progress)}", file=sys.stderr)
        return EXIT_BUDGET
    except (FormatError, InvalidParameterError, CompletionError, InvalidCertificateError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
