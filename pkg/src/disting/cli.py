"""Command-line front end: ``disting <command> ...``.

Exit status is 0 on success, 1 when a verification check fails and 2 for
usage or input errors. Output paths given as ``-`` mean standard output.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import action as act
from . import catalog, consumption, graphs, powers, symfun, verify
from .partitions import IntegerPartition
from .perm import PermGroup, generate_group, parse_generators

log = logging.getLogger("disting")


class UsageError(Exception):
    pass


def _read_text(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    if os.path.exists(arg):
        with open(arg) as fh:
            return fh.read()
    return arg


def _load_graph(arg: str, kind: str) -> graphs.Graph:
    text = _read_text(arg)
    if kind != "simple" and len(text.split()) > 1:
        return graphs.read_edgelist(text, kind=kind)
    return graphs.load_graph(text)


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w") as fh:
        fh.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=1) + "\n"


def _group(n: int, gens: str) -> PermGroup:
    return generate_group(n, parse_generators(n, gens) if gens.strip() else [])


# graph -----------------------------------------------------------------


def cmd_graph(args) -> int:
    g = _load_graph(args.input, args.kind)
    if args.what == "dnumber":
        print(graphs.graph_distinguishing_number(g))
    elif args.what == "dpoly":
        poly = symfun.distinguishing_counts(graphs.graph_action(g))
        sys.stdout.write(_dumps(poly.to_dict()))
    elif args.what == "dsf":
        mono = symfun.dsf_monomial(graphs.graph_action(g))
        schur = symfun.monomial_to_schur(mono)
        sys.stdout.write(_dumps({"monomial": mono.to_dict(), "schur": schur.to_dict(),
                                 "schur_positive": not schur.negative_terms()}))
    else:
        aut = graphs.automorphism_group(g)
        sys.stdout.write(_dumps({"order": aut.order, "generators": [p.cycle_string() for p in aut.small_generators()]}))
    return 0


# action ----------------------------------------------------------------


def _load_action(path: str) -> act.GroupAction:
    try:
        return act.GroupAction.from_dict(json.loads(_read_text(path)))
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise UsageError(f"malformed action file: {exc}") from exc


def cmd_action(args) -> int:
    a = _load_action(args.input)
    if args.what == "dnumber":
        lab = act.find_distinguishing_labeling(a)
        sys.stdout.write(_dumps({"distinguishing_number": lab.num_colors(), "labeling": lab.to_list()}))
    elif args.what == "algorithm1":
        lab = act.greedy_stabilizer_label(a)
        sys.stdout.write(_dumps({"labels_used": lab.max_label(), "labeling": lab.to_list(),
                                 "bound": act.factorial_bound(a.order)}))
    else:
        if args.k is None or args.k < 1:
            raise UsageError("dk needs --k >= 1")
        lab = act.find_distinguishing_labeling_k(a, args.k)
        sys.stdout.write(_dumps({"k": args.k, "distinguishing_number": lab.max_label(),
                                 "labeling": lab.to_list()}))
    return 0


# consumption -----------------------------------------------------------


def _catalog(n: int, long_run: bool) -> catalog.SubgroupCatalog:
    if n >= catalog.LONG_RUN_DEGREE and not long_run:
        if catalog.read_catalog(n) is None:
            raise UsageError(f"no cached S_{n} subgroup catalog; build it with `disting cache build --n {n} --long`")
        long_run = True
    return catalog.subgroup_catalog(n, long_run=long_run, progress=long_run)


def cmd_poset(args) -> int:
    cat = _catalog(args.n, args.long)
    p = consumption.consumption_poset(args.n, cat)
    if args.dot is None and args.json is None:
        for a, b in p.hasse_edges():
            print(f"{a.label()} > {b.label()}")
    if args.dot is not None:
        _emit(consumption.poset_to_dot(p), args.dot)
    if args.json is not None:
        _emit(p.to_json(), args.json)
    return 0


def cmd_consumes(args) -> int:
    h = _group(args.n, args.group)
    lam = IntegerPartition.parse(args.lam)
    sp = consumption.consuming_set_partition(h, lam)
    out = {"lambda": list(lam), "group_order": h.order, "consumes": sp is not None,
           "set_partition": None if sp is None else [[i + 1 for i in b] for b in sp.blocks()]}
    sys.stdout.write(_dumps(out))
    return 0


def cmd_density(args) -> int:
    h = _group(args.n, args.group)
    k = powers.density(h)
    out = {"group_order": h.order, "density": k}
    if args.witness:
        out["labeling"] = powers.orbit_labeling(h, k).to_dict()
    sys.stdout.write(_dumps(out))
    return 0


# scan, verify, cache ---------------------------------------------------


def cmd_scan(args) -> int:
    rep = symfun.scan_graphs_schur(args.max_n, jobs=args.jobs)
    if args.json is not None:
        _emit(rep.to_json(), args.json)
    if args.csv is not None:
        _emit(rep.to_csv(), args.csv)
    if args.json is None and args.csv is None:
        for e in rep.exceptions:
            neg = ", ".join(f"{lam!r}: {c}" for lam, c in e.negative_terms().items())
            print(f"{e.graph6}\tn={e.n}\t{neg}")
        print(f"{len(rep.exceptions)} non-Schur-positive of {sum(rep.graphs_per_n.values())} graphs")
    return 0


def cmd_verify(args) -> int:
    try:
        results = verify.run(args.ids, long=args.long)
    except KeyError as exc:
        raise UsageError(f"unknown check id {exc.args[0]}; known: {', '.join(verify.CHECKS)}") from exc
    for r in results:
        print(r.line(), flush=True)
    failed = [r.id for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} passed" + (f"; failed: {' '.join(failed)}" if failed else ""))
    return 1 if failed else 0


def cmd_cache(args) -> int:
    if args.what == "clear":
        for p in catalog.clear_cache():
            print(f"removed {p}")
        return 0
    if args.n is None:
        raise UsageError("cache build needs --n")
    if args.n >= catalog.LONG_RUN_DEGREE and not args.long:
        raise UsageError(f"the S_{args.n} catalog is a long run; add --long")
    cat = catalog.subgroup_catalog(args.n, long_run=args.long, progress=args.long)
    print(f"S_{args.n}: {len(cat)} subgroups, {len(catalog.conjugacy_reps(cat))} classes -> "
          f"{catalog.cache_path(args.n)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="disting", description="Distinguishing numbers of group actions.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="graph computations (graph6 string or file, or edge-list file)")
    p.add_argument("what", choices=["dnumber", "dpoly", "dsf", "aut"])
    p.add_argument("input")
    p.add_argument("--kind", choices=graphs.KINDS, default="simple", help="edge-list interpretation")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("action", help="computations on an action JSON file")
    p.add_argument("what", choices=["dnumber", "algorithm1", "dk"])
    p.add_argument("input")
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_action)

    p = sub.add_parser("poset", help="consumption ordering on partitions of n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dot", metavar="PATH")
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--long", action="store_true")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("consumes", help="whether a subgroup of S_n consumes a partition")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--group", required=True, help='generators, e.g. "(1 2)(3 4),(1 3)(2 4)"')
    p.add_argument("--lambda", dest="lam", required=True, help='parts, e.g. "2,2"')
    p.set_defaults(func=cmd_consumes)

    p = sub.add_parser("density", help="least k at which a labeling of [n]^k realizes the group")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--group", required=True)
    p.add_argument("--witness", action="store_true", help="include the realizing labeling")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("scan", help="exhaustive scans")
    p.add_argument("what", choices=["schur"])
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="run acceptance checks")
    p.add_argument("ids", nargs="+", metavar="all|ID")
    p.add_argument("--long", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cache", help="subgroup catalog cache")
    p.add_argument("what", choices=["build", "clear"])
    p.add_argument("--n", type=int)
    p.add_argument("--long", action="store_true")
    p.set_defaults(func=cmd_cache)
    return ap


def main(argv=None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(message)s", stream=sys.stderr)
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"disting: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
