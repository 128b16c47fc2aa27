"""Command-line front end.

Exit codes: 0 success, 1 criterion failure, 2 input error, 3 the only result
obtainable within budget was inconclusive (an interval rather than a value).
"""

import argparse
import json
import math
import sys

from . import generators, homcomplex, suite
from .chromatic import chromatic_number
from .folding import stiff_reduction
from .graphs import ParseError, read_graph, write_graph
from .reports import ReportOptions, run_conjecture_check, run_random_sweep
from .warmth import warmth

EXIT_OK = 0
EXIT_CRITERION = 1
EXIT_INPUT = 2
EXIT_INCONCLUSIVE = 3


def _enc(x):
    return "inf" if x == math.inf else x


def _read_input(args):
    if args.input and args.input != "-":
        fmt = args.format
        if fmt is None:
            fmt = "dimacs" if args.input.endswith(".col") else "edge-list"
        with open(args.input) as fh:
            return read_graph(fh, fmt)
    return read_graph(sys.stdin, args.format or "edge-list")


def _add_input_args(p):
    p.add_argument("--input", "-i", default="-", help="graph file, '-' for stdin")
    p.add_argument("--format", choices=["edge-list", "dimacs"], default=None)


GEN_FAMILIES = {
    "complete": (generators.complete, 1),
    "path": (generators.path, 1),
    "cycle": (generators.cycle, 1),
    "looped-cycle": (generators.looped_cycle, 1),
    "complete-bipartite": (generators.complete_bipartite, 2),
    "kneser": (generators.kneser, 2),
    "petersen": (generators.petersen, 0),
    "grotzsch": (lambda: generators.mycielski(generators.cycle(5)), 0),
    "twisted-toroidal": (generators.twisted_toroidal, 2),
}


def cmd_gen(args):
    if args.family == "gnp":
        if len(args.params) != 2:
            raise ValueError("gnp takes n and p")
        g = generators.erdos_renyi(int(args.params[0]), float(args.params[1]), args.seed)
    elif args.family == "chung-lu":
        if not args.params:
            raise ValueError("chung-lu takes a comma-separated weight list")
        w = [float(x) for x in args.params[0].split(",")]
        g = generators.chung_lu(w, args.seed)
    elif args.family in GEN_FAMILIES:
        fn, arity = GEN_FAMILIES[args.family]
        if len(args.params) != arity:
            raise ValueError("%s takes %d integer parameter(s)" % (args.family, arity))
        g = fn(*[int(x) for x in args.params])
    else:
        raise ValueError("unknown family %r" % args.family)
    out_fmt = args.out_format or "edge-list"
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            write_graph(g, fh, out_fmt)
    else:
        write_graph(g, sys.stdout, out_fmt)
    return EXIT_OK


def cmd_fold(args):
    g = _read_input(args)
    residue, seq = stiff_reduction(g)
    if args.json:
        print(json.dumps({
            "input_vertices": g.n,
            "residue_vertices": residue.n,
            "steps": [{"removed": v, "into": w} for v, w in seq.steps],
            "dismantlable": residue.n == 1 and residue.has_loop(0),
        }, indent=2))
    else:
        for v, w in seq.steps:
            print("fold %d -> %d" % (v, w))
        print("# residue:")
        write_graph(residue, sys.stdout, args.format or "edge-list")
    return EXIT_OK


def cmd_warmth(args):
    g = _read_input(args)
    r = warmth(g, mode=args.mode, d_cap=args.max_d, pre_fold=not args.no_fold)
    if args.json:
        out = {"lo": _enc(r.lo), "hi": _enc(r.hi), "mode": r.mode}
        if r.shortcut:
            out["shortcut"] = r.shortcut
        print(json.dumps(out, indent=2))
    elif r.value is not None:
        print("warmth = %s (%s%s)" % (_enc(r.value), r.mode,
                                      ", " + r.shortcut if r.shortcut else ""))
    else:
        print("warmth in [%s, %s] (%s)" % (_enc(r.lo), _enc(r.hi), r.mode))
    return EXIT_OK if r.value is not None else EXIT_INCONCLUSIVE


def cmd_homology(args):
    g = _read_input(args)
    cx = homcomplex.build_hom_k2(g, max_dim=args.max_dim)
    s = homcomplex.homology(cx)
    hconn, caveat = homcomplex.homological_connectivity(s)
    if args.json:
        print(json.dumps({
            "f_vector": cx.f_vector(),
            "truncated": cx.truncated,
            "betti": s.betti,
            "torsion": s.torsion,
            "computed_dim": s.computed_dim,
            "hconn": _enc(hconn),
            "hconn_caveat": caveat,
        }, indent=2))
    else:
        print("f-vector:", cx.f_vector(), "(truncated)" if cx.truncated else "")
        print("betti:   ", s.betti)
        print("torsion: ", s.torsion)
        print("hconn:   ", _enc(hconn), "(caveat: H1 trivial)" if caveat else "")
    return EXIT_OK


def cmd_chromatic(args):
    g = _read_input(args)
    chi = chromatic_number(g, time_budget_ms=args.budget_ms)
    if isinstance(chi, tuple):
        if args.json:
            print(json.dumps({"lo": chi[0], "hi": chi[1]}))
        else:
            print("chi in [%d, %d] (budget exhausted)" % chi)
        return EXIT_INCONCLUSIVE
    if args.json:
        print(json.dumps({"value": _enc(chi)}))
    else:
        print("chi =", _enc(chi))
    return EXIT_OK


def cmd_conjecture(args):
    g = _read_input(args)
    opt = ReportOptions(chromatic_budget_ms=args.budget_ms or 5000)
    rep = run_conjecture_check(g, provenance=args.input or "stdin", options=opt)
    if args.json:
        print(json.dumps(rep.to_dict(), indent=2, sort_keys=True))
    else:
        print("graph %s  n=%d m=%d" % (rep.graph_id, rep.n, rep.m))
        print("zeta:  [%s, %s] (%s)" % (_enc(rep.zeta_lo), _enc(rep.zeta_hi), rep.zeta_mode))
        print("betti: %s torsion: %s" % (rep.betti, rep.torsion))
        print("hconn: %s caveat=%s" % (_enc(rep.hconn), rep.hconn_caveat))
        print("chi:   [%s, %s]" % (_enc(rep.chi_lo), _enc(rep.chi_hi)))
        print("connectivity bound:", rep.connectivity_bound)
        print("cycle bound:       ", rep.cycle_bound)
        for k, v in sorted(rep.bipartite_free_bound.items()):
            print("K%s-free bound:   %s" % (k, v))
    if rep.connectivity_bound == "violated":
        print("VIOLATION of the connectivity bound; certificates above", file=sys.stderr)
        return EXIT_CRITERION
    statuses = [rep.connectivity_bound, rep.cycle_bound, *rep.bipartite_free_bound.values()]
    if all(s == "inconclusive" for s in statuses):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_sweep(args):
    if args.model == "gnp":
        params = {"n": args.n, "p": args.p}
    else:
        params = {"w": [float(x) for x in args.weights.split(",")]}
    opt = ReportOptions(
        homology_max_dim=args.max_dim,
        chromatic_budget_ms=args.budget_ms or 3000,
    )
    sw = run_random_sweep(args.model, params, args.trials, args.seed,
                          options=opt, threads=args.threads)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(sw.to_csv())
    if args.json_out:
        with open(args.json_out, "w") as fh:
            fh.write(sw.to_json())
    if args.json:
        print(sw.to_json())
    else:
        for agg in sw.aggregates:
            print(json.dumps(agg))
        if not args.csv:
            sys.stdout.write(sw.to_csv())
    return EXIT_OK


def cmd_paper_suite(args):
    indices = set(args.only) if args.only else None
    results = suite.run_suite(indices=indices, stream=sys.stdout)
    failed = [r for r in results if not r.passed]
    print("%d/%d criteria passed" % (len(results) - len(failed), len(results)))
    return EXIT_CRITERION if failed else EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="graphwarmth")
    p.add_argument("--json", action="store_true", help="JSON output where supported")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a graph from a named family")
    g.add_argument("family")
    g.add_argument("params", nargs="*")
    g.add_argument("--seed", default="0")
    g.add_argument("--output", "-o", default="-")
    g.add_argument("--out-format", choices=["edge-list", "dimacs"], default=None)
    g.set_defaults(fn=cmd_gen)

    f = sub.add_parser("fold", help="stiff reduction by folds")
    _add_input_args(f)
    f.set_defaults(fn=cmd_fold)

    w = sub.add_parser("warmth", help="warmth via d-stable families")
    _add_input_args(w)
    w.add_argument("--mode", choices=["auto", "exact", "heuristic"], default="auto")
    w.add_argument("--max-d", type=int, default=None)
    w.add_argument("--no-fold", action="store_true", help="skip stiff reduction")
    w.set_defaults(fn=cmd_warmth)

    h = sub.add_parser("homology", help="homology of the edge-homomorphism complex")
    _add_input_args(h)
    h.add_argument("--max-dim", type=int, default=None)
    h.set_defaults(fn=cmd_homology)

    c = sub.add_parser("chromatic", help="exact chromatic number")
    _add_input_args(c)
    c.add_argument("--budget-ms", type=int, default=None)
    c.set_defaults(fn=cmd_chromatic)

    j = sub.add_parser("conjecture", help="full invariant report with bound checks")
    _add_input_args(j)
    j.add_argument("--budget-ms", type=int, default=None)
    j.set_defaults(fn=cmd_conjecture)

    s = sub.add_parser("sweep", help="seeded random-graph sweep")
    s.add_argument("--model", choices=["gnp", "chung_lu"], default="gnp")
    s.add_argument("--n", type=int, default=12)
    s.add_argument("--p", type=float, default=0.5)
    s.add_argument("--weights", default="")
    s.add_argument("--trials", type=int, default=30)
    s.add_argument("--seed", default="0")
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--max-dim", type=int, default=2)
    s.add_argument("--budget-ms", type=int, default=None)
    s.add_argument("--csv", default=None, help="write per-trial CSV to a file")
    s.add_argument("--json-out", default=None, help="write the JSON report to a file")
    s.set_defaults(fn=cmd_sweep)

    ps = sub.add_parser("paper-suite", help="run the acceptance criteria")
    ps.add_argument("--only", type=int, nargs="*", default=None)
    ps.set_defaults(fn=cmd_paper_suite)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
