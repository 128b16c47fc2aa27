"""Invariant reports, bound checking, and seeded random-graph sweeps.

Every numeric field carries its provenance (exact / heuristic / inconclusive)
and every bound check distinguishes consistent, consistent-with-caveat,
violated, inconclusive and not-applicable.  The caveat states that the
homological connectivity can exceed the topological one when H_1 vanishes, so
an apparent violation in that situation is only inconclusive, while a pass
only gets stronger.
"""

import concurrent.futures
import csv
import hashlib
import io
import json
import math
from dataclasses import dataclass, field

from . import generators, homcomplex
from .chromatic import chromatic_number
from .warmth import find_complete_bipartite, warmth

SCHEMA = "invariant-report/1"

CSV_COLUMNS = [
    "schema",
    "graph_id",
    "provenance",
    "n",
    "m",
    "zeta_lo",
    "zeta_hi",
    "zeta_mode",
    "betti",
    "torsion",
    "homology_truncated",
    "hconn",
    "hconn_caveat",
    "chi_lo",
    "chi_hi",
    "connectivity_bound",
    "cycle_bound",
    "bipartite_free_bound",
]

KAB_SIDES = ((2, 2), (2, 3), (3, 3))


def graph_id(g):
    """Canonical hash of the sorted edge list (with the vertex count)."""
    payload = "%d|%s" % (g.n, ",".join("%d-%d" % e for e in sorted(g.edges())))
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


@dataclass
class ReportOptions:
    warmth_mode: str = "auto"
    homology_max_dim: int = None   # None: full for small graphs, 2 otherwise
    full_homology: object = "auto"  # True / False / "auto" by boundary size
    chromatic_budget_ms: int = 5000
    kab_checks: tuple = KAB_SIDES

    # Smith normal form is exact but slow on big boundary matrices; above
    # this many cells in a dimension, auto mode reports Betti numbers from
    # rational ranks and flags torsion as uncomputed.
    snf_cell_limit: int = 600

    def resolved_max_dim(self, g):
        if self.homology_max_dim is not None:
            return self.homology_max_dim
        return homcomplex.DEFAULT_MAX_DIM if g.n <= 12 else 2

    def wants_full_homology(self, cx):
        if self.full_homology == "auto":
            return max(cx.f_vector()) <= self.snf_cell_limit
        return bool(self.full_homology)


@dataclass
class InvariantReport:
    graph_id: str
    provenance: str
    n: int
    m: int
    zeta_lo: float
    zeta_hi: float
    zeta_mode: str
    betti: list
    torsion: list
    homology_truncated: bool
    hconn: float
    hconn_caveat: bool
    chi_lo: float
    chi_hi: float
    connectivity_bound: str
    cycle_bound: str
    bipartite_free_bound: dict = field(default_factory=dict)

    def to_row(self):
        fmt = lambda x: "inf" if x == math.inf else ("-1" if x == -1 else str(x))
        return [
            SCHEMA,
            self.graph_id,
            self.provenance,
            str(self.n),
            str(self.m),
            fmt(self.zeta_lo),
            fmt(self.zeta_hi),
            self.zeta_mode,
            ";".join(str(b) for b in self.betti),
            ";".join(
                "?" if layer is None else ",".join(str(t) for t in layer)
                for layer in self.torsion
            ),
            str(int(self.homology_truncated)),
            fmt(self.hconn),
            str(int(self.hconn_caveat)),
            fmt(self.chi_lo),
            fmt(self.chi_hi),
            self.connectivity_bound,
            self.cycle_bound,
            ";".join("%d,%d:%s" % (a, b, s) for (a, b), s in sorted(self.bipartite_free_bound.items())),
        ]

    def to_dict(self):
        enc = lambda x: "inf" if x == math.inf else x
        return {
            "schema": SCHEMA,
            "graph_id": self.graph_id,
            "provenance": self.provenance,
            "n": self.n,
            "m": self.m,
            "zeta": {"lo": enc(self.zeta_lo), "hi": enc(self.zeta_hi), "mode": self.zeta_mode},
            "betti": self.betti,
            "torsion": self.torsion,
            "homology_truncated": self.homology_truncated,
            "hconn": {"value": enc(self.hconn), "caveat": self.hconn_caveat},
            "chi": {"lo": enc(self.chi_lo), "hi": enc(self.chi_hi)},
            "bounds": {
                "connectivity": self.connectivity_bound,
                "cycle": self.cycle_bound,
                "bipartite_free": {
                    "%d,%d" % k: v for k, v in sorted(self.bipartite_free_bound.items())
                },
            },
        }


def _connectivity_bound_status(zeta_lo, zeta_hi, hconn, caveat):
    """Status of zeta <= hconn + 3."""
    if hconn == math.inf:
        return "consistent-with-caveat" if caveat else "consistent"
    bound = hconn + 3
    if zeta_hi <= bound:
        return "consistent-with-caveat" if caveat else "consistent"
    if zeta_lo > bound:
        # hconn may overestimate connectivity exactly when the caveat is set,
        # so a would-be violation is then only inconclusive
        return "inconclusive" if caveat else "violated"
    return "inconclusive"


def _cycle_bound_status(betti, computed_dim, zeta_lo, zeta_hi):
    """Status of: free part of H_1 nontrivial implies zeta <= 3."""
    if computed_dim < 1:
        return "inconclusive"
    if betti[1] == 0:
        return "not-applicable"
    if zeta_hi <= 3:
        return "consistent"
    if zeta_lo > 3:
        return "violated"
    return "inconclusive"


def _kab_bound_status(g, a, b, zeta_lo, zeta_hi):
    """Status of: no K_{a,b} subgraph implies zeta <= a + b - 1."""
    if find_complete_bipartite(g, a, b) is not None:
        return "not-applicable"
    bound = a + b - 1
    if zeta_hi <= bound:
        return "consistent"
    if zeta_lo > bound:
        return "violated"
    return "inconclusive"


def run_conjecture_check(g, provenance="", options=None):
    """All invariants of one graph plus the status of each bound."""
    if g.edge_count == 0:
        raise ValueError("reports require a graph with at least one edge")
    options = options or ReportOptions()

    wr = warmth(g, mode=options.warmth_mode)
    max_dim = options.resolved_max_dim(g)
    cx = homcomplex.build_hom_k2(g, max_dim=max_dim)
    if options.wants_full_homology(cx):
        summary = homcomplex.homology(cx)
    else:
        summary = homcomplex.homology_fast(cx)
    hconn, caveat = homcomplex.homological_connectivity(summary)

    chi = chromatic_number(g, time_budget_ms=options.chromatic_budget_ms)
    if isinstance(chi, tuple):
        chi_lo, chi_hi = chi
    else:
        chi_lo = chi_hi = chi

    kab = {
        (a, b): _kab_bound_status(g, a, b, wr.lo, wr.hi)
        for (a, b) in options.kab_checks
    }
    return InvariantReport(
        graph_id=graph_id(g),
        provenance=provenance,
        n=g.n,
        m=g.edge_count,
        zeta_lo=wr.lo,
        zeta_hi=wr.hi,
        zeta_mode=wr.mode,
        betti=summary.betti,
        torsion=summary.torsion,
        homology_truncated=summary.truncated,
        hconn=hconn,
        hconn_caveat=caveat,
        chi_lo=chi_lo,
        chi_hi=chi_hi,
        connectivity_bound=_connectivity_bound_status(wr.lo, wr.hi, hconn, caveat),
        cycle_bound=_cycle_bound_status(summary.betti, summary.computed_dim, wr.lo, wr.hi),
        bipartite_free_bound=kab,
    )


# -- sweeps ---------------------------------------------------------------

def trial_seed(seed, index):
    return "%s:%d" % (seed, index)


@dataclass
class SweepResult:
    model: str
    params: dict
    trials: int
    seed: object
    reports: list
    aggregates: list

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.reports:
            w.writerow(r.to_row())
        return buf.getvalue()

    def to_json(self):
        return json.dumps(
            {
                "schema": SCHEMA,
                "model": self.model,
                "params": self.params,
                "trials": self.trials,
                "seed": str(self.seed),
                "reports": [r.to_dict() for r in self.reports],
                "aggregates": self.aggregates,
            },
            sort_keys=True,
            indent=2,
        )


def _aggregate(label, reports):
    zetas = [r.zeta_lo for r in reports if r.zeta_mode == "exact" and r.zeta_lo != math.inf]
    hconns = [r.hconn for r in reports if r.hconn not in (math.inf,) and r.hconn is not None]
    out = {"config": label, "trials": len(reports)}
    out["zeta_exact_trials"] = len(zetas)
    out["zeta_mean"] = sum(zetas) / len(zetas) if zetas else None
    his = [r.zeta_hi for r in reports if r.zeta_hi != math.inf]
    out["zeta_hi_mean"] = sum(his) / len(his) if his else None
    out["zeta_hi_trials"] = len(his)
    out["zeta_min"] = min(zetas) if zetas else None
    out["zeta_max"] = max(zetas) if zetas else None
    out["hconn_mean"] = sum(hconns) / len(hconns) if hconns else None
    out["hconn_min"] = min(hconns) if hconns else None
    out["hconn_max"] = max(hconns) if hconns else None
    return out


def run_random_sweep(model, params, trials, seed, options=None, threads=1):
    """Per-trial reports plus aggregates; byte-identical output for a seed.

    model "gnp" takes params {"n": ..., "p": ...}; model "chung_lu" takes
    {"w": [...]}.  Edgeless draws are redrawn with a derived sub-seed (noted
    in provenance) so that every trial yields a report.
    """
    if model not in ("gnp", "chung_lu"):
        raise ValueError("model must be 'gnp' or 'chung_lu'")
    options = options or ReportOptions()

    def make_graph(i):
        attempt = 0
        while True:
            s = trial_seed(seed, i) if attempt == 0 else trial_seed(seed, i) + "/r%d" % attempt
            if model == "gnp":
                g = generators.erdos_renyi(params["n"], params["p"], s)
            else:
                g = generators.chung_lu(params["w"], s)
            if g.edge_count > 0:
                return g, s
            attempt += 1

    def one(i):
        g, s = make_graph(i)
        prov = "%s(%s) seed=%s" % (
            model,
            ",".join("%s=%s" % kv for kv in sorted(params.items())),
            s,
        )
        return run_conjecture_check(g, provenance=prov, options=options)

    if threads > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(one, range(trials)))
    else:
        reports = [one(i) for i in range(trials)]

    label = "%s:%s" % (model, ",".join("%s=%s" % kv for kv in sorted(params.items())))
    return SweepResult(model, dict(params), trials, seed, reports, [_aggregate(label, reports)])
