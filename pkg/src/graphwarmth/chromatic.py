"""Exact chromatic number by branch and bound, with an optional time budget.

A graph with a loop has no proper coloring at all; chromatic_number reports
math.inf in that case.  With a budget, the result is either an exact int or a
(lo, hi) pair bracketing the value when time runs out.
"""

import math
import time

from .graphs import bits


def greedy_clique(g):
    """A maximal clique found greedily from each start vertex; vertex list."""
    best = []
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    for s in order:
        clique = [s]
        common = g.adj[s] & ~(1 << s)
        while common:
            v = max(bits(common), key=g.degree)
            clique.append(v)
            common &= g.adj[v] & ~(1 << v)
        if len(clique) > len(best):
            best = clique
    return best


def greedy_coloring(g):
    """DSATUR greedy coloring; returns (num_colors, colors list)."""
    colors = [-1] * g.n
    neighbor_colors = [0] * g.n  # bitmask of colors seen in the neighborhood
    used = 0
    for _ in range(g.n):
        v = max(
            (u for u in range(g.n) if colors[u] < 0),
            key=lambda u: (neighbor_colors[u].bit_count(), g.degree(u)),
        )
        c = 0
        while neighbor_colors[v] >> c & 1:
            c += 1
        colors[v] = c
        used = max(used, c + 1)
        for u in bits(g.adj[v]):
            if u != v:
                neighbor_colors[u] |= 1 << c
    return used, colors


def is_k_colorable(g, k, deadline=None):
    """Proper k-colorability by DSATUR-ordered backtracking.

    Returns True/False, or None if the deadline passes first.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if any(g.has_loop(v) for v in range(g.n)):
        return False
    if k >= g.n:
        return True
    colors = [-1] * g.n
    neighbor_colors = [0] * g.n
    full_k = (1 << k) - 1

    def rec(assigned):
        if deadline is not None and time.monotonic() > deadline:
            return None
        if assigned == g.n:
            return True
        v = max(
            (u for u in range(g.n) if colors[u] < 0),
            key=lambda u: (neighbor_colors[u].bit_count(), g.degree(u)),
        )
        avail = full_k & ~neighbor_colors[v]
        if avail == 0:
            return False
        # break color symmetry: allow at most one previously-unused color
        max_used = max((colors[u] for u in range(g.n) if colors[u] >= 0), default=-1)
        for c in bits(avail):
            if c > max_used + 1:
                break
            colors[v] = c
            touched = []
            for u in bits(g.adj[v]):
                if colors[u] < 0 and not neighbor_colors[u] >> c & 1:
                    neighbor_colors[u] |= 1 << c
                    touched.append(u)
            got = rec(assigned + 1)
            colors[v] = -1
            for u in touched:
                neighbor_colors[u] &= ~(1 << c)
            if got is not False:
                return got
        return False

    return rec(0)


def chromatic_number(g, time_budget_ms=None):
    """Exact chromatic number, or a (lo, hi) bracket on timeout.

    math.inf for graphs with a loop; 1 for edgeless graphs.
    """
    if any(g.has_loop(v) for v in range(g.n)):
        return math.inf
    if g.edge_count == 0:
        return 1 if g.n else 0
    bip, _ = g.is_bipartite()
    if bip:
        return 2
    lo = max(3, len(greedy_clique(g)))
    hi, _ = greedy_coloring(g)
    deadline = None
    if time_budget_ms is not None:
        deadline = time.monotonic() + time_budget_ms / 1000.0
    while lo < hi:
        got = is_k_colorable(g, hi - 1, deadline)
        if got is None:
            return (lo, hi)
        if got:
            hi -= 1
        else:
            lo = hi
    return lo
