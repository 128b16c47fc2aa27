"""Core graph representation: finite simple graphs with optional loops.

Vertices are dense 0-based integers.  Adjacency is stored as one integer
bitmask per vertex, so neighborhood unions/intersections are single bitwise
operations.  A loop at v is bit v of adj[v].
"""

import math
from io import StringIO

MAX_VERTICES = 1024


class ParseError(ValueError):
    """Malformed graph file; carries the 1-based line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)


def bits(mask):
    """Iterate over the set bit positions of a mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices):
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable graph on vertices 0..n-1 with bitmask adjacency.

    Loops are allowed and represented on the diagonal (v in adj[v]).
    Multi-edges are impossible by construction.
    """

    __slots__ = ("n", "adj", "labels")

    def __init__(self, n, edges=(), labels=None):
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError("vertex count must be in 1..%d, got %r" % (MAX_VERTICES, n))
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError("edge (%r, %r) out of range for n=%d" % (u, v, n))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self.labels = tuple(labels) if labels is not None else None

    @classmethod
    def from_adj(cls, adj, labels=None):
        g = cls.__new__(cls)
        n = len(adj)
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError("vertex count must be in 1..%d" % MAX_VERTICES)
        full = (1 << n) - 1
        for v, m in enumerate(adj):
            if m & ~full:
                raise ValueError("adjacency mask of %d mentions vertices >= n" % v)
            for u in bits(m):
                if not (adj[u] >> v) & 1:
                    raise ValueError("adjacency not symmetric at (%d, %d)" % (v, u))
        g.n = n
        g.adj = tuple(adj)
        g.labels = tuple(labels) if labels is not None else None
        return g

    # -- basic queries ----------------------------------------------------

    @property
    def vertex_mask(self):
        return (1 << self.n) - 1

    def neighborhood(self, v):
        """N(v) as a mask; v itself is included iff v is looped."""
        if not 0 <= v < self.n:
            raise ValueError("vertex %r out of range 0..%d" % (v, self.n - 1))
        return self.adj[v]

    def set_neighborhood(self, a):
        """N(A) = union of N(v) over v in A.  N(empty) = empty."""
        if a & ~self.vertex_mask:
            raise ValueError("vertex set not contained in 0..%d" % (self.n - 1))
        m = 0
        for v in bits(a):
            m |= self.adj[v]
        return m

    def has_edge(self, u, v):
        return bool((self.adj[u] >> v) & 1)

    def has_loop(self, v):
        return bool((self.adj[v] >> v) & 1)

    def degree(self, v):
        return self.adj[v].bit_count()

    def edges(self):
        """Undirected edges as (u, v) with u <= v; a loop appears as (v, v)."""
        for u in range(self.n):
            m = self.adj[u] >> u
            for k in bits(m):
                yield (u, u + k)

    @property
    def edge_count(self):
        return sum(1 for _ in self.edges())

    def directed_edges(self):
        """All ordered pairs (u, v) with uv an edge; a loop yields (v, v) once."""
        for u in range(self.n):
            for v in bits(self.adj[u]):
                yield (u, v)

    def components(self):
        """Connected components as a list of vertex masks."""
        seen = 0
        out = []
        for s in range(self.n):
            if (seen >> s) & 1:
                continue
            comp = 1 << s
            frontier = 1 << s
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(comp)
        return out

    def is_connected(self):
        return len(self.components()) == 1

    def is_bipartite(self):
        """Return (flag, parts).

        parts is a pair of vertex masks (the union of per-component color
        classes) when the graph is bipartite, else None.  A looped vertex is
        an odd closed walk, so any loop means not bipartite.
        """
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] != -1:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                if (self.adj[v] >> v) & 1:
                    return False, None
                for u in bits(self.adj[v]):
                    if color[u] == -1:
                        color[u] = 1 - color[v]
                        stack.append(u)
                    elif color[u] == color[v]:
                        return False, None
        p0 = mask_of(v for v in range(self.n) if color[v] == 0)
        return True, (p0, self.vertex_mask & ~p0)

    def girth(self):
        """Length of a shortest cycle; loops count as girth 1; math.inf for forests."""
        if any(self.has_loop(v) for v in range(self.n)):
            return 1
        best = math.inf
        # BFS from each root; a non-tree edge seen at depth d closes a cycle of
        # length dist[u] + dist[w] + 1.  The minimum over roots is exact.
        for root in range(self.n):
            dist = [-1] * self.n
            parent = [-1] * self.n
            dist[root] = 0
            queue = [root]
            while queue:
                nxt = []
                for v in queue:
                    if 2 * dist[v] >= best:
                        continue
                    for u in bits(self.adj[v]):
                        if dist[u] == -1:
                            dist[u] = dist[v] + 1
                            parent[u] = v
                            nxt.append(u)
                        elif u != parent[v]:
                            best = min(best, dist[u] + dist[v] + 1)
                queue = nxt
        return best

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return "Graph(n=%d, edges=%d)" % (self.n, self.edge_count)


# -- serialization --------------------------------------------------------

FORMATS = ("edge-list", "dimacs")


def parse_edge_list(text):
    """Edge-list format: first line n, then "u v" per line, '#' comments."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise ParseError("expected vertex count, got %r" % line, lineno)
            if n < 1:
                raise ParseError("vertex count must be >= 1", lineno)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("expected 'u v', got %r" % line, lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("non-integer vertex in %r" % line, lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError("vertex index out of range 0..%d in %r" % (n - 1, line), lineno)
        edges.append((u, v))
    if n is None:
        raise ParseError("empty input")
    return Graph(n, edges)


def format_edge_list(g):
    out = [str(g.n)]
    out.extend("%d %d" % e for e in g.edges())
    return "\n".join(out) + "\n"


def parse_dimacs(text):
    """DIMACS .col format; vertices are 1-indexed in the file."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] not in ("edge", "edges", "col"):
                raise ParseError("bad problem line %r" % line, lineno)
            try:
                n = int(parts[2])
            except ValueError:
                raise ParseError("bad vertex count in %r" % line, lineno)
            if n < 1:
                raise ParseError("vertex count must be >= 1", lineno)
        elif line.startswith("e"):
            if n is None:
                raise ParseError("edge before problem line", lineno)
            parts = line.split()
            if len(parts) != 3:
                raise ParseError("expected 'e u v', got %r" % line, lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError("non-integer vertex in %r" % line, lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError("vertex index out of range 1..%d" % n, lineno)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError("unrecognized line %r" % line, lineno)
    if n is None:
        raise ParseError("missing problem line")
    return Graph(n, edges)


def format_dimacs(g):
    out = ["p edge %d %d" % (g.n, g.edge_count)]
    out.extend("e %d %d" % (u + 1, v + 1) for u, v in g.edges())
    return "\n".join(out) + "\n"


def read_graph(source, fmt="edge-list"):
    """Read a graph from a path or a text stream."""
    if fmt not in FORMATS:
        raise ValueError("unknown format %r; expected one of %s" % (fmt, FORMATS))
    if hasattr(source, "read"):
        text = source.read()
    else:
        with open(source) as fh:
            text = fh.read()
    return parse_edge_list(text) if fmt == "edge-list" else parse_dimacs(text)


def write_graph(g, target, fmt="edge-list"):
    """Write a graph to a path or a text stream."""
    if fmt not in FORMATS:
        raise ValueError("unknown format %r; expected one of %s" % (fmt, FORMATS))
    text = format_edge_list(g) if fmt == "edge-list" else format_dimacs(g)
    if hasattr(target, "write"):
        target.write(text)
    else:
        with open(target, "w") as fh:
            fh.write(text)


def to_text(g, fmt="edge-list"):
    buf = StringIO()
    write_graph(g, buf, fmt)
    return buf.getvalue()
