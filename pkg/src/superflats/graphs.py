"""Finite simple undirected graphs with bitset adjacency rows.

Vertices are indices 0..n-1; each adjacency row is an int bitmask, so all
set operations on neighborhoods are single-word bit arithmetic.  Capacity
is bounded by the configured vertex limit (default 64).
"""

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ParseError, PreconditionError, SizeLimitError
from .limits import LIMITS
from .sb import ONE, ZERO, SBMatrix

INF = math.inf


def bits(mask: int):
    """Iterate set bit positions of a mask, ascending."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple  # n symmetric bitmask rows, no loops
    labels: tuple | None = field(default=None, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple], labels=None) -> "Graph":
        if n > LIMITS.vertex_capacity:
            raise SizeLimitError(
                f"{n} vertices exceeds capacity {LIMITS.vertex_capacity}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ParseError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ParseError("label count != vertex count")
        return cls(n, tuple(rows), labels)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def star(self, v: int) -> int:
        return self.adj[v]

    def star_of_set(self, wmask: int) -> int:
        """St(W) = intersection of the stars of W; St(0) = V."""
        result = self.vertex_mask
        for v in bits(wmask):
            result &= self.adj[v]
        return result

    def closed_star(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> list:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)


def adjacency_matrix(g: Graph) -> SBMatrix:
    return SBMatrix.from_rows(
        [[ONE if g.adj[i] >> j & 1 else ZERO for j in range(g.n)]
         for i in range(g.n)])


def complemented_adjacency(g: Graph) -> SBMatrix:
    return SBMatrix.from_rows(
        [[ZERO if g.adj[i] >> j & 1 else ONE for j in range(g.n)]
         for i in range(g.n)])


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple((full & ~g.adj[v]) & ~(1 << v) for v in range(g.n)),
                 g.labels)


def restriction(g: Graph, vertices) -> tuple:
    """Induced subgraph; returns (graph, vertex tuple) with verts[i] = old index."""
    verts = tuple(sorted(bits(vertices))) if isinstance(vertices, int) \
        else tuple(sorted(vertices))
    pos = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        row = 0
        for w in bits(g.adj[v]):
            if w in pos:
                row |= 1 << pos[w]
        rows.append(row)
    labels = tuple(g.label(v) for v in verts) if g.labels else None
    return Graph(len(verts), tuple(rows), labels), verts


def is_subgraph(h: Graph, g: Graph, mapping: Sequence[int]) -> bool:
    """True iff the injection mapping sends every edge of h to an edge of g."""
    if len(set(mapping)) != h.n:
        raise PreconditionError("mapping must be injective on V(h)")
    return all(g.has_edge(mapping[u], mapping[v]) for u, v in h.edges())


def is_restriction(h: Graph, g: Graph, mapping: Sequence[int]) -> bool:
    """True iff mapping identifies h with the induced subgraph on its image."""
    if len(set(mapping)) != h.n:
        raise PreconditionError("mapping must be injective on V(h)")
    for u in range(h.n):
        for v in range(u + 1, h.n):
            if h.has_edge(u, v) != g.has_edge(mapping[u], mapping[v]):
                return False
    return True


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, tuple(rows))


# ---------------------------------------------------------------- metrics

def bfs_distances(g: Graph, source: int) -> list:
    dist = [INF] * g.n
    dist[source] = 0
    frontier = [source]
    d = 0
    seen = 1 << source
    while frontier:
        d += 1
        nxt = []
        for v in frontier:
            new = g.adj[v] & ~seen
            seen |= new
            for w in bits(new):
                dist[w] = d
                nxt.append(w)
        frontier = nxt
    return dist


def components(g: Graph) -> list:
    out = []
    left = g.vertex_mask
    while left:
        start = (left & -left).bit_length() - 1
        comp = 1 << start
        frontier = comp
        while frontier:
            new = 0
            for v in bits(frontier):
                new |= g.adj[v]
            frontier = new & ~comp
            comp |= new
        out.append(comp)
        left &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return g.n == 0 or len(components(g)) == 1


def girth(g: Graph):
    """Length of the shortest cycle; INF for forests."""
    best = INF
    for u, v in g.edges():
        # shortest cycle through edge uv = 1 + dist(u, v) in g - uv
        rows = list(g.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        d = bfs_distances(Graph(g.n, tuple(rows)), u)[v]
        if d + 1 < best:
            best = d + 1
    return best


def diameter(g: Graph):
    if g.n == 0:
        return INF
    best = 0
    for v in range(g.n):
        ecc = max(bfs_distances(g, v))
        if ecc == INF:
            return INF
        best = max(best, ecc)
    return best


def is_bipartite(g: Graph) -> bool:
    color = [None] * g.n
    for s in range(g.n):
        if color[s] is not None:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in bits(g.adj[v]):
                if color[w] is None:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


@dataclass(frozen=True)
class GraphMetrics:
    girth: object
    diameter: object
    mindeg: int
    maxdeg: int
    is_connected: bool
    is_bipartite: bool
    is_cubic: bool
    components: tuple


def metrics(g: Graph) -> GraphMetrics:
    degs = [g.degree(v) for v in range(g.n)]
    return GraphMetrics(
        girth=girth(g),
        diameter=diameter(g),
        mindeg=min(degs, default=0),
        maxdeg=max(degs, default=0),
        is_connected=is_connected(g),
        is_bipartite=is_bipartite(g),
        is_cubic=bool(degs) and all(d == 3 for d in degs),
        components=tuple(components(g)),
    )


# ---------------------------------------------------------------- soberness

def is_sober(g: Graph) -> bool:
    """True iff the star map v -> St(v) is injective."""
    return len({g.adj[v] for v in range(g.n)}) == g.n


def sober_quotient(g: Graph) -> tuple:
    """Restriction to minimum-index star-class representatives.

    Returns (quotient graph, retraction tuple, representative vertices);
    retraction[v] is the representative original vertex of v's star class.
    """
    if not is_connected(g):
        raise PreconditionError("sober_quotient requires a connected graph")
    rep_of_star: dict = {}
    retraction = []
    for v in range(g.n):
        retraction.append(rep_of_star.setdefault(g.adj[v], v))
    reps = sorted(set(retraction))
    quotient, verts = restriction(g, reps)
    return quotient, tuple(retraction), verts


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.edge_count() == g.n - 1


def sober_tree_characterization(t: Graph) -> tuple:
    """(is_sober, no two leaves at distance 2); the two flags must agree."""
    if not is_tree(t):
        raise PreconditionError("requires a tree (acyclic connected graph)")
    leaves = [v for v in range(t.n) if t.degree(v) == 1]
    clash = any(bfs_distances(t, u)[v] == 2
                for i, u in enumerate(leaves) for v in leaves[i + 1:])
    flags = (is_sober(t), not clash)
    assert flags[0] == flags[1], "leaf-distance criterion disagrees with soberness"
    return flags


# ---------------------------------------------------------------- coloring

def greedy_chromatic_upper_bound(g: Graph) -> int:
    order = sorted(range(g.n), key=g.degree, reverse=True)
    color = {}
    used = 0
    for v in order:
        taken = {color[w] for w in bits(g.adj[v]) if w in color}
        c = 0
        while c in taken:
            c += 1
        color[v] = c
        used = max(used, c + 1)
    return used


def _colorable(g: Graph, k: int) -> bool:
    order = sorted(range(g.n), key=g.degree, reverse=True)
    color = [-1] * g.n

    def assign(idx: int, maxused: int) -> bool:
        if idx == g.n:
            return True
        v = order[idx]
        taken = {color[w] for w in bits(g.adj[v]) if color[w] >= 0}
        # try at most one fresh color to break color symmetry
        for c in range(min(maxused + 1, k)):
            if c not in taken:
                color[v] = c
                if assign(idx + 1, max(maxused, c + 1)):
                    return True
                color[v] = -1
        return False

    return assign(0, 0)


def exact_chromatic(g: Graph) -> int:
    if g.n > LIMITS.chromatic_n:
        raise SizeLimitError(
            f"exact chromatic limited to n <= {LIMITS.chromatic_n}")
    if g.n == 0:
        return 0
    upper = greedy_chromatic_upper_bound(g)
    for k in range(1, upper + 1):
        if _colorable(g, k):
            return k
    return upper


# ---------------------------------------------------------------- formats

def parse_edge_list(text: str) -> Graph:
    """Format: first token n, then one `u v` pair per line (0-based)."""
    tokens = text.split()
    if not tokens:
        raise ParseError("empty edge-list input")
    try:
        nums = [int(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(f"non-integer token in edge list: {exc}") from None
    n, rest = nums[0], nums[1:]
    if len(rest) % 2:
        raise ParseError("odd number of edge endpoints")
    return Graph.from_edges(n, list(zip(rest[::2], rest[1::2])))


def emit_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_graph6(s: str) -> Graph:
    s = s.strip()
    if not s:
        raise ParseError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise ParseError("graph6 character out of range")
    if data[0] == 63:  # long form
        if len(data) < 4:
            raise ParseError("truncated graph6 header")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        data = data[4:]
    else:
        n = data[0]
        data = data[1:]
    nbits = n * (n - 1) // 2
    if len(data) != (nbits + 5) // 6:
        raise ParseError("graph6 length mismatch")
    bitstream = []
    for b in data:
        bitstream.extend((b >> k) & 1 for k in range(5, -1, -1))
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bitstream[idx]:
                edges.append((u, v))
            idx += 1
    return Graph.from_edges(n, edges)


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + chr((n >> 12) + 63) + chr(((n >> 6) & 63) + 63) + chr((n & 63) + 63)
    bitstream = [g.adj[u] >> v & 1 for v in range(1, n) for u in range(v)]
    while len(bitstream) % 6:
        bitstream.append(0)
    body = "".join(chr(63 + (bitstream[i] << 5 | bitstream[i + 1] << 4 |
                              bitstream[i + 2] << 3 | bitstream[i + 3] << 2 |
                              bitstream[i + 4] << 1 | bitstream[i + 5]))
                   for i in range(0, len(bitstream), 6))
    return head + body


def to_dot(g: Graph) -> str:
    lines = ["graph {"]
    for v in range(g.n):
        lines.append(f'  {v} [label="{g.label(v)}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
