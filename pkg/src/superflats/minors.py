"""Graph minors and the contraction-minor rank (cm-rank).

cm-rank is the largest c-rank over all minors.  Vertex deletions never
raise the rank, so the search reduces to connected partitions (the
contraction pattern) followed by optional edge deletions, encoded as a
wildcard matrix whose free entries stand for "either 0 or 1".
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional

from .errors import PreconditionError, ShapeError, SizeLimitError
from .flats import c_rank
from .graphs import Graph, bits, is_connected, mask_of, popcount, restriction
from .iso import canonical_form
from .limits import LIMITS

STAR = 2  # wildcard entry: resolves to 0 or 1


# ------------------------------------------------------------- minor ops

@dataclass(frozen=True)
class MinorOp:
    kind: str  # "delete_vertex" | "delete_edge" | "contract"
    u: int
    v: Optional[int] = None


def apply_minor_op(g: Graph, op: MinorOp) -> Graph:
    if op.kind == "delete_vertex":
        return restriction(g, g.vertex_mask & ~(1 << op.u))[0]
    if op.kind == "delete_edge":
        if op.v is None or not g.has_edge(op.u, op.v):
            raise PreconditionError(f"no edge ({op.u},{op.v}) to delete")
        rows = list(g.adj)
        rows[op.u] &= ~(1 << op.v)
        rows[op.v] &= ~(1 << op.u)
        return Graph(g.n, tuple(rows), g.labels)
    if op.kind == "contract":
        if op.v is None or not g.has_edge(op.u, op.v):
            raise PreconditionError(f"no edge ({op.u},{op.v}) to contract")
        u, v = min(op.u, op.v), max(op.u, op.v)
        rows = list(g.adj)
        rows[u] = (rows[u] | rows[v]) & ~(1 << u) & ~(1 << v)
        for w in bits(rows[u]):
            rows[w] |= 1 << u
        merged = Graph(g.n, tuple(r & ~(1 << v) for r in rows))
        return restriction(merged, merged.vertex_mask & ~(1 << v))[0]
    raise PreconditionError(f"unknown minor operation {op.kind!r}")


def _connected_submasks(g: Graph) -> list:
    out = []
    for mask in range(1, 1 << g.n):
        start = mask & -mask
        comp = start
        while True:
            grow = comp
            for v in bits(comp):
                grow |= g.adj[v] & mask
            if grow == comp:
                break
            comp = grow
        if comp == mask:
            out.append(mask)
    return out


def is_minor(h: Graph, g: Graph) -> bool:
    """Exact minor test via disjoint connected branch sets."""
    if g.n > LIMITS.minor_n:
        raise SizeLimitError(f"minor testing limited to n <= {LIMITS.minor_n}")
    if h.n > g.n or h.edge_count() > g.edge_count():
        return False
    if h.n == 0:
        return True
    subsets = _connected_submasks(g)
    order = sorted(range(h.n), key=h.degree, reverse=True)
    branch = [0] * h.n

    def place(pos: int, used: int) -> bool:
        if pos == h.n:
            return True
        if g.n - popcount(used) < h.n - pos:
            return False
        x = order[pos]
        for cand in subsets:
            if cand & used:
                continue
            ok = True
            for prev in order[:pos]:
                if h.has_edge(x, prev):
                    linked = False
                    for a in bits(cand):
                        if g.adj[a] & branch[prev]:
                            linked = True
                            break
                    if not linked:
                        ok = False
                        break
            if ok:
                branch[x] = cand
                if place(pos + 1, used | cand):
                    return True
                branch[x] = 0
        return False

    return place(0, 0)


def graphs_isomorphic(g1: Graph, g2: Graph) -> bool:
    from .iso import graphs_isomorphic as _gi
    return _gi(g1, g2)


# ----------------------------------------------------- connected partitions

def is_connected_matrix_criterion(g: Graph) -> bool:
    """Connectivity via absence of a null off-diagonal adjacency block."""
    if g.n <= 1:
        return True
    full = g.vertex_mask
    for imask in range(1, full):  # proper nonempty I; J = complement
        jmask = full & ~imask
        if all(g.adj[v] & jmask == 0 for v in bits(imask)):
            return False
    return True


def connected_partitions(g: Graph):
    """All partitions of the vertex set into connected blocks, as mask
    tuples ordered by least vertex."""
    if g.n == 0:
        yield ()
        return

    def rec(remaining: int, blocks: tuple):
        if not remaining:
            yield blocks
            return
        v = remaining & -remaining
        rest = remaining ^ v
        # v starts a fresh block: enumerate connected subsets containing v
        sub, verts = restriction(g, remaining)
        pos = {orig: i for i, orig in enumerate(verts)}
        for mask in _connected_submasks(sub):
            if mask & (1 << pos[v.bit_length() - 1]):
                block = mask_of(verts[i] for i in bits(mask))
                yield from rec(remaining & ~block, blocks + (block,))

    yield from rec(g.vertex_mask, ())


# ----------------------------------------------------------- wildcard rank

@dataclass(frozen=True)
class WildcardMatrix:
    """Square 0/1/STAR matrix; STAR entries may resolve either way."""

    n: int
    entries: tuple

    @classmethod
    def from_rows(cls, rows) -> "WildcardMatrix":
        grid = tuple(tuple(r) for r in rows)
        if any(len(r) != len(grid) for r in grid):
            raise ShapeError("wildcard matrix must be square")
        if any(e not in (0, 1, STAR) for r in grid for e in r):
            raise ShapeError("entries must be 0, 1, or STAR")
        return cls(len(grid), grid)

    def resolutions(self):
        """All boolean resolutions, as row tuples (oracle; exponential)."""
        stars = [(i, j) for i in range(self.n) for j in range(self.n)
                 if self.entries[i][j] == STAR]
        for choice in range(1 << len(stars)):
            grid = [list(r) for r in self.entries]
            for k, (i, j) in enumerate(stars):
                grid[i][j] = choice >> k & 1
            yield tuple(tuple(r) for r in grid)


def contracted_wildcard_matrix(g: Graph, blocks) -> WildcardMatrix:
    """Complemented adjacency of the contraction by a connected partition,
    with every entry that an edge deletion could flip marked STAR."""
    blocks = tuple(blocks)
    union = 0
    for b in blocks:
        union |= b
    if union != g.vertex_mask or sum(popcount(b) for b in blocks) != g.n:
        raise PreconditionError("blocks must partition the vertex set")
    for b in blocks:
        if not is_connected(restriction(g, b)[0]):
            raise PreconditionError("every block must induce a connected graph")
    m = len(blocks)
    grid = [[1] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            touching = any(g.adj[v] & blocks[j] for v in bits(blocks[i]))
            if touching:  # a 0 occurs in the complemented block
                grid[i][j] = grid[j][i] = STAR
    return WildcardMatrix.from_rows(grid)


def wildcard_rank(w: WildcardMatrix) -> int:
    """Largest k admitting rows/columns in triangular pattern: diagonal
    entries in {1, STAR}, above-diagonal entries in {0, STAR}."""
    n = w.n
    if n > LIMITS.wildcard_side:
        raise SizeLimitError(
            f"wildcard rank limited to side {LIMITS.wildcard_side}")
    ones = [mask_of(j for j in range(n) if w.entries[i][j] == 1)
            for i in range(n)]
    stars = [mask_of(j for j in range(n) if w.entries[i][j] == STAR)
             for i in range(n)]
    memo: dict = {}

    def indep(jmask: int, used: int) -> bool:
        if jmask == 0:
            return True
        key = (jmask, used)
        got = memo.get(key)
        if got is not None:
            return got
        res = False
        for r in range(n):
            if used >> r & 1:
                continue
            hard = ones[r] & jmask
            if hard and hard & (hard - 1):
                continue  # two fixed 1s: no column can be the diagonal
            cands = hard if hard else stars[r] & jmask
            c = cands
            while c and not res:
                bit = c & -c
                c ^= bit
                res = indep(jmask ^ bit, used | 1 << r)
        memo[key] = res
        return res

    best = 0

    def extend(jmask: int, size: int, start: int) -> None:
        nonlocal best
        if size > best:
            best = size
        for j in range(start, n):
            if size + (n - j) <= best:
                return
            cand = jmask | 1 << j
            if indep(cand, 0):
                extend(cand, size + 1, j + 1)

    extend(0, 0, 0)
    return best


# ----------------------------------------------------------------- cm-rank

def cm_rank(g: Graph) -> int:
    return cm_rank_report(g)["cm_rank"]


def cm_rank_report(g: Graph) -> dict:
    """cm-rank with a witnessing connected partition."""
    if not is_connected(g):
        raise PreconditionError("cm-rank requires a connected graph")
    if g.n > LIMITS.cm_n:
        raise SizeLimitError(f"cm-rank limited to n <= {LIMITS.cm_n}")
    best, best_blocks = 0, ()
    for blocks in connected_partitions(g):
        r = wildcard_rank(contracted_wildcard_matrix(g, blocks))
        if r > best:
            best, best_blocks = r, blocks
    return {"cm_rank": best,
            "partition": [sorted(bits(b)) for b in best_blocks]}


# ------------------------------------------------------- forbidden minors

def forbidden_family(m: int) -> List[Graph]:
    """Representatives of all graphs on at most 2m vertices with c-rank
    m + 1; excluding them as minors characterizes cm-rank <= m."""
    from .catalog import all_graphs, nonisomorphic
    if m == 0:
        return [Graph.from_edges(1, [])]
    found = []
    for n in range(1, 2 * m + 1):
        found.extend(g for g in all_graphs(n) if c_rank(g) == m + 1)
    return nonisomorphic(found)


def avoids_family(g: Graph, family: Iterable[Graph]) -> bool:
    return all(not is_minor(f, g) for f in family)


def canonical_key(g: Graph) -> tuple:
    return (g.n, canonical_form(g))
