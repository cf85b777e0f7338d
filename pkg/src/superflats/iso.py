"""Graph canonical forms and isomorphism testing.

Canonical form: the lexicographically minimal lower-triangle adjacency
bitstring over all vertex permutations, with prefix pruning; exact but
meant for small graphs (dedup keys).  Isomorphism testing uses iterated
color refinement plus backtracking and scales to the Levi graphs used
here (~40 vertices).
"""

from typing import Optional, Sequence

from .errors import SizeLimitError
from .graphs import Graph, bits
from .limits import LIMITS


def canonical_form(g: Graph) -> tuple:
    """Permutation-minimal tuple of lower-triangle adjacency rows."""
    n = g.n
    if n > LIMITS.minor_n:
        raise SizeLimitError(f"canonical form limited to n <= {LIMITS.minor_n}")
    if n == 0:
        return ()
    best: list = [None]

    def dfs(assigned: list, rows: tuple) -> None:
        k = len(assigned)
        if best[0] is not None and rows > best[0][:k]:
            return
        if k == n:
            if best[0] is None or rows < best[0]:
                best[0] = rows
            return
        used = set(assigned)
        cands = []
        for v in range(n):
            if v in used:
                continue
            row = 0
            for i, w in enumerate(assigned):
                if g.adj[v] >> w & 1:
                    row |= 1 << i
            cands.append((row, v))
        cands.sort()
        for row, v in cands:
            dfs(assigned + [v], rows + (row,))

    dfs([], ())
    return best[0]


def _refine(g: Graph, colors: Sequence[int]) -> list:
    colors = list(colors)
    for _ in range(g.n):
        sig = [(colors[v], tuple(sorted(colors[w] for w in bits(g.adj[v]))))
               for v in range(g.n)]
        ranks = {s: r for r, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new
    return colors


def find_isomorphism(g1: Graph, g2: Graph,
                     colors1: Optional[Sequence[int]] = None,
                     colors2: Optional[Sequence[int]] = None):
    """Vertex bijection preserving adjacency (and given colors), or None."""
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return None
    n = g1.n
    c1 = _refine(g1, colors1 if colors1 is not None else [0] * n)
    c2 = _refine(g2, colors2 if colors2 is not None else [0] * n)
    if sorted(c1) != sorted(c2):
        return None
    order = sorted(range(n), key=lambda v: (c1.count(c1[v]), v))
    mapping = [-1] * n
    used = [False] * n

    def match(pos: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        for w in range(n):
            if used[w] or c2[w] != c1[v]:
                continue
            ok = True
            for u in order[:pos]:
                if (g1.adj[v] >> u & 1) != (g2.adj[w] >> mapping[u] & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if match(pos + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    return tuple(mapping) if match(0) else None


def graphs_isomorphic(g1: Graph, g2: Graph) -> bool:
    return find_isomorphism(g1, g2) is not None
