"""Flats lattices of graphs and the closure rank (c-rank).

The flats of a graph are the intersection closure of its vertex stars,
with the full vertex set as top.  The c-rank is the height of that
lattice; it coincides with the rank of the complemented adjacency matrix
over the superboolean semiring.  Several independent characterizations of
independence and rank live here so they can cross-check one another.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .errors import PreconditionError
from .graphs import (Graph, bits, complement, complemented_adjacency,
                     is_connected, is_sober, mask_of, metrics, popcount,
                     restriction)
from .lattice import (SetLattice, intersection_closure, is_distributive,
                      is_geometric, is_jordan_dedekind, is_modular,
                      is_semimodular, lattice_height, maximal_chains,
                      union_closure)
from .sb import is_witness


def flats(g: Graph) -> SetLattice:
    """Intersection closure of the stars, topped by the full vertex set."""
    return intersection_closure([g.adj[v] for v in range(g.n)],
                                g.vertex_mask, g.n)


def c_rank(g: Graph) -> int:
    return lattice_height(flats(g))


# ------------------------------------------------------------ independence

@dataclass(frozen=True)
class ChainWitness:
    """Certificate that a column set J is independent.

    chain:       strictly descending flats, chain[0] = V, chain[i] the
                 star of the first i entries of `order`
    order:       the columns of J arranged so each star intersection is strict
    transversal: transversal[i] lies in chain[i] \\ chain[i+1]; these rows
                 witness J in the complemented adjacency matrix
    """

    chain: tuple
    order: tuple
    transversal: tuple

    def rows(self) -> tuple:
        return self.transversal


def _as_mask(vertices) -> int:
    return vertices if isinstance(vertices, int) else mask_of(vertices)


def is_c_independent(g: Graph, vertices) -> tuple:
    """(flag, ChainWitness or None) for the column set `vertices`.

    Tests whether the closure of the chosen stars has height |J|, then
    extracts a strictly descending star chain and a transversal of its
    successive differences; the transversal rows certify independence.
    """
    jmask = _as_mask(vertices)
    J = list(bits(jmask))
    k = len(J)
    if k == 0:
        return True, ChainWitness((g.vertex_mask,), (), ())
    closure = intersection_closure([g.adj[j] for j in J], g.vertex_mask, g.n)
    if lattice_height(closure) != k:
        return False, None

    def dfs(remaining: frozenset, current: int, order: tuple):
        if not remaining:
            return order
        for j in sorted(remaining):
            nxt = current & g.adj[j]
            if nxt != current:
                got = dfs(remaining - {j}, nxt, order + (j,))
                if got is not None:
                    return got
        return None

    order = dfs(frozenset(J), g.vertex_mask, ())
    assert order is not None, "height matched |J| but no strict star chain"
    chain = [g.vertex_mask]
    for j in order:
        chain.append(chain[-1] & g.adj[j])
    transversal = tuple(min(bits(chain[i] & ~chain[i + 1])) for i in range(k))
    witness = ChainWitness(tuple(chain), order, transversal)
    assert is_witness(complemented_adjacency(g), transversal, J)
    return True, witness


def transversal_independent(g: Graph, vertices,
                            fl: Optional[SetLattice] = None) -> bool:
    """Independence via partial transversals of maximal chains.

    J is independent iff its elements can be matched injectively to the
    successive difference sets of some maximal chain of the flats lattice.
    """
    jmask = _as_mask(vertices)
    J = list(bits(jmask))
    if not J:
        return True
    if fl is None:
        fl = flats(g)
    for chain in maximal_chains(fl):
        diffs = [fl.elements[chain[i]] & ~fl.elements[chain[i + 1]]
                 for i in range(len(chain) - 1)]
        if _matchable(J, diffs):
            return True
    return False


def _matchable(items: list, slots: list) -> bool:
    """Injective assignment of each item to a slot whose mask contains it."""
    assigned = [-1] * len(slots)

    def augment(idx: int, seen: set) -> bool:
        for s, slot in enumerate(slots):
            if s in seen or not slot >> items[idx] & 1:
                continue
            seen.add(s)
            if assigned[s] < 0 or augment(assigned[s], seen):
                assigned[s] = idx
                return True
        return False

    return all(augment(i, set()) for i in range(len(items)))


def all_c_independent_sets(g: Graph) -> list:
    """All c-independent vertex sets, as masks, grown hereditarily."""
    out = [0]
    layer = [(0, -1)]
    while layer:
        nxt = []
        for mask, last in layer:
            for j in range(last + 1, g.n):
                cand = mask | 1 << j
                if is_c_independent(g, cand)[0]:
                    out.append(cand)
                    nxt.append((cand, j))
        layer = nxt
    return out


def c_rank_transversal(g: Graph) -> int:
    """c-rank as the longest maximal chain of the flats lattice."""
    fl = flats(g)
    return max(len(chain) - 1 for chain in maximal_chains(fl))


# ------------------------------------------------- recursive rank (stars)

def restricted_c_rank(g: Graph, vertices) -> int:
    """Largest independent subset of the given columns, by witness search."""
    jmask = _as_mask(vertices)
    J = sorted(bits(jmask))
    A = complemented_adjacency(g)
    for k in range(len(J), 0, -1):
        for K in combinations(J, k):
            for I in combinations(range(g.n), k):
                if is_witness(A, I, K):
                    return k
    return 0


def c_rank_recursive(g: Graph) -> int:
    """c-rank via the two-vertex reduction.

    The rank is at least m >= 2 iff two vertices with distinct stars leave
    a restriction of their common neighborhood with rank at least m - 2.
    """
    best = 1 if g.n else 0
    for v in range(g.n):
        for w in range(v + 1, g.n):
            if g.adj[v] == g.adj[w]:
                continue
            common = g.adj[v] & g.adj[w]
            keep = g.vertex_mask & ~(1 << v) & ~(1 << w)
            sub, verts = restriction(g, keep)
            pos = {x: i for i, x in enumerate(verts)}
            j2 = mask_of(pos[x] for x in bits(common))
            best = max(best, 2 + restricted_c_rank(sub, j2))
    return best


# -------------------------------------------------- low-rank certificates

@dataclass(frozen=True)
class LowRankReport:
    rank: int
    bipartite_blocks: Optional[tuple]  # per component: (side, side) masks
    square: Optional[tuple]            # 4-cycle with opposite stars distinct
    five_config: Optional[tuple]       # (v1..v5) theta-shape certificate


def _complete_bipartite_blocks(g: Graph):
    """Per-component complete bipartitions, or None if any component fails."""
    from .graphs import components
    blocks = []
    for comp in components(g):
        verts = list(bits(comp))
        side = {verts[0]: 0}
        stack = [verts[0]]
        while stack:
            v = stack.pop()
            for w in bits(g.adj[v] & comp):
                if w not in side:
                    side[w] = 1 - side[v]
                    stack.append(w)
                elif side[w] == side[v]:
                    return None
        a = mask_of(v for v in verts if side[v] == 0)
        b = comp & ~a
        for v in bits(a):
            if g.adj[v] & comp != b:
                return None
        for v in bits(b):
            if g.adj[v] & comp != a:
                return None
        blocks.append((a, b))
    return tuple(blocks)


def _find_square(g: Graph):
    """A 4-cycle v1 v2 v3 v4 with St(v1) != St(v3) and St(v2) != St(v4)."""
    for v1 in range(g.n):
        for v3 in range(v1 + 1, g.n):
            if g.adj[v1] == g.adj[v3]:
                continue
            common = g.adj[v1] & g.adj[v3]
            for v2, v4 in combinations(bits(common), 2):
                if g.adj[v2] != g.adj[v4]:
                    return (v1, v2, v3, v4)
    return None


def _find_five_config(g: Graph):
    """Vertices v1..v5 with v1, v5 joined to v2, v3, v4, St(v1) != St(v5),
    St(v2) != St(v3), and St(v2) & St(v3) not within St(v4)."""
    for v1 in range(g.n):
        for v5 in range(g.n):
            if v5 == v1 or g.adj[v1] == g.adj[v5]:
                continue
            mid = g.adj[v1] & g.adj[v5]
            for v2, v3, v4 in _ordered_triples(mid):
                if g.adj[v2] == g.adj[v3]:
                    continue
                if g.adj[v2] & g.adj[v3] & ~g.adj[v4]:
                    return (v1, v2, v3, v4, v5)
    return None


def _ordered_triples(mask: int):
    vs = list(bits(mask))
    for a in vs:
        for b in vs:
            if b == a:
                continue
            for c in vs:
                if c != a and c != b:
                    yield a, b, c


def classify_low_rank(g: Graph) -> LowRankReport:
    """Rank together with the matching structural certificates.

    Consistency is asserted: a qualifying square exists iff rank >= 4, the
    five-vertex configuration iff rank >= 5, and rank <= 2 graphs decompose
    into complete bipartite components.
    """
    r = c_rank(g)
    blocks = _complete_bipartite_blocks(g)
    square = _find_square(g)
    five = _find_five_config(g)
    assert (r >= 4) == (square is not None)
    assert (r >= 5) == (five is not None)
    assert (r <= 2) == (blocks is not None)
    if square is not None:
        v1, v2, v3, v4 = square
        assert all(g.has_edge(*e) for e in
                   [(v1, v2), (v2, v3), (v3, v4), (v4, v1)])
    if five is not None:
        v1, v2, v3, v4, v5 = five
        assert all(g.has_edge(v1, x) and g.has_edge(v5, x)
                   for x in (v2, v3, v4))
    return LowRankReport(r, blocks, square, five)


# --------------------------------------------------------- rank-3 geometry

def require_sc3(g: Graph) -> None:
    """Raise unless g is sober, connected, of c-rank exactly 3."""
    if not is_connected(g):
        raise PreconditionError("graph must be connected")
    if not is_sober(g):
        raise PreconditionError("graph must be sober (injective star map)")
    r = c_rank(g)
    if r != 3:
        raise PreconditionError(f"graph must have c-rank 3, got {r}")


def potential_lines(g: Graph) -> list:
    """Three-point sets meeting every star at most once (masks, sorted)."""
    require_sc3(g)
    out = []
    for t in combinations(range(g.n), 3):
        w = mask_of(t)
        if all(popcount(w & g.adj[v]) <= 1 for v in range(g.n)):
            out.append(w)
    return sorted(out)


def mat_g(g: Graph) -> set:
    """Sets of size <= 2 plus triples contained in no star (masks)."""
    require_sc3(g)
    fam = {0}
    fam.update(1 << v for v in range(g.n))
    fam.update(mask_of(p) for p in combinations(range(g.n), 2))
    for t in combinations(range(g.n), 3):
        w = mask_of(t)
        if g.star_of_set(w) == 0:
            fam.add(w)
    return fam


def exchange_property_holds(family: Iterable[int]) -> bool:
    """Matroid exchange on a set family given as masks."""
    fam = set(family)
    by_size: dict = {}
    for m in fam:
        by_size.setdefault(popcount(m), []).append(m)
    for k, bigger in by_size.items():
        smaller = by_size.get(k - 1, [])
        for i in bigger:
            for j in smaller:
                if not any(j | 1 << x in fam for x in bits(i & ~j)):
                    return False
    return True


def sc3_independents(g: Graph) -> set:
    """The c-independent sets of a sober connected rank-3 graph, as masks:
    everything of size <= 2, plus star-free triples that are not potential
    lines."""
    require_sc3(g)
    plines = set(potential_lines(g))
    return {m for m in mat_g(g) if popcount(m) < 3 or m not in plines}


# ----------------------------------------------------------- closed points

def closed_vertices(g: Graph) -> list:
    """Vertices v with St(St(v)) = {v}."""
    return [v for v in range(g.n) if g.star_of_set(g.adj[v]) == 1 << v]


def is_closed_graph(g: Graph) -> bool:
    return len(closed_vertices(g)) == g.n


# ------------------------------------------------- cubic lattice structure

def every_edge_in_square(g: Graph) -> bool:
    for u, v in g.edges():
        found = False
        for u2 in bits(g.adj[u] & ~(1 << v)):
            for v2 in bits(g.adj[v] & ~(1 << u)):
                if u2 != v2 and g.adj[u2] >> v2 & 1:
                    found = True
                    break
            if found:
                break
        if not found:
            return False
    return True


def cubic_lattice_theorems(g: Graph) -> dict:
    """Structure report for the flats lattice of a connected cubic graph.

    Checks that distributivity, modularity, semimodularity and geometricity
    coincide and hold exactly for K4 and K_{3,3}; that the Jordan-Dedekind
    condition matches both its edge-in-square and its prism/Moebius-ladder
    characterizations; and the atom structure of the lattice.
    """
    from .catalog import complete_bipartite, complete_graph, moebius_ladder, prism
    from .iso import graphs_isomorphic

    m = metrics(g)
    if not (m.is_connected and m.is_cubic):
        raise PreconditionError("requires a connected cubic graph")
    fl = flats(g)
    rank = lattice_height(fl)
    iso_k4 = graphs_isomorphic(g, complete_graph(4))
    iso_k33 = graphs_isomorphic(g, complete_bipartite(3, 3))
    flags = {
        "distributive": is_distributive(fl),
        "modular": is_modular(fl),
        "semimodular": is_semimodular(fl),
        "geometric": is_geometric(fl),
    }
    special = iso_k4 or iso_k33
    assert all(v == special for v in flags.values()), (flags, special)

    jd = is_jordan_dedekind(fl)
    jd_structural = rank <= 3 or (is_sober(g) and every_edge_in_square(g))
    k = g.n // 2
    jd_catalog = rank <= 3 or iso_k4 or \
        (k >= 3 and graphs_isomorphic(g, prism(k))) or \
        (k >= 4 and graphs_isomorphic(g, moebius_ladder(k)))
    assert jd == jd_structural == jd_catalog, (jd, jd_structural, jd_catalog)

    atom_masks = {fl.elements[a] for a in fl.atoms()}
    double_stars = {g.star_of_set(g.adj[v]) for v in range(g.n)}
    assert atom_masks == double_stars
    star_is_atom = any(g.adj[v] in atom_masks for v in range(g.n))
    assert star_is_atom == iso_k33

    return {
        "rank": rank,
        "lattice_size": len(fl),
        **flags,
        "special": "K4" if iso_k4 else ("K3,3" if iso_k33 else None),
        "jordan_dedekind": jd,
        "every_edge_in_square": every_edge_in_square(g),
        "sober": is_sober(g),
        "star_atom": star_is_atom,
    }


# -------------------------------------------------------- complement rank

def dual_star_lattice(g: Graph) -> SetLattice:
    """Union closure of the closed stars, with the empty set as bottom."""
    return union_closure([g.closed_star(v) for v in range(g.n)], 0, g.n)


def complement_c_rank_via_duality(g: Graph) -> int:
    """c-rank of the complement graph, computed inside g itself."""
    return lattice_height(dual_star_lattice(g))
