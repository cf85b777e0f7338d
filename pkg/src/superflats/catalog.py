"""Named graphs, worked examples, and exhaustive small-graph generators."""

import re
from itertools import combinations
from typing import Iterable, List

from .errors import ParseError, PreconditionError
from .graphs import Graph, is_connected, mask_of

# ---------------------------------------------------------------- families


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise PreconditionError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def prism(k: int) -> Graph:
    """Two k-cycles joined by a perfect matching of rungs."""
    if k < 3:
        raise PreconditionError("prism needs cycles of length >= 3")
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, k + (i + 1) % k) for i in range(k)]
    edges += [(i, k + i) for i in range(k)]
    return Graph.from_edges(2 * k, edges)


def moebius_ladder(k: int) -> Graph:
    """A 2k-cycle with all k main diagonals."""
    if k < 3:
        raise PreconditionError("Moebius ladder needs k >= 3")
    n = 2 * k
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, i + k) for i in range(k)]
    return Graph.from_edges(n, edges)


def lcf(shifts: Iterable[int], repeats: int) -> Graph:
    """Hamiltonian cubic graph from its LCF notation."""
    shifts = list(shifts)
    n = len(shifts) * repeats
    edges = {(i, (i + 1) % n) for i in range(n)}
    for i in range(n):
        j = (i + shifts[i % len(shifts)]) % n
        edges.add((min(i, j), max(i, j)))
    return Graph.from_edges(n, edges)


def petersen() -> Graph:
    """Kneser graph on the 2-subsets of a 5-set (disjointness adjacency)."""
    pairs = list(combinations(range(5), 2))
    edges = [(i, j) for i, j in combinations(range(10), 2)
             if not set(pairs[i]) & set(pairs[j])]
    return Graph.from_edges(10, edges,
                            labels=["".join(map(str, p)) for p in pairs])


def heawood() -> Graph:
    return lcf([5, -5], 7)


def mcgee() -> Graph:
    return lcf([12, 7, -7], 8)


def tutte_coxeter() -> Graph:
    return lcf([-13, -9, 7, -7, 9, 13], 5)


def desargues_graph() -> Graph:
    return lcf([5, -5, 9, -9], 5)


# ------------------------------------------------------------ fixed graphs

def _from_one_based(n: int, edges) -> Graph:
    return Graph.from_edges(n, [(u - 1, v - 1) for u, v in edges])


def coimbra() -> Graph:
    """Seven-vertex running example with a 3-chain flats lattice."""
    return _from_one_based(7, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 6),
                               (3, 5), (4, 7), (5, 7), (6, 7)])


def sober_example() -> Graph:
    """Six-vertex sober graph whose flats lattice has 12 elements."""
    return _from_one_based(6, [(1, 2), (1, 5), (2, 3), (2, 4), (2, 6),
                               (3, 5), (3, 6), (4, 6), (5, 6)])


def sixteen_vertex() -> Graph:
    """Cubic vertex-transitive graph with maximal flats chains of two lengths."""
    return _from_one_based(16, [
        (1, 2), (1, 3), (1, 7), (2, 6), (2, 8), (3, 4), (3, 11), (4, 5),
        (4, 7), (5, 6), (5, 8), (6, 14), (7, 9), (8, 10), (9, 12), (9, 15),
        (10, 13), (10, 16), (11, 12), (11, 15), (12, 13), (13, 14), (14, 16),
        (15, 16)])


def crank3girth3() -> Graph:
    """Cubic graph of c-rank 3 containing a triangle."""
    e = ["ab", "ae", "ai", "bc", "bd", "ch", "cj", "df", "dg", "ef",
         "ei", "fg", "gh", "hj", "ij"]
    return Graph.from_edges(
        10, [(ord(u) - 97, ord(v) - 97) for u, v in e],
        labels=[chr(97 + i) for i in range(10)])


def crank3girth4() -> Graph:
    """Non-sober cubic graph of c-rank 3 and girth 4 on 18 vertices."""
    edges = []
    for t in range(3):          # three top vertices
        for s in range(3):
            edges.append((t, 3 + 3 * s + t))
    for s in range(3):          # nine middle vertices over six bottom ones
        for d in range(3):
            mid = 3 + 3 * s + d
            edges.append((mid, 12 + 2 * s))
            edges.append((mid, 12 + 2 * s + 1))
    return Graph.from_edges(18, edges)


def crank4girth4() -> Graph:
    """Cubic graph of c-rank 4 and girth 4 on 8 vertices."""
    e = ["ab", "ac", "ag", "bd", "bh", "cd", "ce", "df", "ef", "eg",
         "fh", "gh"]
    return Graph.from_edges(8, [(ord(u) - 97, ord(v) - 97) for u, v in e],
                            labels=[chr(97 + i) for i in range(8)])


def g3() -> Graph:
    """Sober rank-3 graph with diameter 3 and potential lines.

    The triple {A, E, L} is a potential line.  Degrees are 3 and 4, not
    uniform.
    """
    e = ["AC", "AD", "AI", "BF", "BD", "BE", "CN", "CG", "DJ", "DK", "EH",
         "EO", "FG", "FL", "GH", "GK", "HJ", "HI", "IM", "JL", "JN", "KO",
         "KM", "LM", "NO"]
    return Graph.from_edges(15, [(ord(u) - 65, ord(v) - 65) for u, v in e],
                            labels=[chr(65 + i) for i in range(15)])


def g5() -> Graph:
    """Sober rank-3 graph with diameter 5 and no potential lines."""
    # path x1..x6 (0..5) plus apexes over consecutive pairs
    edges = [(i, i + 1) for i in range(5)]
    edges += [(6, 0), (6, 1), (7, 1), (7, 2), (8, 3), (8, 4), (9, 4), (9, 5)]
    return Graph.from_edges(10, edges)


# ---------------------------------------------------------------- lookup

_FIXED = {
    "petersen": petersen,
    "heawood": heawood,
    "mcgee": mcgee,
    "tutte-coxeter": tutte_coxeter,
    "desargues-graph": desargues_graph,
    "coimbra": coimbra,
    "sober-example": sober_example,
    "16-vertex": sixteen_vertex,
    "crank3girth3": crank3girth3,
    "crank3girth4": crank3girth4,
    "crank4girth4": crank4girth4,
    "g3": g3,
    "g5": g5,
}

_PARAM = (
    (re.compile(r"k(\d+),(\d+)$"), lambda a, b: complete_bipartite(a, b)),
    (re.compile(r"k(\d+)$"), lambda a: complete_graph(a)),
    (re.compile(r"c(\d+)$"), lambda a: cycle(a)),
    (re.compile(r"p(\d+)$"), lambda a: path(a)),
    (re.compile(r"h(\d+)$"), lambda a: prism(a)),
    (re.compile(r"tilde-h(\d+)$"), lambda a: moebius_ladder(a)),
)


def catalog_names() -> list:
    return sorted(_FIXED) + ["k<n>", "k<m>,<n>", "c<n>", "p<n>", "h<n>",
                             "tilde-h<n>"]


def lookup(name: str) -> Graph:
    key = name.strip().lower().replace("_", "-")
    if key in _FIXED:
        return _FIXED[key]()
    for pat, make in _PARAM:
        m = pat.match(key)
        if m:
            return make(*(int(x) for x in m.groups()))
    raise ParseError(f"unknown catalog graph {name!r}")


# -------------------------------------------------------------- generators

def all_graphs(n: int):
    """All labeled graphs on n vertices, by edge-subset enumeration."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(
            n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def nonisomorphic(graphs: Iterable[Graph]) -> List[Graph]:
    from .iso import canonical_form
    seen = {}
    for g in graphs:
        key = (g.n, canonical_form(g))
        if key not in seen:
            seen[key] = g
    return [seen[k] for k in sorted(seen)]


def nonisomorphic_graphs(n: int) -> List[Graph]:
    """All graphs on n vertices up to isomorphism, by vertex augmentation.

    Every n-vertex graph restricts to an (n-1)-vertex graph, so extending
    each (n-1)-vertex representative by one vertex with every possible
    neighborhood reaches every isomorphism class.
    """
    from .iso import canonical_form
    if n == 0:
        return [Graph.from_edges(0, [])]
    reps = [Graph.from_edges(1, [])]
    for k in range(2, n + 1):
        seen = {}
        for g in reps:
            for nb in range(1 << (k - 1)):
                rows = [g.adj[v] | ((nb >> v & 1) << (k - 1))
                        for v in range(k - 1)] + [nb]
                h = Graph(k, tuple(rows))
                key = canonical_form(h)
                if key not in seen:
                    seen[key] = h
        reps = list(seen.values())
    return reps


def connected_graphs(n: int) -> List[Graph]:
    """Connected graphs on n vertices, up to isomorphism."""
    return [g for g in nonisomorphic_graphs(n) if is_connected(g)]


def _two_factors(n: int):
    """One labeled representative per cycle type covering n vertices."""
    def parts(rest, minimum):
        if rest == 0:
            yield ()
        for p in range(minimum, rest + 1):
            if rest - p == 0 or rest - p >= 3:
                for tail in parts(rest - p, p):
                    yield (p,) + tail

    for shape in parts(n, 3):
        edges = []
        base = 0
        for length in shape:
            edges += [(base + i, base + (i + 1) % length) for i in range(length)]
            base += length
        yield Graph.from_edges(n, edges)


def _perfect_matchings(n: int, allowed):
    """All perfect matchings using only allowed(u, v) pairs."""
    def rec(unmatched: int, acc: list):
        if not unmatched:
            yield list(acc)
            return
        u = (unmatched & -unmatched).bit_length() - 1
        rest = unmatched & ~(1 << u)
        m = rest
        while m:
            bit = m & -m
            m ^= bit
            v = bit.bit_length() - 1
            if allowed(u, v):
                acc.append((u, v))
                yield from rec(rest & ~bit, acc)
                acc.pop()

    yield from rec((1 << n) - 1, [])


def validate_catalog() -> None:
    """Check the figure-transcribed graphs against their documented
    consequences so a mistranscription fails fast."""
    from .flats import c_rank, flats, potential_lines
    from .graphs import is_sober, metrics
    from .lattice import maximal_chains

    def expect(cond, what):
        if not cond:
            raise AssertionError(f"catalog validation failed: {what}")

    g = coimbra()
    fl = flats(g)
    printed = [(), (3,), (4,), (5,), (1,), (2,), (0,), (6,),
               (0, 6), (1, 6), (2, 6), (1, 2, 3), (0, 1, 4), (0, 2, 5),
               (3, 4, 5), (0, 1, 2, 3, 4, 5, 6)]
    expect(set(fl.elements) == {mask_of(t) for t in printed},
           "coimbra flats lattice")
    expect(potential_lines(g) == [], "coimbra potential lines")

    h = heawood()
    m = metrics(h)
    expect(m.girth == 6 and m.diameter == 3 and m.is_cubic,
           "heawood metrics")
    expect(c_rank(h) == 3 and potential_lines(h) == [], "heawood rank 3")

    g16 = sixteen_vertex()
    m = metrics(g16)
    expect(m.is_cubic and m.is_connected and is_sober(g16), "16-vertex shape")
    expect(c_rank(g16) == 4, "16-vertex rank")
    lengths = {len(c) - 1 for c in maximal_chains(flats(g16))}
    expect(lengths == {3, 4}, "16-vertex chain lengths")

    for name, gr in (("crank3girth3", crank3girth3()),
                     ("crank3girth4", crank3girth4()),
                     ("crank4girth4", crank4girth4())):
        m = metrics(gr)
        rank = int(name[5])
        expect(m.is_cubic and m.is_connected, f"{name} cubic connected")
        expect(m.girth == int(name[-1]), f"{name} girth")
        expect(c_rank(gr) == rank, f"{name} rank")
    expect(not is_sober(crank3girth4()), "crank3girth4 soberness")

    for name, gr, diam, has_lines in (("g3", g3(), 3, True),
                                      ("g5", g5(), 5, False)):
        m = metrics(gr)
        expect(m.diameter == diam and is_sober(gr) and m.is_connected,
               f"{name} metrics")
        expect(c_rank(gr) == 3, f"{name} rank")
        expect(bool(potential_lines(gr)) == has_lines, f"{name} lines")
    expect(mask_of([0, 4, 11]) in potential_lines(g3()),
           "g3 marked potential line")

    s = sober_example()
    expect(is_sober(s) and len(flats(s)) == 12, "sober example lattice")


def cubic_connected_graphs(n: int) -> List[Graph]:
    """Connected cubic graphs on n vertices, up to isomorphism.

    Every cubic graph this small decomposes as a 2-factor plus a perfect
    matching, so the sweep over representative 2-factors is exhaustive.
    """
    if n % 2 or n < 4:
        return []
    out = []
    for base in _two_factors(n):
        for matching in _perfect_matchings(
                n, lambda u, v: not base.has_edge(u, v)):
            g = Graph.from_edges(n, base.edges() + matching)
            if is_connected(g):
                out.append(g)
    return nonisomorphic(out)
