"""Partial euclidean geometries (PEGs), Levi graphs, and their lattices.

A PEG is a point set with a family of lines satisfying: every point is
on a line (G1), two lines share at most one point (G2), and every line
has at least two points (G3).  Rank-3 sober connected graphs induce PEGs
through their flats; conversely the Levi graph of a sober connected PEG
is again such a graph, and its flats lattice splits as a coproduct of
the line lattices of the geometry and its dual.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import AxiomError, ParseError, PreconditionError
from .flats import flats, require_sc3
from .graphs import Graph, bits, is_connected, mask_of, popcount
from .iso import find_isomorphism
from .lattice import (SetLattice, coproduct_decompose, intersection_closure,
                      is_jordan_dedekind, lattice_isomorphic)


@dataclass(frozen=True)
class PEG:
    n_points: int
    lines: tuple  # point masks, sorted
    point_labels: tuple | None = None

    def pencil(self, p: int) -> int:
        """Mask over line indices of the lines through p."""
        return mask_of(i for i, line in enumerate(self.lines)
                       if line >> p & 1)

    def point_label(self, p: int) -> str:
        return self.point_labels[p] if self.point_labels else str(p)


def validate_peg(n_points: int, lines, point_labels=None) -> PEG:
    """Check axioms G1-G3 and build the PEG; violations carry a witness."""
    masks = sorted({m if isinstance(m, int) else mask_of(m) for m in lines})
    if n_points < 1 or not masks:
        raise AxiomError("G1", None, "a PEG needs points and lines")
    full = (1 << n_points) - 1
    cover = 0
    for m in masks:
        if m & ~full:
            raise ParseError("line contains an out-of-range point")
        if popcount(m) < 2:
            raise AxiomError("G3", m, "every line needs at least 2 points")
        cover |= m
    if cover != full:
        missing = next(bits(full & ~cover))
        raise AxiomError("G1", missing, f"point {missing} lies on no line")
    for a, b in combinations(masks, 2):
        if popcount(a & b) > 1:
            raise AxiomError("G2", (a, b), "two lines share 2 or more points")
    if point_labels is not None:
        point_labels = tuple(str(x) for x in point_labels)
        if len(point_labels) != n_points:
            raise ParseError("label count != point count")
    return PEG(n_points, tuple(masks), point_labels)


def geo(g: Graph) -> PEG:
    """The geometry of a rank-3 sober connected graph: proper flats of
    size at least two, as lines on the vertex set."""
    require_sc3(g)
    fl = flats(g)
    lines = [m for m in fl.elements
             if popcount(m) >= 2 and m != g.vertex_mask]
    return validate_peg(g.n, lines,
                        point_labels=[g.label(v) for v in range(g.n)])


@dataclass(frozen=True)
class ConfigurationSignature:
    points: int
    lines: int
    point_degree: int
    line_size: int


def configuration_signature(p: PEG) -> Optional[ConfigurationSignature]:
    """(m_c, n_d) data when point degrees and line sizes are uniform."""
    degs = {popcount(p.pencil(q)) for q in range(p.n_points)}
    sizes = {popcount(line) for line in p.lines}
    if len(degs) != 1 or len(sizes) != 1:
        return None
    c, d = degs.pop(), sizes.pop()
    sig = ConfigurationSignature(p.n_points, len(p.lines), c, d)
    assert sig.point_degree * sig.points == sig.line_size * sig.lines
    return sig


def peg_mindeg(p: PEG) -> int:
    pencil_sizes = [popcount(p.pencil(q)) for q in range(p.n_points)]
    line_sizes = [popcount(line) for line in p.lines]
    return min(pencil_sizes + line_sizes)


def levi(p: PEG) -> Graph:
    """Bipartite incidence graph: points 0..m-1, then one vertex per line."""
    m = p.n_points
    edges = [(q, m + i) for i, line in enumerate(p.lines) for q in bits(line)]
    labels = [p.point_label(q) for q in range(m)]
    labels += ["{" + ",".join(p.point_label(q) for q in bits(line)) + "}"
               for line in p.lines]
    return Graph.from_edges(m + len(p.lines), edges, labels=labels)


def peg_connected(p: PEG) -> bool:
    """No splitting of the lines into parts covering disjoint point sets."""
    parent = list(range(len(p.lines)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, a in enumerate(p.lines):
        for j in range(i + 1, len(p.lines)):
            if a & p.lines[j]:
                parent[find(i)] = find(j)
    return len({find(i) for i in range(len(p.lines))}) == 1


def peg_is_sober(p: PEG) -> bool:
    """Distinct points have distinct pencils."""
    return len({p.pencil(q) for q in range(p.n_points)}) == p.n_points


def dual_peg(p: PEG) -> PEG:
    """Lines become points, pencils become lines; needs min degree 2."""
    if peg_mindeg(p) < 2:
        raise PreconditionError("dual requires every point on >= 2 lines")
    pencils = [p.pencil(q) for q in range(p.n_points)]
    return validate_peg(len(p.lines), pencils)


def lat_peg(p: PEG) -> SetLattice:
    """Intersection closure of the lines inside the point set."""
    return intersection_closure(p.lines, (1 << p.n_points) - 1, p.n_points)


def graph_as_peg(g: Graph) -> PEG:
    """A graph is a PEG whose lines are its edges."""
    return validate_peg(g.n, [mask_of(e) for e in g.edges()],
                        point_labels=[g.label(v) for v in range(g.n)])


def peg_isomorphic(p: PEG, q: PEG) -> bool:
    """Point-line incidence isomorphism (points map to points)."""
    if p.n_points != q.n_points or len(p.lines) != len(q.lines):
        return False
    lp, lq = levi(p), levi(q)
    colors_p = [0] * p.n_points + [1] * len(p.lines)
    colors_q = [0] * q.n_points + [1] * len(q.lines)
    return find_isomorphism(lp, lq, colors_p, colors_q) is not None


# ------------------------------------------------- flats of the Levi graph

def flats_of_levi_structure(p: PEG) -> dict:
    """Verified structure of Fl(Levi): the full set and the empty set, all
    singletons, the lines (as point sets), and the pencils (as line sets);
    Jordan-Dedekind holds, every vertex is closed, and the lattice is the
    coproduct of the line lattices of the geometry and its dual."""
    if not peg_connected(p):
        raise PreconditionError("requires a connected geometry")
    if peg_mindeg(p) < 2:
        raise PreconditionError("requires min degree >= 2")
    lg = levi(p)
    fl = flats(lg)
    m = p.n_points
    expected = {0, lg.vertex_mask}
    expected.update(1 << x for x in range(lg.n))
    expected.update(p.lines)
    expected.update(p.pencil(q) << m for q in range(m))
    assert set(fl.elements) == expected
    assert is_jordan_dedekind(fl)

    from .flats import is_closed_graph
    assert is_closed_graph(lg)

    parts = coproduct_decompose(fl)
    assert len(parts) == 2
    lat = lat_peg(p)
    lat_dual = lat_peg(dual_peg(p))
    pairings = [(lattice_isomorphic(parts[0], lat)[0] and
                 lattice_isomorphic(parts[1], lat_dual)[0]),
                (lattice_isomorphic(parts[0], lat_dual)[0] and
                 lattice_isomorphic(parts[1], lat)[0])]
    assert any(pairings)
    return {
        "levi_vertices": lg.n,
        "levi_edges": lg.edge_count(),
        "flats": len(fl),
        "jordan_dedekind": True,
        "closed": True,
        "coproduct_parts": [len(parts[0]), len(parts[1])],
    }


def levi_independents(p: PEG) -> set:
    """The c-independent subsets of the Levi graph, from the geometry alone:
    all sets of size at most two, plus triples meeting some line in exactly
    two points or some pencil in exactly two lines (masks over Levi
    vertices, points first)."""
    if not (peg_is_sober(p) and peg_connected(p) and peg_mindeg(p) >= 2):
        raise PreconditionError(
            "requires a sober connected geometry of min degree >= 2")
    m = p.n_points
    nl = len(p.lines)
    total = m + nl
    fam = {0}
    fam.update(1 << x for x in range(total))
    fam.update(mask_of(pair) for pair in combinations(range(total), 2))
    pencils = [p.pencil(q) << m for q in range(m)]
    for triple in combinations(range(total), 3):
        w = mask_of(triple)
        if any(popcount(w & line) == 2 for line in p.lines) or \
           any(popcount(w & pc) == 2 for pc in pencils):
            fam.add(w)
    return fam


# ----------------------------------------------------------------- fixtures

def fano() -> PEG:
    return validate_peg(7, [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5),
                            (1, 4, 6), (2, 3, 6), (2, 4, 5)])


def desargues_configuration() -> PEG:
    """Points are the 2-subsets of a 5-set, lines the 3-subsets."""
    pairs = list(combinations(range(5), 2))
    index = {pq: i for i, pq in enumerate(pairs)}
    lines = [[index[pq] for pq in combinations(t, 2)]
             for t in combinations(range(5), 3)]
    return validate_peg(10, lines,
                        point_labels=["".join(map(str, pq)) for pq in pairs])


# ------------------------------------------------------------- text format

def parse_peg(text: str) -> PEG:
    """Format: `points n`, then one line of space-separated point indices
    per geometry line."""
    rows = [r.strip() for r in text.strip().splitlines() if r.strip()]
    if not rows or not rows[0].startswith("points"):
        raise ParseError("expected a `points <n>` header")
    try:
        n = int(rows[0].split()[1])
    except (IndexError, ValueError):
        raise ParseError("bad `points <n>` header") from None
    lines = []
    for row in rows[1:]:
        try:
            lines.append(tuple(int(t) for t in row.split()))
        except ValueError:
            raise ParseError(f"non-integer point in line {row!r}") from None
    return validate_peg(n, lines)


def emit_peg(p: PEG) -> str:
    rows = [f"points {p.n_points}"]
    rows += [" ".join(str(q) for q in bits(line)) for line in p.lines]
    return "\n".join(rows) + "\n"
