"""Lattices of vertex subsets ordered by inclusion.

A SetLattice stores its elements as bitmasks, sorted by (popcount, mask)
so iteration order is canonical.  Families built here are closed under
intersection (tag "meet", e.g. lattices of flats) or union (tag "join",
the dual lattice of closed stars); arbitrary inclusion-lattices (sublattice
components, test fixtures) use tag None with generic meet/join scans.
"""

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import PreconditionError, SizeLimitError
from .limits import LIMITS
from .graphs import Graph, bits, popcount


class SetLattice:
    def __init__(self, elements: Iterable[int], ground_n: int, tag: Optional[str]):
        els = sorted(set(elements), key=lambda m: (popcount(m), m))
        if not els:
            raise PreconditionError("a lattice needs at least one element")
        if len(els) > LIMITS.lattice_elements:
            raise SizeLimitError(
                f"{len(els)} lattice elements exceed limit {LIMITS.lattice_elements}")
        self.elements = tuple(els)
        self.ground_n = ground_n
        self.tag = tag
        self._index = {m: i for i, m in enumerate(els)}
        self._meet_cache: dict = {}
        self._join_cache: dict = {}
        self._covers_low: Optional[tuple] = None
        self._covers_up: Optional[tuple] = None
        top = els[-1]
        bot = els[0]
        if any(m & ~top for m in els) or any(bot & ~m for m in els):
            raise PreconditionError("family lacks a top or bottom element")
        self.top = len(els) - 1
        self.bottom = 0

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, mask: int) -> int:
        return self._index[mask]

    def __contains__(self, mask: int) -> bool:
        return mask in self._index

    def leq(self, i: int, j: int) -> bool:
        return self.elements[i] & ~self.elements[j] == 0

    # -------------------------------------------------------- meet / join

    def meet(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        key = (i, j)
        got = self._meet_cache.get(key)
        if got is None:
            got = self._meet_raw(i, j)
            self._meet_cache[key] = got
        return got

    def _meet_raw(self, i: int, j: int) -> int:
        cap = self.elements[i] & self.elements[j]
        if self.tag == "meet":
            return self._index[cap]
        best = None
        for k, m in enumerate(self.elements):
            if m & ~cap == 0:
                if best is None or self.elements[best] & ~m == 0:
                    best = k
        if best is None:
            raise PreconditionError("no common lower bound")
        bm = self.elements[best]
        for k, m in enumerate(self.elements):
            if m & ~cap == 0 and m & ~bm:
                raise PreconditionError("meet is not unique; not a lattice")
        return best

    def join(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        key = (i, j)
        got = self._join_cache.get(key)
        if got is None:
            got = self._join_raw(i, j)
            self._join_cache[key] = got
        return got

    def _join_raw(self, i: int, j: int) -> int:
        cup = self.elements[i] | self.elements[j]
        if self.tag == "join":
            return self._index[cup]
        best = None
        for k, m in enumerate(self.elements):
            if cup & ~m == 0:
                if best is None or m & ~self.elements[best] == 0:
                    best = k
        if best is None:
            raise PreconditionError("no common upper bound")
        bm = self.elements[best]
        for k, m in enumerate(self.elements):
            if cup & ~m == 0 and bm & ~m:
                raise PreconditionError("join is not unique; not a lattice")
        return best

    # -------------------------------------------------------- Hasse covers

    def _compute_covers(self) -> None:
        n = len(self.elements)
        low = [[] for _ in range(n)]
        up = [[] for _ in range(n)]
        for i, ei in enumerate(self.elements):
            chosen: list = []
            # candidates in decreasing popcount: maximal strict subsets
            for j in range(i - 1, -1, -1):
                ej = self.elements[j]
                if ej != ei and ej & ~ei == 0:
                    if not any(ej & ~self.elements[k] == 0 for k in chosen):
                        chosen.append(j)
            low[i] = sorted(chosen)
            for j in chosen:
                up[j].append(i)
        self._covers_low = tuple(tuple(x) for x in low)
        self._covers_up = tuple(tuple(sorted(x)) for x in up)

    @property
    def lower_covers(self) -> tuple:
        if self._covers_low is None:
            self._compute_covers()
        return self._covers_low

    @property
    def upper_covers(self) -> tuple:
        if self._covers_up is None:
            self._compute_covers()
        return self._covers_up

    def covers(self, i: int, j: int) -> bool:
        """True iff element i covers element j."""
        return j in self.lower_covers[i]

    def atoms(self) -> tuple:
        return self.upper_covers[self.bottom]


def intersection_closure(sets: Iterable[int], top: int, ground_n: int) -> SetLattice:
    """Worklist closure of `sets` under pairwise intersection, plus `top`."""
    family = {top}
    work = [s for s in set(sets)]
    while work:
        s = work.pop()
        if s in family:
            continue
        new = [s & t for t in family if s & t not in family and s & t != s]
        family.add(s)
        work.extend(new)
        if len(family) > LIMITS.lattice_elements:
            raise SizeLimitError(
                f"closure exceeds {LIMITS.lattice_elements} elements")
    return SetLattice(family, ground_n, "meet")


def union_closure(sets: Iterable[int], bottom: int, ground_n: int) -> SetLattice:
    family = {bottom}
    work = [s for s in set(sets)]
    while work:
        s = work.pop()
        if s in family:
            continue
        new = [s | t for t in family if s | t not in family and s | t != s]
        family.add(s)
        work.extend(new)
        if len(family) > LIMITS.lattice_elements:
            raise SizeLimitError(
                f"closure exceeds {LIMITS.lattice_elements} elements")
    return SetLattice(family, ground_n, "join")


# ------------------------------------------------------------------ chains

def lattice_height(l: SetLattice) -> int:
    """Longest path length in the Hasse diagram (bottom to top)."""
    low = l.lower_covers
    h = [0] * len(l)
    for i in range(len(l)):  # elements sorted by popcount: topological
        if low[i]:
            h[i] = 1 + max(h[j] for j in low[i])
    return h[l.top]


def element_heights(l: SetLattice) -> list:
    """Longest chain length from the bottom up to each element."""
    low = l.lower_covers
    h = [0] * len(l)
    for i in range(len(l)):
        if low[i]:
            h[i] = 1 + max(h[j] for j in low[i])
    return h


def maximal_chains(l: SetLattice):
    """Yield maximal chains as tuples of element indices, top first."""
    low = l.lower_covers
    count = 0
    stack = [(l.top, (l.top,))]
    while stack:
        node, chain = stack.pop()
        if not low[node]:
            count += 1
            if count > LIMITS.max_chains:
                raise SizeLimitError(
                    f"more than {LIMITS.max_chains} maximal chains")
            yield chain
            continue
        for child in low[node]:
            stack.append((child, chain + (child,)))


def is_jordan_dedekind(l: SetLattice) -> bool:
    """All maximal chains have the same length.

    Equivalent to: from every element, all maximal ascents to the top agree.
    """
    up = l.upper_covers
    up_min = [0] * len(l)
    up_max = [0] * len(l)
    for i in range(len(l) - 1, -1, -1):
        if up[i]:
            up_min[i] = 1 + min(up_min[j] for j in up[i])
            up_max[i] = 1 + max(up_max[j] for j in up[i])
    return all(a == b for a, b in zip(up_min, up_max))


# -------------------------------------------------------------- predicates

def is_distributive(l: SetLattice) -> bool:
    n = len(l)
    for p in range(n):
        for q in range(n):
            for r in range(q, n):
                if l.meet(p, l.join(q, r)) != l.join(l.meet(p, q), l.meet(p, r)):
                    return False
    return True


def _pentagon_triples(l: SetLattice):
    """Yield (b, c, d) spanning an N5: c < b, d incomparable to both,
    b meet d = c meet d and b join d = c join d."""
    n = len(l)
    for b in range(n):
        for c in range(n):
            if b == c or not l.leq(c, b):
                continue
            for d in range(n):
                if l.leq(d, b) or l.leq(b, d) or l.leq(d, c) or l.leq(c, d):
                    continue
                if l.meet(b, d) == l.meet(c, d) and l.join(b, d) == l.join(c, d):
                    yield b, c, d


def is_modular(l: SetLattice) -> bool:
    """No N5 sublattice."""
    for _ in _pentagon_triples(l):
        return False
    return True


def is_semimodular(l: SetLattice) -> bool:
    """No N5 sublattice whose short-side element covers the pentagon bottom."""
    for b, c, d in _pentagon_triples(l):
        if l.covers(d, l.meet(b, d)):
            return False
    return True


def modular_law_holds(l: SetLattice) -> bool:
    """Cross-check: a <= c implies a join (b meet c) = (a join b) meet c."""
    n = len(l)
    for a in range(n):
        for c in range(n):
            if not l.leq(a, c):
                continue
            for b in range(n):
                if l.join(a, l.meet(b, c)) != l.meet(l.join(a, b), c):
                    return False
    return True


def semimodular_cover_law_holds(l: SetLattice) -> bool:
    """Cross-check: if a and b both cover a meet b, a join b covers both."""
    n = len(l)
    for a in range(n):
        for b in range(a + 1, n):
            m = l.meet(a, b)
            if l.covers(a, m) and l.covers(b, m):
                j = l.join(a, b)
                if not (l.covers(j, a) and l.covers(j, b)):
                    return False
    return True


def is_atomistic(l: SetLattice) -> bool:
    atoms = l.atoms()
    for x in range(len(l)):
        j = l.bottom
        for a in atoms:
            if l.leq(a, x):
                j = l.join(j, a)
        if j != x:
            return False
    return True


def is_geometric(l: SetLattice) -> bool:
    return is_semimodular(l) and is_atomistic(l)


# ------------------------------------------------------------- coproducts

def coproduct_decompose(l: SetLattice) -> list:
    """Maximal decomposition L = L1 + L2 + ... identifying tops and bottoms.

    Middle elements p, q belong to the same summand when p meet q is not
    the bottom or p join q is not the top; summands are the connected
    components of that relation, each returned with top and bottom attached.
    """
    middle = [i for i in range(len(l)) if i not in (l.top, l.bottom)]
    if not middle:
        return [SetLattice(l.elements, l.ground_n, None)]
    parent = {i: i for i in middle}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for idx, p in enumerate(middle):
        for q in middle[idx + 1:]:
            if l.meet(p, q) != l.bottom or l.join(p, q) != l.top:
                parent[find(p)] = find(q)
    groups: dict = {}
    for p in middle:
        groups.setdefault(find(p), []).append(p)
    out = []
    for members in groups.values():
        els = {l.elements[l.top], l.elements[l.bottom]}
        els.update(l.elements[p] for p in members)
        out.append(SetLattice(els, l.ground_n, None))
    out.sort(key=lambda comp: (len(comp), comp.elements))
    return out


# ------------------------------------------------------------ isomorphism

def _refine_colors(l: SetLattice) -> list:
    low, up = l.lower_covers, l.upper_covers
    heights = element_heights(l)
    colors = [(heights[i], len(low[i]), len(up[i])) for i in range(len(l))]
    for _ in range(len(l)):
        fresh = [
            (colors[i],
             tuple(sorted(colors[j] for j in low[i])),
             tuple(sorted(colors[j] for j in up[i])))
            for i in range(len(l))
        ]
        ranks = {c: r for r, c in enumerate(sorted(set(fresh)))}
        new = [ranks[c] for c in fresh]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new
    return colors


def lattice_isomorphic(l1: SetLattice, l2: SetLattice):
    """Order isomorphism test; returns (flag, mapping or None).

    mapping[i] = index in l2 of the image of element i of l1.
    """
    if max(len(l1), len(l2)) > LIMITS.lattice_iso_elements:
        raise SizeLimitError(
            f"lattice isomorphism limited to {LIMITS.lattice_iso_elements} elements")
    if len(l1) != len(l2):
        return False, None
    c1, c2 = _refine_colors(l1), _refine_colors(l2)
    if sorted(c1) != sorted(c2):
        return False, None
    n = len(l1)
    order = sorted(range(n), key=lambda i: (c1.count(c1[i]), i))
    mapping = [-1] * n
    used = [False] * n

    def match(pos: int) -> bool:
        if pos == n:
            return True
        i = order[pos]
        for j in range(n):
            if used[j] or c2[j] != c1[i]:
                continue
            ok = True
            for k in order[:pos]:
                jk = mapping[k]
                if l1.leq(i, k) != l2.leq(j, jk) or l1.leq(k, i) != l2.leq(jk, j):
                    ok = False
                    break
            if ok:
                mapping[i] = j
                used[j] = True
                if match(pos + 1):
                    return True
                mapping[i] = -1
                used[j] = False
        return False

    if match(0):
        return True, tuple(mapping)
    return False, None


# ---------------------------------------------------------------- exports

def restricted_hasse_graph(l: SetLattice) -> Graph:
    """The cover relation as an undirected graph on the middle elements."""
    middle = [i for i in range(len(l)) if i not in (l.top, l.bottom)]
    pos = {i: k for k, i in enumerate(middle)}
    edges = []
    for i in middle:
        for j in l.lower_covers[i]:
            if j in pos:
                edges.append((pos[j], pos[i]))
    labels = [_set_label(l.elements[i]) for i in middle]
    return Graph.from_edges(len(middle), edges, labels=labels)


def _set_label(mask: int) -> str:
    return "{" + ",".join(str(v) for v in bits(mask)) + "}"


def lattice_to_json(l: SetLattice) -> dict:
    return {
        "elements": [sorted(bits(m)) for m in l.elements],
        "covers": [[j, i] for i in range(len(l)) for j in l.lower_covers[i]],
        "height": lattice_height(l),
    }


def lattice_to_dot(l: SetLattice) -> str:
    lines = ["digraph {", "  rankdir=BT;"]
    for i, m in enumerate(l.elements):
        lines.append(f'  {i} [label="{_set_label(m)}"];')
    for i in range(len(l)):
        for j in l.lower_covers[i]:
            lines.append(f"  {j} -> {i};")
    lines.append("}")
    return "\n".join(lines) + "\n"
