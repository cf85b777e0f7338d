"""Rank analysis of complement graphs.

The c-rank of the complement can be read off the original graph as the
height of the union closure of its closed stars, and is bounded below by
n divided by the chromatic number and above (jointly with the rank of
the graph itself) by sqrt(2)n + 1.
"""

from itertools import combinations

from .flats import c_rank, complement_c_rank_via_duality, is_c_independent
from .graphs import Graph, bits, complement, exact_chromatic, mask_of


def complement_rank_both_ways(g: Graph) -> int:
    """c-rank of the complement, cross-checked against the closed-star
    duality computed inside g itself."""
    direct = c_rank(complement(g))
    dual = complement_c_rank_via_duality(g)
    assert direct == dual, (direct, dual)
    return direct


def sqrt2_bound_holds(rank_sum: int, n: int) -> bool:
    """Exact integer check of S < sqrt(2) n + 1."""
    if rank_sum < 1:
        return True
    return (rank_sum - 1) ** 2 < 2 * n * n


def rank_sum_report(g: Graph) -> dict:
    rank = c_rank(g)
    co_rank = complement_rank_both_ways(g)
    s = rank + co_rank
    chrom = exact_chromatic(g)
    report = {
        "n": g.n,
        "c_rank": rank,
        "complement_c_rank": co_rank,
        "rank_sum": s,
        "sqrt2_bound_holds": sqrt2_bound_holds(s, g.n),
        "chromatic_number": chrom,
        "chromatic_bound_holds": chrom == 0 or co_rank * chrom >= g.n,
    }
    assert report["sqrt2_bound_holds"]
    assert report["chromatic_bound_holds"]
    return report


def is_classical_independent(g: Graph, vertices) -> bool:
    """No edge joins two of the given vertices."""
    w = vertices if isinstance(vertices, int) else mask_of(vertices)
    return all(g.adj[v] & w == 0 for v in bits(w))


def classical_implies_complement_independent(g: Graph) -> bool:
    """Every classically independent set of g is c-independent in the
    complement (checked exhaustively over subsets)."""
    gbar = complement(g)
    for k in range(g.n + 1):
        for sub in combinations(range(g.n), k):
            w = mask_of(sub)
            if is_classical_independent(g, w) and \
                    not is_c_independent(gbar, w)[0]:
                return False
    return True


def converse_counterexample(max_n: int = 4):
    """A pair (g, W) with W c-independent in the complement of g but not
    classically independent in g, or None if none exists up to max_n."""
    from .catalog import all_graphs
    for n in range(1, max_n + 1):
        for g in all_graphs(n):
            gbar = complement(g)
            for k in range(2, n + 1):
                for sub in combinations(range(n), k):
                    w = mask_of(sub)
                    if is_c_independent(gbar, w)[0] and \
                            not is_classical_independent(g, w):
                        return g, w
    return None
