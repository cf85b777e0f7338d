"""Command-line interface.

All commands print versioned JSON ("schema": 1) to standard output with
sorted keys; DOT output goes to the file named by --dot.  Exit codes:
0 success, 1 verification failure, 2 parse error, 3 size limit,
4 precondition violation, 5 geometry axiom violation, 6 shape error.
"""

import argparse
import json
import os
import random
import sys

from . import catalog
from .complement import rank_sum_report
from .errors import (AxiomError, ParseError, PreconditionError, ShapeError,
                     SizeLimitError)
from .flats import (all_c_independent_sets, c_rank, c_rank_recursive,
                    c_rank_transversal, cubic_lattice_theorems, flats,
                    is_c_independent)
from .geometry import (configuration_signature, geo, graph_as_peg, levi,
                       parse_peg)
from .graphs import (Graph, bits, complemented_adjacency, emit_edge_list,
                     emit_graph6, is_sober, metrics, parse_edge_list,
                     parse_graph6, to_dot)
from .lattice import lattice_to_dot, lattice_to_json, maximal_chains
from .minors import cm_rank_report, forbidden_family
from .sb import sb_rank

EXIT_CODES = {
    ParseError: 2,
    SizeLimitError: 3,
    PreconditionError: 4,
    AxiomError: 5,
    ShapeError: 6,
}


def _load_graph(spec: str, fmt: str) -> Graph:
    if os.path.exists(spec):
        with open(spec) as fh:
            text = fh.read()
        return parse_graph6(text) if fmt == "graph6" else parse_edge_list(text)
    try:
        return catalog.lookup(spec)
    except ParseError:
        pass
    if fmt == "graph6" or all(63 <= ord(c) <= 126 for c in spec.strip()):
        try:
            return parse_graph6(spec)
        except ParseError:
            pass
    raise ParseError(f"cannot interpret {spec!r} as a file, catalog name, "
                     "or graph6 string")


def _emit(payload: dict, dot: str | None = None, dot_text: str | None = None):
    payload = {"schema": 1, **payload}
    print(json.dumps(payload, sort_keys=True, default=_jsonable))
    if dot and dot_text:
        with open(dot, "w") as fh:
            fh.write(dot_text)


def _jsonable(x):
    if isinstance(x, float):
        return None
    raise TypeError(f"not JSON-serializable: {x!r}")


def _graph_json(g: Graph) -> dict:
    return {
        "n": g.n,
        "edges": sorted(g.edges()),
        "labels": [g.label(v) for v in range(g.n)],
        "graph6": emit_graph6(g),
    }


def _metric_json(g: Graph) -> dict:
    m = metrics(g)
    return {
        "girth": None if m.girth == float("inf") else m.girth,
        "diameter": None if m.diameter == float("inf") else m.diameter,
        "mindeg": m.mindeg,
        "maxdeg": m.maxdeg,
        "connected": m.is_connected,
        "bipartite": m.is_bipartite,
        "cubic": m.is_cubic,
        "sober": is_sober(g),
    }


# ---------------------------------------------------------------- commands

def cmd_analyze(args) -> int:
    g = _load_graph(args.graph, args.format)
    fl = flats(g)
    _emit({"graph": _graph_json(g), "metrics": _metric_json(g),
           "c_rank": c_rank(g), "flats": len(fl)},
          args.dot, to_dot(g))
    return 0


def cmd_flats(args) -> int:
    g = _load_graph(args.graph, args.format)
    fl = flats(g)
    _emit({"lattice": lattice_to_json(fl)}, args.dot, lattice_to_dot(fl))
    return 0


def cmd_crank(args) -> int:
    g = _load_graph(args.graph, args.format)
    _emit({"c_rank": c_rank(g)})
    return 0


def cmd_independents(args) -> int:
    g = _load_graph(args.graph, args.format)
    fam = all_c_independent_sets(g)
    if args.count:
        _emit({"count": len(fam)})
    else:
        _emit({"independent_sets": sorted(sorted(bits(m)) for m in fam)})
    return 0


def cmd_geo(args) -> int:
    g = _load_graph(args.graph, args.format)
    p = geo(g)
    sig = configuration_signature(p)
    _emit({
        "points": p.n_points,
        "lines": [sorted(bits(line)) for line in p.lines],
        "configuration": None if sig is None else
            {"points": sig.points, "lines": sig.lines,
             "point_degree": sig.point_degree, "line_size": sig.line_size},
    })
    return 0


def cmd_levi(args) -> int:
    if os.path.exists(args.graph) and args.format == "peg":
        with open(args.graph) as fh:
            p = parse_peg(fh.read())
    else:
        p = graph_as_peg(_load_graph(args.graph, args.format))
    lg = levi(p)
    _emit({"levi": _graph_json(lg)}, args.dot, to_dot(lg))
    return 0


def cmd_cmrank(args) -> int:
    g = _load_graph(args.graph, args.format)
    _emit(cm_rank_report(g))
    return 0


def cmd_complement(args) -> int:
    g = _load_graph(args.graph, args.format)
    _emit(rank_sum_report(g))
    return 0


def cmd_forbidden(args) -> int:
    fam = forbidden_family(args.m)
    _emit({"m": args.m, "family": [_graph_json(f) for f in fam]})
    return 0


# --------------------------------------------------------- verify-theorems

def _check_catalog(max_n, rng):
    catalog.validate_catalog()
    return {"fixtures": "validated"}


def _check_rank_agreement(max_n, rng):
    checked = 0
    for n in range(1, max_n + 1):
        for g in catalog.connected_graphs(n):
            r = c_rank(g)
            assert r == sb_rank(complemented_adjacency(g))
            assert r == c_rank_transversal(g)
            assert r == c_rank_recursive(g)
            checked += 1
    return {"graphs": checked}


def _check_hereditary_pr(max_n, rng):
    from .graphs import mask_of, popcount

    def verify(g):
        fam = set(all_c_independent_sets(g))
        for m in fam:  # hereditary
            for v in bits(m):
                assert m & ~(1 << v) in fam
        singles = [1 << v for v in range(g.n) if 1 << v in fam]
        for m in fam:  # point replacement
            if not m:
                continue
            for p in singles:
                if p & m:
                    continue
                assert any((m & ~(1 << x)) | p in fam for x in bits(m)), \
                    (g.edges(), sorted(bits(m)), p)

    checked = 0
    for n in range(1, min(max_n, 5) + 1):
        for g in catalog.connected_graphs(n):
            verify(g)
            checked += 1
    for n in (7, 8, 9):
        for _ in range(3):
            edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                     if rng.random() < 0.4]
            verify(Graph.from_edges(n, edges))
            checked += 1
    return {"graphs": checked}


def _check_rank_bounds(max_n, rng):
    from .graphs import components, restriction
    checked = 0
    for n in range(1, max_n + 1):
        for g in catalog.nonisomorphic_graphs(n):
            r = c_rank(g)
            m = metrics(g)
            assert r <= m.maxdeg + 1  # rank bounded by max degree + 1
            comps = [c_rank(restriction(g, c)[0]) for c in components(g)]
            assert r == max(comps, default=0)
            sub = restriction(g, g.vertex_mask & ~1)[0] if g.n else g
            assert c_rank(sub) <= r  # restrictions cannot raise the rank
            checked += 1
    return {"graphs": checked}


def _check_girth_doubling(max_n, rng):
    from .iso import graphs_isomorphic
    from .graphs import girth
    checked = 0
    for n in range(3, max_n + 1):
        for g in catalog.connected_graphs(n):
            if g.edge_count() == 0:
                continue
            lg = levi(graph_as_peg(g))
            gg, lgg = girth(g), girth(lg)
            assert (lgg == 2 * gg) or (gg == float("inf") and
                                       lgg == float("inf"))
            assert lgg == float("inf") or (lgg >= 6 and lgg % 2 == 0)
            checked += 1
    return {"graphs": checked}


def _check_cubic_lattices(max_n, rng):
    top = 10 if max_n >= 10 else 8
    checked = 0
    for n in range(4, top + 1, 2):
        for g in catalog.cubic_connected_graphs(n):
            cubic_lattice_theorems(g)
            checked += 1
    return {"graphs": checked, "max_vertices": top}


def _check_complement(max_n, rng):
    report = rank_sum_report(catalog.petersen())
    assert report["complement_c_rank"] == 5
    checked = 0
    for n in range(1, min(max_n, 6) + 1):
        for g in catalog.nonisomorphic_graphs(n):
            rank_sum_report(g)
            checked += 1
    return {"graphs": checked}


CHECKS = [
    ("catalog-fixtures", _check_catalog),
    ("rank-agreement", _check_rank_agreement),
    ("hereditary-point-replacement", _check_hereditary_pr),
    ("rank-bounds", _check_rank_bounds),
    ("girth-doubling", _check_girth_doubling),
    ("cubic-lattices", _check_cubic_lattices),
    ("complement-bounds", _check_complement),
]


def cmd_verify(args) -> int:
    rng = random.Random(args.seed)
    results = []
    failed = False
    for name, check in CHECKS:
        try:
            detail = check(args.max_n, rng)
            results.append({"check": name, "passed": True, "detail": detail})
        except AssertionError as exc:
            failed = True
            results.append({"check": name, "passed": False,
                            "detail": str(exc)})
    _emit({"max_n": args.max_n, "seed": args.seed, "checks": results,
           "passed": not failed})
    return 1 if failed else 0


# ------------------------------------------------------------------- main

def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="superflats",
        description="superboolean rank calculus for finite graphs")
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, fn, needs_graph=True):
        p = sub.add_parser(name)
        if needs_graph:
            p.add_argument("graph",
                           help="catalog name, file path, or graph6 string")
        p.add_argument("--format", choices=("edges", "graph6", "peg"),
                       default="edges")
        p.add_argument("--dot", metavar="FILE")
        p.add_argument("--json", action="store_true",
                       help="JSON output (the default)")
        p.set_defaults(fn=fn)
        return p

    add("analyze", cmd_analyze)
    add("flats", cmd_flats)
    add("crank", cmd_crank)
    p = add("independents", cmd_independents)
    p.add_argument("--count", action="store_true")
    add("geo", cmd_geo)
    add("levi", cmd_levi)
    add("cmrank", cmd_cmrank)
    add("complement", cmd_complement)
    p = add("forbidden", cmd_forbidden, needs_graph=False)
    p.add_argument("m", type=int)
    p = add("verify-theorems", cmd_verify, needs_graph=False)
    p.add_argument("--max-n", type=int, default=5, dest="max_n")
    p.add_argument("--seed", type=int, default=0)
    return top


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.fn(args)
    except tuple(EXIT_CODES) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CODES[type(exc)]


if __name__ == "__main__":
    sys.exit(main())
