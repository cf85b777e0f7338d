"""Flats lattices, c-rank, independence certificates, low-rank structure."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superflats.catalog import (coimbra, complete_bipartite, complete_graph,
                                connected_graphs, cycle, g3, g5, heawood,
                                nonisomorphic_graphs, path, petersen, prism)
from superflats.errors import PreconditionError
from superflats.flats import (all_c_independent_sets, c_rank,
                              c_rank_recursive, c_rank_transversal,
                              classify_low_rank, closed_vertices,
                              complement_c_rank_via_duality,
                              cubic_lattice_theorems, dual_star_lattice,
                              every_edge_in_square, exchange_property_holds,
                              flats, is_c_independent, is_closed_graph,
                              mat_g, potential_lines, require_sc3,
                              restricted_c_rank, sc3_independents,
                              transversal_independent)
from superflats.graphs import (Graph, bits, complemented_adjacency,
                               components, mask_of, metrics, popcount,
                               restriction)
from superflats.sb import is_witness, sb_rank


class TestRankValues:
    def test_fixed_points(self):
        assert c_rank(Graph.from_edges(0, [])) == 0
        assert c_rank(Graph.from_edges(1, [])) == 1
        assert c_rank(Graph.from_edges(5, [])) == 1

    def test_named_graphs(self):
        assert c_rank(petersen()) == 3
        assert c_rank(complete_graph(4)) == 4
        assert c_rank(complete_bipartite(3, 3)) == 2
        assert c_rank(cycle(4)) == 2
        assert c_rank(cycle(5)) == 3
        assert c_rank(heawood()) == 3
        assert c_rank(coimbra()) == 3
        assert c_rank(prism(3)) == 4

    def test_complete_graphs(self):
        for n in range(1, 6):
            assert c_rank(complete_graph(n)) == n

    def test_complete_bipartite_always_two(self):
        for a in range(1, 4):
            for b in range(a, 4):
                assert c_rank(complete_bipartite(a, b)) == 2


class TestAgreement:
    def test_four_ways_exhaustive(self):
        for n in range(1, 6):
            for g in connected_graphs(n):
                r = c_rank(g)
                assert r == sb_rank(complemented_adjacency(g))
                assert r == c_rank_transversal(g)
                assert r == c_rank_recursive(g)

    def test_independence_criteria_exhaustive(self):
        for n in range(1, 5):
            for g in nonisomorphic_graphs(n):
                a = complemented_adjacency(g)
                fl = flats(g)
                for jmask in range(1 << n):
                    flag, witness = is_c_independent(g, jmask)
                    assert flag == transversal_independent(g, jmask, fl)
                    if flag:
                        assert is_witness(a, witness.rows(), bits(jmask))


class TestWitness:
    def test_empty_set(self):
        flag, w = is_c_independent(cycle(5), 0)
        assert flag and w.rows() == ()

    def test_chain_is_strict_and_descending(self):
        g = petersen()
        flag, w = is_c_independent(g, mask_of([0, 1, 2]))
        assert flag
        assert w.chain[0] == g.vertex_mask
        for a, b in zip(w.chain, w.chain[1:]):
            assert b & ~a == 0 and b != a
        assert len(set(w.transversal)) == len(w.transversal)

    def test_dependent_set_has_no_witness(self):
        flag, w = is_c_independent(cycle(4), mask_of([0, 1, 2]))
        assert not flag and w is None


class TestIndependenceFamilies:
    def test_coimbra_family(self):
        g = coimbra()
        fam = set(all_c_independent_sets(g))
        excluded = {mask_of(t) for t in
                    [(0, 1, 4), (0, 2, 5), (1, 2, 3), (3, 4, 5)]}
        expected = {m for m in range(1 << 7) if popcount(m) <= 3}
        expected -= excluded
        assert fam == expected
        assert len(fam) == 60

    def test_heawood_count(self):
        assert len(all_c_independent_sets(heawood())) == 456

    def test_family_matches_pointwise_test(self):
        for g in (cycle(5), path(4), complete_graph(4)):
            fam = set(all_c_independent_sets(g))
            for m in range(1 << g.n):
                assert (m in fam) == is_c_independent(g, m)[0]

    def test_largest_member_size_is_rank(self):
        for g in (petersen(), coimbra(), complete_graph(4)):
            fam = all_c_independent_sets(g)
            assert max(popcount(m) for m in fam) == c_rank(g)


class TestRestrictedRank:
    def test_full_column_set(self):
        g = cycle(5)
        assert restricted_c_rank(g, g.vertex_mask) == 3

    def test_monotone_in_columns(self):
        g = petersen()
        assert restricted_c_rank(g, mask_of([0])) == 1
        assert restricted_c_rank(g, mask_of([0, 1])) == 2


class TestLowRank:
    def test_rank_two_decomposition(self):
        report = classify_low_rank(complete_bipartite(2, 3))
        assert report.rank == 2
        assert report.bipartite_blocks is not None
        assert report.square is None

    def test_rank_four_square(self):
        report = classify_low_rank(complete_graph(4))
        assert report.rank == 4 and report.square is not None
        assert report.five_config is None

    def test_rank_five_configuration(self):
        report = classify_low_rank(complete_graph(5))
        assert report.rank == 5 and report.five_config is not None

    def test_certificates_consistent_exhaustively(self):
        for n in range(1, 6):
            for g in nonisomorphic_graphs(n):
                classify_low_rank(g)  # internal consistency asserts


class TestRank3Geometry:
    def test_require_sc3(self):
        with pytest.raises(PreconditionError):
            require_sc3(complete_graph(4))       # rank 4
        with pytest.raises(PreconditionError):
            require_sc3(cycle(4))                # not sober
        require_sc3(petersen())

    def test_potential_lines(self):
        assert potential_lines(heawood()) == []
        assert potential_lines(coimbra()) == []
        assert potential_lines(g5()) == []
        lines = potential_lines(g3())
        assert mask_of([0, 4, 11]) in lines

    def test_diameter_bounds_on_lines(self):
        assert metrics(g3()).diameter == 3
        assert metrics(g5()).diameter == 5

    def test_matroid_exchange(self):
        for g in (coimbra(), petersen(), heawood(), g3()):
            assert exchange_property_holds(mat_g(g))

    def test_independents_are_mat_minus_lines(self):
        for g in (heawood(), g3(), g5()):
            expected = mat_g(g) - set(potential_lines(g))
            assert sc3_independents(g) == expected
            assert sc3_independents(g) == set(all_c_independent_sets(g))

    def test_no_lines_means_matroid(self):
        g = heawood()
        assert sc3_independents(g) == mat_g(g)
        assert exchange_property_holds(sc3_independents(g))


class TestClosedVertices:
    def test_petersen_all_closed(self):
        assert is_closed_graph(petersen())

    def test_twins_never_closed(self):
        assert closed_vertices(complete_bipartite(2, 2)) == []

    def test_path_midpoint(self):
        assert closed_vertices(path(3)) == [1]


class TestCubicLattices:
    def test_k4_special(self):
        report = cubic_lattice_theorems(complete_graph(4))
        assert report["special"] == "K4"
        assert report["distributive"] and report["jordan_dedekind"]

    def test_k33_special(self):
        report = cubic_lattice_theorems(complete_bipartite(3, 3))
        assert report["special"] == "K3,3"
        assert report["star_atom"]

    def test_petersen_ordinary(self):
        report = cubic_lattice_theorems(petersen())
        assert report["special"] is None
        assert not report["modular"]
        assert report["jordan_dedekind"]  # rank 3

    def test_prism_jordan_dedekind(self):
        report = cubic_lattice_theorems(prism(4))
        assert report["rank"] == 4
        assert report["jordan_dedekind"]
        assert report["every_edge_in_square"]

    def test_noncubic_rejected(self):
        with pytest.raises(PreconditionError):
            cubic_lattice_theorems(cycle(5))

    def test_edge_in_square_predicate(self):
        assert every_edge_in_square(complete_bipartite(3, 3))
        assert not every_edge_in_square(petersen())  # girth 5


class TestDuality:
    def test_dual_star_lattice_height(self):
        for n in range(1, 6):
            for g in nonisomorphic_graphs(n):
                from superflats.graphs import complement
                assert complement_c_rank_via_duality(g) == \
                    c_rank(complement(g))

    def test_dual_star_lattice_shape(self):
        l = dual_star_lattice(cycle(4))
        assert l.elements[l.bottom] == 0
        assert l.tag == "join"


@st.composite
def small_graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    flags = draw(st.lists(st.booleans(), min_size=len(pairs),
                          max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, f in zip(pairs, flags) if f])


class TestRankBounds:
    @given(g=small_graphs())
    @settings(max_examples=80, deadline=None)
    def test_maxdeg_component_restriction(self, g):
        r = c_rank(g)
        assert r <= max((g.degree(v) for v in range(g.n)), default=0) + 1
        assert r == max((c_rank(restriction(g, c)[0])
                         for c in components(g)), default=0)
        if g.n > 1:
            sub, _ = restriction(g, g.vertex_mask >> 1)
            assert c_rank(sub) <= r

    @given(g=small_graphs(max_n=6))
    @settings(max_examples=50, deadline=None)
    def test_complete_restriction_forces_rank(self, g):
        # any clique of size k forces rank >= k
        best = 1 if g.n else 0
        for m in range(1 << g.n):
            vs = list(bits(m))
            if all(g.has_edge(u, v) for i, u in enumerate(vs)
                   for v in vs[i + 1:]):
                best = max(best, len(vs))
        assert c_rank(g) >= best
