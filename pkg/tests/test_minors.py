"""Minor operations, wildcard matrices, cm-rank, forbidden families."""

import random

import pytest

from superflats.catalog import (all_graphs, complete_bipartite,
                                complete_graph, connected_graphs, cycle,
                                path, petersen)
from superflats.errors import PreconditionError, ShapeError, SizeLimitError
from superflats.flats import c_rank
from superflats.graphs import Graph, bits, is_connected, mask_of
from superflats.iso import graphs_isomorphic
from superflats.minors import (STAR, MinorOp, WildcardMatrix, apply_minor_op,
                               avoids_family, cm_rank, cm_rank_report,
                               connected_partitions,
                               contracted_wildcard_matrix, forbidden_family,
                               is_connected_matrix_criterion, is_minor,
                               wildcard_rank)
from superflats.sb import SBMatrix, sb_rank


class TestMinorOps:
    def test_delete_vertex(self):
        g = apply_minor_op(cycle(4), MinorOp("delete_vertex", 0))
        assert g.n == 3 and g.edge_count() == 2

    def test_delete_edge(self):
        g = apply_minor_op(cycle(4), MinorOp("delete_edge", 0, 1))
        assert g.edge_count() == 3
        with pytest.raises(PreconditionError):
            apply_minor_op(cycle(4), MinorOp("delete_edge", 0, 2))

    def test_contract_cycle_edge(self):
        g = apply_minor_op(cycle(4), MinorOp("contract", 0, 1))
        assert graphs_isomorphic(g, cycle(3))

    def test_contract_merges_neighborhoods(self):
        g = apply_minor_op(path(4), MinorOp("contract", 1, 2))
        assert graphs_isomorphic(g, path(3))

    def test_unknown_op(self):
        with pytest.raises(PreconditionError):
            apply_minor_op(cycle(4), MinorOp("fold", 0))


class TestIsMinor:
    def test_contains_itself_and_subgraphs(self):
        assert is_minor(cycle(4), cycle(4))
        assert is_minor(path(3), cycle(4))
        assert is_minor(Graph.from_edges(0, []), cycle(3))

    def test_petersen_classics(self):
        assert is_minor(complete_graph(5), petersen())
        assert is_minor(complete_bipartite(3, 3), petersen())
        assert not is_minor(complete_graph(6), petersen())

    def test_cycle_needs_cycle(self):
        assert not is_minor(cycle(3), path(5))

    def test_respects_edge_budget(self):
        assert not is_minor(complete_graph(4), cycle(5))

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            is_minor(cycle(3), complete_graph(11))

    def test_agrees_with_operation_closure(self):
        # minor <=> reachable by delete/contract operations, checked on C4
        g = cycle(4)
        reachable = set()
        work = [g]
        while work:
            h = work.pop()
            key = (h.n, tuple(h.adj))
            if key in reachable:
                continue
            reachable.add(key)
            for v in range(h.n):
                work.append(apply_minor_op(h, MinorOp("delete_vertex", v)))
            for u, v in h.edges():
                work.append(apply_minor_op(h, MinorOp("delete_edge", u, v)))
                work.append(apply_minor_op(h, MinorOp("contract", u, v)))
        reachable_graphs = [Graph(n, adj) for n, adj in reachable]
        for n in range(5):
            for h in all_graphs(n):
                expected = any(graphs_isomorphic(h, r)
                               for r in reachable_graphs if r.n == n)
                assert is_minor(h, g) == expected


class TestConnectedPartitions:
    def test_path3(self):
        parts = sorted(tuple(sorted(p)) for p in
                       connected_partitions(path(3)))
        expected = sorted(tuple(sorted(p)) for p in [
            (mask_of([0]), mask_of([1]), mask_of([2])),
            (mask_of([0, 1]), mask_of([2])),
            (mask_of([0]), mask_of([1, 2])),
            (mask_of([0, 1, 2]),),
        ])
        assert parts == expected

    def test_triangle_has_all_partitions(self):
        assert sum(1 for _ in connected_partitions(cycle(3))) == 5

    def test_blocks_are_connected(self):
        from superflats.graphs import restriction
        g = cycle(5)
        for blocks in connected_partitions(g):
            assert sum(b.bit_count() for b in blocks) == g.n
            for b in blocks:
                assert is_connected(restriction(g, b)[0])

    def test_matrix_criterion_matches_connectivity(self):
        for n in range(1, 6):
            for g in all_graphs(n):
                assert is_connected_matrix_criterion(g) == is_connected(g)


class TestWildcardMatrix:
    def test_shape_validation(self):
        with pytest.raises(ShapeError):
            WildcardMatrix.from_rows([[0, 1], [1]])
        with pytest.raises(ShapeError):
            WildcardMatrix.from_rows([[3]])

    def test_resolution_count(self):
        w = WildcardMatrix.from_rows([[STAR, 1], [0, STAR]])
        assert sum(1 for _ in w.resolutions()) == 4

    def test_rank_no_stars_matches_sb_rank(self):
        rng = random.Random(5)
        for _ in range(200):
            n = rng.randint(1, 5)
            grid = [[rng.randint(0, 1) for _ in range(n)] for _ in range(n)]
            assert wildcard_rank(WildcardMatrix.from_rows(grid)) == \
                sb_rank(SBMatrix.from_rows(grid))

    def test_rank_matches_resolution_oracle(self):
        rng = random.Random(6)
        for _ in range(300):
            n = rng.randint(1, 4)
            grid = [[rng.choice((0, 1, STAR)) for _ in range(n)]
                    for _ in range(n)]
            w = WildcardMatrix.from_rows(grid)
            oracle = max(sb_rank(SBMatrix.from_rows(res))
                         for res in w.resolutions())
            assert wildcard_rank(w) == oracle

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            wildcard_rank(WildcardMatrix.from_rows(
                [[1] * 13 for _ in range(13)]))


class TestContractedMatrix:
    def test_singleton_partition_is_complement(self):
        g = cycle(4)
        w = contracted_wildcard_matrix(g, [1 << v for v in range(4)])
        for i in range(4):
            for j in range(4):
                if i == j:
                    assert w.entries[i][j] == 1
                else:
                    assert w.entries[i][j] == \
                        (STAR if g.has_edge(i, j) else 1)

    def test_partition_validation(self):
        g = cycle(4)
        with pytest.raises(PreconditionError):
            contracted_wildcard_matrix(g, [mask_of([0, 1])])  # not covering
        with pytest.raises(PreconditionError):
            contracted_wildcard_matrix(
                g, [mask_of([0, 2]), mask_of([1, 3])])  # disconnected block


class TestCmRank:
    def test_known_values(self):
        assert cm_rank(cycle(4)) == 3
        assert cm_rank(complete_graph(4)) == 4
        assert cm_rank(path(4)) == 3
        assert cm_rank(complete_bipartite(3, 3)) == 4

    def test_cycle4_certificate(self):
        report = cm_rank_report(cycle(4))
        assert report["cm_rank"] == 3
        assert len(report["partition"]) >= 3

    def test_requires_connected(self):
        with pytest.raises(PreconditionError):
            cm_rank(Graph.from_edges(2, []))

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            cm_rank(petersen())

    def test_equals_max_rank_over_minor_closure(self):
        for n in range(1, 5):
            for g in connected_graphs(n):
                best = 0
                seen = set()
                work = [g]
                while work:
                    h = work.pop()
                    key = (h.n, tuple(h.adj))
                    if key in seen:
                        continue
                    seen.add(key)
                    best = max(best, c_rank(h))
                    for v in range(h.n):
                        work.append(
                            apply_minor_op(h, MinorOp("delete_vertex", v)))
                    for u, v in h.edges():
                        work.append(
                            apply_minor_op(h, MinorOp("delete_edge", u, v)))
                        work.append(
                            apply_minor_op(h, MinorOp("contract", u, v)))
                assert cm_rank(g) == best


class TestForbiddenFamilies:
    def test_family_sizes(self):
        assert len(forbidden_family(0)) == 1
        assert len(forbidden_family(1)) == 1
        assert len(forbidden_family(2)) == 5

    def test_members_have_rank_m_plus_one(self):
        for m in (1, 2):
            for f in forbidden_family(m):
                assert c_rank(f) == m + 1
                assert f.n <= 2 * m

    def test_avoidance_characterizes_cm_rank(self):
        fam1 = forbidden_family(1)
        for n in range(1, 5):
            for g in connected_graphs(n):
                assert avoids_family(g, fam1) == (cm_rank(g) <= 1)
