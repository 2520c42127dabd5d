"""Adjacency oracles, factor block graphs and graph materialization."""
import random

import pytest
from hypothesis import given, settings, strategies as st

from shufflecube import (
    B_SSQ_LABEL,
    C4_LABEL,
    D_BSQ_LABEL,
    Dimension,
    InvalidVertexError,
    ResourceLimitError,
    TopologyKind,
    adjacent,
    bh_neighbors,
    block_graph,
    format_vertex,
    is_valid_vertex,
    make_block,
    materialize,
    neighbors,
    pair1,
    pair2,
    parse_vertex,
    v_set,
)
from oracles import bfs_all, bsq_adjacent_rec, sq_adjacent_rec, ssq_adjacent_rec

D6 = Dimension(6)
D10 = Dimension(10)

RECURSIVE = {
    TopologyKind.SQ: sq_adjacent_rec,
    TopologyKind.SSQ: ssq_adjacent_rec,
    TopologyKind.BSQ: bsq_adjacent_rec,
}


def test_v_set_rows_verbatim():
    assert v_set(0b00) == {0b1111, 0b0001, 0b0010, 0b0011}
    assert v_set(0b01) == {0b0100, 0b0101, 0b0110, 0b0111}
    assert v_set(0b10) == {0b1000, 0b1001, 0b1010, 0b1011}
    assert v_set(0b11) == {0b1100, 0b1101, 0b1110, 0b1111}
    assert all(0 not in v_set(t) and len(v_set(t)) == 4 for t in range(4))


class TestAdjacent:
    def test_reference_edges(self):
        assert adjacent(TopologyKind.SQ, D6, 0b000000, 0b111100)
        assert adjacent(TopologyKind.BSQ, D6, 0b110000, 0b001100)
        assert adjacent(TopologyKind.SSQ, D6, 0b000001, 0b000010)

    def test_self_loops_absent(self):
        for kind in RECURSIVE:
            assert not adjacent(kind, D6, 0b110100, 0b110100)

    def test_two_block_changes_rejected(self):
        assert not adjacent(TopologyKind.BSQ, D6, 0b000001, 0b100000)

    def test_invalid_ssq_vertex_is_loud(self):
        with pytest.raises(InvalidVertexError):
            adjacent(TopologyKind.SSQ, D6, 0b010000, 0b000000)
        with pytest.raises(InvalidVertexError):
            neighbors(TopologyKind.SSQ, D6, 0b010000)

    @pytest.mark.parametrize("kind", list(RECURSIVE))
    def test_matches_recursive_definition_exhaustive_n6(self, kind):
        rec = RECURSIVE[kind]
        words = [u for u in range(64) if is_valid_vertex(kind, D6, u)]
        for u in words:
            for v in words:
                assert adjacent(kind, D6, u, v) == rec(6, u, v), (u, v)

    @pytest.mark.parametrize("kind", list(RECURSIVE))
    def test_matches_recursive_definition_sampled_n10(self, kind):
        rec = RECURSIVE[kind]
        rng = random.Random(sum(kind.value.encode()))
        words = materialize(kind, 10).words
        for _ in range(100_000):
            u, v = rng.choice(words), rng.choice(words)
            assert adjacent(kind, D10, u, v) == rec(10, u, v)

    @pytest.mark.parametrize("kind", list(RECURSIVE))
    def test_symmetric_and_irreflexive_sampled_n10(self, kind):
        rng = random.Random(17)
        words = materialize(kind, 10).words
        for _ in range(20_000):
            u, v = rng.choice(words), rng.choice(words)
            assert adjacent(kind, D10, u, v) == adjacent(kind, D10, v, u)
        assert not any(adjacent(kind, D10, w, w) for w in words[:100])


class TestNeighbors:
    def test_frozen_neighborhoods_of_zero(self):
        def words(kind):
            return [format_vertex(w, D6) for w in neighbors(kind, D6, 0)]

        assert words(TopologyKind.SQ) == ["000001", "000010", "000100", "001000", "001100", "111100"]
        assert words(TopologyKind.SSQ) == ["000001", "000011", "000100", "001000", "001100", "111100"]
        assert words(TopologyKind.BSQ) == ["000001", "000011", "010000", "010100", "110000", "110100"]

    @pytest.mark.parametrize("kind", [TopologyKind.Q, TopologyKind.SQ, TopologyKind.SSQ, TopologyKind.BSQ])
    @pytest.mark.parametrize("n", [6, 10])
    def test_degree_n_everywhere(self, kind, n):
        g = materialize(kind, n)
        assert all(g.degree(i) == n for i in range(g.num_vertices))

    @given(st.integers(0, (1 << 10) - 1))
    @settings(max_examples=200)
    def test_neighbor_lists_match_adjacent(self, u):
        got = neighbors(TopologyKind.BSQ, D10, u)
        assert got == sorted(got)
        assert all(adjacent(TopologyKind.BSQ, D10, u, v) for v in got)


class TestBlockGraphs:
    def test_c4_is_the_mod4_cycle(self):
        bg = block_graph(C4_LABEL)
        assert bg.nodes == (0, 1, 2, 3)
        assert bg.adj[0] == (1, 3) and bg.adj[1] == (0, 2)
        assert bg.distance(0, 2) == 2

    def test_b_ssq_structure(self):
        bg = block_graph(B_SSQ_LABEL)
        assert bg.nodes == (0, 1, 2, 3, 12, 13, 14, 15)
        assert all(len(bg.adj[a]) == 4 for a in bg.nodes)
        assert bg.distance(0b0000, 0b1101) == 2

    def test_d_bsq_structure(self):
        bg = block_graph(D_BSQ_LABEL)
        assert bg.nodes == tuple(range(16))
        assert all(len(bg.adj[a]) == 4 for a in bg.nodes)
        assert bg.distance(0b0000, 0b1111) == 3
        assert bg.eccentricity(0) == 4
        assert [b for b in bg.nodes if bg.distance(0, b) == 4] == [0b0010, 0b1010]

    @pytest.mark.parametrize("label", [C4_LABEL, B_SSQ_LABEL, D_BSQ_LABEL])
    def test_distance_table_properties(self, label):
        bg = block_graph(label)
        for a in bg.nodes:
            assert bg.dist[(a, a)] == 0
            for b in bg.nodes:
                assert bg.dist[(a, b)] == bg.dist[(b, a)]
                if a != b:
                    hop = bg.hop(a, b)
                    assert hop in bg.adj[a]
                    assert bg.dist[(hop, b)] == bg.dist[(a, b)] - 1

    def test_d_matches_bh2_rule_on_all_blocks(self):
        bg = block_graph(D_BSQ_LABEL)
        for b in bg.nodes:
            expected = {make_block(a0, a1) for a0, a1 in bh_neighbors(2, (pair1(b), pair2(b)))}
            assert set(bg.adj[b]) == expected


class TestMaterialize:
    @pytest.mark.parametrize(
        "kind,n,vertices,edges",
        [
            (TopologyKind.SSQ, 6, 32, 96),
            (TopologyKind.BSQ, 6, 64, 192),
            (TopologyKind.SQ, 10, 1024, 5120),
        ],
    )
    def test_counts(self, kind, n, vertices, edges):
        g = materialize(kind, n)
        assert g.num_vertices == vertices
        assert g.edge_count == edges

    def test_cap_error_names_the_count(self):
        with pytest.raises(ResourceLimitError, match="4194304"):
            materialize(TopologyKind.Q, 22)

    @pytest.mark.parametrize("kind", [TopologyKind.Q, TopologyKind.SQ, TopologyKind.SSQ, TopologyKind.BSQ])
    @pytest.mark.parametrize("n", [6, 10])
    def test_connected_from_zero(self, kind, n):
        g = materialize(kind, n)
        assert bfs_all(g.nbrs, g.index_of(0)).count(-1) == 0

    def test_symmetric_adjacency_exhaustive_n6(self):
        for kind in RECURSIVE:
            g = materialize(kind, 6)
            for i, row in enumerate(g.nbrs):
                for j in row:
                    assert i in g.nbrs[j]
                    assert i != j

    @pytest.mark.parametrize("n", [6, 10])
    def test_bsq_parity_class_splits_every_edge(self, n):
        dim = Dimension(n)
        g = materialize(TopologyKind.BSQ, n)

        def cls(u):
            total = sum(pair1((u >> (4 * j - 2)) & 15) for j in range(1, dim.k + 1))
            return (total + (u & 3)) % 2

        assert all(cls(g.word_of(i)) != cls(g.word_of(j)) for i, j in g.edges())


class TestBalancedHypercube:
    def test_neighbor_examples(self):
        assert bh_neighbors(2, (0, 0)) == [(1, 0), (1, 1), (3, 0), (3, 1)]
        assert bh_neighbors(2, (2, 0)) == [(1, 0), (1, 1), (3, 0), (3, 1)]
        assert bh_neighbors(1, (0,)) == [(1,), (3,)]

    def test_neighbor_count_is_2m(self):
        for m in (1, 2, 3):
            assert len(bh_neighbors(m, (0,) * m)) == 2 * m

    def test_coordinate_out_of_range(self):
        with pytest.raises(InvalidVertexError):
            bh_neighbors(2, (0, 4))
