import random
from math import comb

import pytest

import spherig as sp
from spherig.graphs import Graph, complete_graph, graph_of
from spherig.rigidity import (
    DEFAULT_PRIME,
    Embedding,
    RigidityMatrix,
    decide_rigidity,
    derive_seed,
    random_embedding,
    rank_mod,
    rigidity_target,
)

from oracles import rational_rank, rational_rigidity_rank

P = DEFAULT_PRIME


class TestDeriveSeed:
    def test_deterministic(self):
        assert derive_seed(7, "a", 1) == derive_seed(7, "a", 1)

    def test_label_sensitive(self):
        assert derive_seed(7, "a", 1) != derive_seed(7, "a", 2)
        assert derive_seed(7, "a") != derive_seed(8, "a")

    def test_fits_in_64_bits(self):
        assert 0 <= derive_seed(0) < 2**64


class TestEmbedding:
    def test_random_embedding_is_seed_deterministic(self):
        g = complete_graph(range(1, 5))
        assert random_embedding(g, 3, 42) == random_embedding(g, 3, 42)
        assert random_embedding(g, 3, 42) != random_embedding(g, 3, 43)

    def test_coordinates_in_field(self):
        g = complete_graph(range(1, 5))
        phi = random_embedding(g, 3, 0)
        for point in phi.coords.values():
            assert len(point) == 3
            assert all(0 <= x < P for x in point)

    def test_zero_dimension_rejected(self):
        with pytest.raises(ValueError):
            Embedding(0, {})

    def test_wrong_arity_rejected(self):
        with pytest.raises(ValueError):
            Embedding(2, {1: (5,)})


class TestRigidityMatrix:
    def test_single_edge_rows(self):
        g = Graph({1, 2}, [(1, 2)])
        phi = Embedding(2, {1: (0, 0), 2: (1, 0)})
        m = RigidityMatrix(g, phi)
        assert m.shape == (1, 4)
        assert m.rows == [[P - 1, 0, 1, 0]]

    def test_row_blocks_are_skew(self):
        g = graph_of(sp.cross_polytope(3))
        phi = random_embedding(g, 3, 5)
        m = RigidityMatrix(g, phi)
        order = m.vertex_order
        for row, (u, v) in zip(m.rows, m.edge_order):
            cu = order.index(u) * 3
            cv = order.index(v) * 3
            for k in range(3):
                assert (row[cu + k] + row[cv + k]) % P == 0
            for j, x in enumerate(row):
                if not (cu <= j < cu + 3 or cv <= j < cv + 3):
                    assert x == 0

    def test_embedding_must_cover_vertices(self):
        g = Graph({1, 2}, [(1, 2)])
        with pytest.raises(ValueError):
            RigidityMatrix(g, Embedding(2, {1: (0, 0)}))


class TestRankMod:
    def test_zero_matrix(self):
        assert rank_mod([[0, 0], [0, 0]], 7) == 0

    def test_identity(self):
        assert rank_mod([[1, 0], [0, 1]], 7) == 2

    def test_multiples_of_p_vanish(self):
        assert rank_mod([[7, 14]], 7) == 0

    def test_dependent_rows(self):
        assert rank_mod([[1, 2, 3], [2, 4, 6], [0, 1, 1]], 101) == 2

    def test_empty(self):
        assert rank_mod([], 7) == 0

    def test_agrees_with_rational_rank_on_random_matrices(self):
        rng = random.Random(3)
        for _ in range(20):
            rows = [
                [rng.randrange(-9, 10) for _ in range(rng.randrange(1, 6))]
            ]
            ncols = len(rows[0])
            for _ in range(rng.randrange(5)):
                rows.append([rng.randrange(-9, 10) for _ in range(ncols)])
            assert rank_mod([r[:] for r in rows], P) == rational_rank(rows)


class TestDecideRigidity:
    @pytest.mark.parametrize("d", [3, 4, 5])
    def test_complete_graph_on_d_plus_1(self, d):
        verdict = decide_rigidity(complete_graph(range(1, d + 2)), d)
        assert verdict.is_rigid
        assert verdict.rank == comb(d + 1, 2)
        assert verdict.stress_dim == 0

    def test_octahedron_is_3_rigid(self):
        verdict = decide_rigidity(graph_of(sp.cross_polytope(3)), 3, seed=1)
        assert verdict.is_rigid
        assert verdict.rank == rigidity_target(6, 3) == 12
        assert verdict.stress_dim == 0

    def test_octahedron_minus_edge_flexes(self):
        g = graph_of(sp.cross_polytope(3)).remove_edge(1, 3)
        verdict = decide_rigidity(g, 3, seed=1)
        assert not verdict.is_rigid
        assert verdict.rank == 11

    def test_cross_4_rank_and_stress(self):
        verdict = decide_rigidity(graph_of(sp.cross_polytope(4)), 4, seed=1)
        assert verdict.is_rigid
        assert verdict.rank == 22
        assert verdict.stress_dim == 2

    def test_too_few_vertices_rejected(self):
        with pytest.raises(ValueError, match="at least d\\+1"):
            decide_rigidity(complete_graph(range(1, 5)), 4)

    def test_bad_trials_rejected(self):
        with pytest.raises(ValueError):
            decide_rigidity(complete_graph(range(1, 5)), 3, trials=0)

    def test_d_plus_1_vertices_uses_completeness(self):
        # the rank target degenerates to C(d+1,2); one missing edge must flex
        g = complete_graph(range(1, 6)).remove_edge(1, 2)
        verdict = decide_rigidity(g, 4, seed=2)
        assert not verdict.is_rigid
        assert verdict.rank == rigidity_target(5, 4) - 1

    def test_isolated_vertex_never_rigid(self):
        g = Graph(range(1, 7), complete_graph(range(1, 6)).edges)
        verdict = decide_rigidity(g, 3, seed=0)
        assert not verdict.is_rigid

    def test_same_seed_same_verdict(self):
        g = graph_of(sp.cross_polytope(4))
        assert decide_rigidity(g, 4, seed=9) == decide_rigidity(g, 4, seed=9)

    def test_relabeling_preserves_verdict(self):
        g = graph_of(sp.cross_polytope(4))
        shifted = Graph(
            (v + 100 for v in g.vertices),
            ((a + 100, b + 100) for a, b in g.sorted_edges()),
        )
        a = decide_rigidity(g, 4, seed=3)
        b = decide_rigidity(shifted, 4, seed=3)
        assert (a.rank, a.is_rigid, a.stress_dim) == (b.rank, b.is_rigid, b.stress_dim)

    def test_rank_monotone_under_row_deletion(self):
        g = graph_of(sp.cross_polytope(3))
        m = RigidityMatrix(g, random_embedding(g, 3, 4))
        full = rank_mod(m.rows, P)
        for i in range(len(m.rows)):
            sub = rank_mod(m.rows[:i] + m.rows[i + 1 :], P)
            assert sub in (full - 1, full)

    def test_stress_space_dim_helper(self):
        g = graph_of(sp.cross_polytope(4))
        assert sp.stress_space_dim(g, 4, seed=1) == 2


class TestAgainstRationalOracle:
    @pytest.mark.parametrize(
        "build,d",
        [
            (lambda: sp.cross_polytope(3), 3),
            (lambda: sp.boundary_simplex(4), 4),
            (lambda: sp.join_spheres(2, 2), 4),
            (lambda: sp.cyclic_polytope_boundary(6, 4), 4),
        ],
    )
    def test_field_rank_matches_rational_rank(self, build, d):
        g = graph_of(build())
        verdict = decide_rigidity(g, d, seed=0)
        assert verdict.rank == rational_rigidity_rank(g, d, random.Random(11))

    def test_minus_edge_ranks_match_too(self):
        g = graph_of(sp.cross_polytope(4)).remove_edge(1, 3)
        verdict = decide_rigidity(g, 4, seed=0)
        assert verdict.rank == rational_rigidity_rank(g, 4, random.Random(12))
