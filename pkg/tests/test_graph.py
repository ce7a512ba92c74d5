"""Graph container, verifier equivalence, and the random maximal generator."""

import random

import pytest

from conftest import random_int_points, strictly_monotonic_set
from lgg.geometry import BOUNDARY, PointSet, in_closed_disk
from lgg.graph import (
    Graph,
    GraphError,
    Violation,
    _splitmix64,
    candidate_edges,
    random_maximal_lgg,
    verify,
    verify_direct,
)


class TestGraph:
    def test_edges_canonicalized(self):
        ps = PointSet.of([(0, 0), (10, 0), (0, 10)])
        g = Graph(ps, ((2, 0), (1, 0)))
        assert g.edges == ((0, 1), (0, 2))
        assert g.adjacency == ((1, 2), (0,), (0,))

    def test_degree_and_has_edge(self):
        ps = PointSet.of([(0, 0), (10, 0), (0, 10)])
        g = Graph(ps, ((0, 1),))
        assert g.degree(0) == 1 and g.degree(2) == 0
        assert g.has_edge(1, 0) and not g.has_edge(1, 2)

    def test_malformed_edges_rejected(self):
        ps = PointSet.of([(0, 0), (10, 0)])
        with pytest.raises(GraphError):
            Graph(ps, ((0, 0),))
        with pytest.raises(GraphError):
            Graph(ps, ((0, 2),))
        with pytest.raises(GraphError):
            Graph(ps, ((0, 1), (1, 0)))

    def test_without_edges(self):
        ps = PointSet.of([(0, 0), (10, 0), (0, 10)])
        g = Graph(ps, ((0, 1), (0, 2)))
        assert g.without_edges([(2, 0)]).edges == ((0, 1),)

    def test_induced(self):
        ps = PointSet.of([(0, 0), (10, 0), (0, 10), (10, 10)])
        g = Graph(ps, ((0, 1), (1, 3), (2, 3)))
        sub, old = g.induced([1, 3, 2])
        assert old == [1, 2, 3]
        assert sub.edges == ((0, 2), (1, 2))


class TestVerify:
    def test_right_triangle_boundary_violations(self):
        ps = PointSet.of([(0, 0), (2, 0), (2, 2)])
        g = Graph(ps, ((0, 1), (1, 2), (0, 2)))
        report = verify(g)
        assert not report.valid
        assert report.violations == (
            Violation(0, 1, 2, BOUNDARY),
            Violation(2, 0, 1, BOUNDARY),
        )

    def test_bent_path_is_valid(self):
        ps = PointSet.of([(0, 0), (1, 0), (1, 1)])
        g = Graph(ps, ((0, 1), (1, 2)))
        assert verify(g).valid

    def test_collinear_path_overlap_is_invalid(self):
        ps = PointSet.of([(0, 0), (1, 0), (2, 0)])
        g = Graph(ps, ((0, 2), (0, 1)))
        report = verify(g)
        assert [v.kind for v in report.violations] == ["interior"]

    def test_matches_direct_definition_on_random_graphs(self):
        rng = random.Random(97)
        for _ in range(500):
            ps = random_int_points(rng, 20, 50)
            cands = candidate_edges(20)
            edges = rng.sample(cands, rng.randrange(0, 40))
            g = Graph(ps, tuple(edges))
            assert verify(g) == verify_direct(g)

    def test_matches_direct_definition_real_mode(self):
        from conftest import real_points

        rng = random.Random(98)
        for _ in range(50):
            ps = real_points(rng, 12)
            edges = rng.sample(candidate_edges(12), 20)
            g = Graph(ps, tuple(edges))
            assert verify(g) == verify_direct(g)

    def test_deleting_edges_preserves_validity(self):
        rng = random.Random(99)
        for trial in range(30):
            ps = random_int_points(rng, 40, 10**6)
            g = random_maximal_lgg(ps, seed=trial)
            keep = rng.sample(g.edges, len(g.edges) // 2)
            assert verify(Graph(ps, tuple(keep))).valid


class TestSplitmix:
    def test_reference_values(self):
        # first outputs of the splitmix64 stream seeded with 0
        assert _splitmix64(0) == 0xE220A8397B1DCDAF
        assert _splitmix64(_splitmix64(0)) != _splitmix64(0)


def _oracle_maximal(ps, seed):
    """Order-respecting greedy insertion using only the disk predicate."""

    def mix(z):
        z = (z + 0x9E3779B97F4A7C15) & (2**64 - 1)
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & (2**64 - 1)
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & (2**64 - 1)
        return z ^ (z >> 31)

    n = len(ps)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    base = mix(seed)
    order = sorted(range(len(pairs)), key=lambda i: (mix(base ^ i), i))
    adj = {i: [] for i in range(n)}
    edges = []
    for idx in order:
        u, v = pairs[idx]
        ok = all(
            not in_closed_disk(ps[u], ps[v], ps[w])
            and not in_closed_disk(ps[u], ps[w], ps[v])
            for w in adj[u]
        ) and all(
            not in_closed_disk(ps[v], ps[u], ps[w])
            and not in_closed_disk(ps[v], ps[w], ps[u])
            for w in adj[v]
        )
        if ok:
            adj[u].append(v)
            adj[v].append(u)
            edges.append((u, v))
    return tuple(sorted(edges))


class TestRandomMaximal:
    def test_deterministic(self):
        rng = random.Random(3)
        ps = random_int_points(rng, 60, 10**5)
        assert random_maximal_lgg(ps, 42).edges == random_maximal_lgg(ps, 42).edges
        assert random_maximal_lgg(ps, 42).edges != random_maximal_lgg(ps, 43).edges

    def test_matches_independent_oracle(self):
        rng = random.Random(5)
        for seed in range(10):
            ps = random_int_points(rng, 15, 100)
            got = random_maximal_lgg(ps, seed)
            assert got.edges == _oracle_maximal(ps, seed)

    def test_compiled_and_interpreted_paths_agree(self):
        import lgg.graph as graph_mod

        if graph_mod._insert_compiled is None:
            pytest.skip("compiled kernel unavailable")
        rng = random.Random(7)
        ps = random_int_points(rng, 80, 10**6)
        fast = random_maximal_lgg(ps, 11)
        saved = graph_mod._insert_compiled
        graph_mod._insert_compiled = None
        try:
            slow = random_maximal_lgg(ps, 11)
        finally:
            graph_mod._insert_compiled = saved
        assert fast.edges == slow.edges

    def test_result_is_valid_and_maximal(self):
        rng = random.Random(9)
        for seed in range(5):
            ps = random_int_points(rng, 30, 10**4)
            g = random_maximal_lgg(ps, seed)
            assert verify(g).valid
            present = set(g.edges)
            for cand in candidate_edges(30):
                if cand in present:
                    continue
                extended = Graph(ps, g.edges + (cand,))
                assert not verify(extended).valid, f"{cand} could be added"

    def test_collinear_triple_outcomes(self):
        # The long edge blocks both short edges when it is drawn first;
        # otherwise a short edge excludes the long one and the other short
        # edge joins.  Both results are maximal.
        ps = PointSet.of([(0, 0), (1, 0), (2, 0)])
        seen = set()
        for seed in range(40):
            g = random_maximal_lgg(ps, seed)
            assert g.edges in (((0, 1), (1, 2)), ((0, 2),))
            assert verify(g).valid
            seen.add(g.edges)
        assert len(seen) == 2

    def test_too_few_points_rejected(self):
        with pytest.raises(ValueError):
            random_maximal_lgg(PointSet.of([(0, 0)]), 1)

    def test_real_mode(self):
        from conftest import real_points

        rng = random.Random(13)
        ps = real_points(rng, 25)
        g = random_maximal_lgg(ps, 4)
        assert verify(g).valid and len(g.edges) >= 24 // 2

    def test_terminal_degree_on_monotone_sets(self):
        rng = random.Random(15)
        for seed in range(20):
            ps = strictly_monotonic_set(rng, 30)
            g = random_maximal_lgg(ps, seed)
            assert g.degree(0) <= 1 and g.degree(29) <= 1
