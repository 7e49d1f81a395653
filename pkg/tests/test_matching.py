# -*- coding: utf-8 -*-

import unittest

import numpy as np
import pytest

from cubic_tsp.exceptions import RejectedInputError
from cubic_tsp.generators import generate, random_cubic_3ec
from cubic_tsp.matching import Matching, iter_perfect_matchings, max_matching, two_factor_from_matching
from cubic_tsp.multigraph import Multigraph

from tests.graph_data import cycle_lengths, load


def _exhaustive_matching_size(g, forced, forbidden) -> int:
    used = {v for e in forced for v in g.endpoints(e)}
    edges = [g.endpoints(e) for e in g.edge_ids()
             if e not in forced and e not in forbidden and not g.is_loop(e)]

    def best(i, used):
        if i == len(edges):
            return 0
        u, v = edges[i]
        size = best(i + 1, used)
        if u not in used and v not in used:
            size = max(size, 1 + best(i + 1, used | {u, v}))
        return size

    return len(forced) + best(0, frozenset(used))


class TestMaxMatching(unittest.TestCase):

    def setUp(self) -> None:
        self.petersen = load('petersen.txt')
        self.k4 = load('k4.txt')

    def test_perfect(self):
        m = max_matching(self.petersen)
        assert len(m) == 5
        assert m.perfect
        assert m.covered() == set(range(10))

    def test_forced_and_forbidden(self):
        m = max_matching(self.petersen, forced=[0], forbidden=[2, 10])
        assert m.perfect
        assert 0 in m.edges
        assert 2 not in m.edges and 10 not in m.edges

    def test_not_perfect(self):
        # forbidding all edges at vertex 0
        m = max_matching(self.k4, forbidden=[0, 1, 2])
        assert not m.perfect
        assert len(m) == 1

    def test_parallel_edges_use_smallest_id(self):
        m = max_matching(load('theta.txt'))
        assert m.edges == frozenset([0])
        m = max_matching(load('theta.txt'), forbidden=[0])
        assert m.edges == frozenset([1])

    def test_rejects(self):
        with pytest.raises(RejectedInputError):
            max_matching(self.k4, forced=[0], forbidden=[0])
        with pytest.raises(RejectedInputError):
            max_matching(self.k4, forced=[0, 1])  # both at vertex 0
        loop = Multigraph.from_edge_list(2, [(0, 1), (1, 1)])
        with pytest.raises(RejectedInputError):
            max_matching(loop, forced=[1])

    def test_size_matches_exhaustive_search(self):
        rng = np.random.default_rng(7)
        for n in range(6, 13, 2):
            for seed in range(4):
                g = random_cubic_3ec(n, seed=seed)
                edges = g.edge_ids()
                forbidden = [int(e) for e in rng.choice(edges, size=n // 2, replace=False)]
                forced = [e for e in edges if e not in forbidden][:1]
                m = max_matching(g, forced=forced, forbidden=forbidden)
                assert len(m) == _exhaustive_matching_size(g, forced, forbidden), (n, seed)
                assert not set(m.edges) & set(forbidden)
                assert set(forced) <= set(m.edges)


class TestPerfectMatchings(unittest.TestCase):

    def test_counts(self):
        expected = {'k4': 3, 'prism': 4, 'k33': 6, 'cube': 9, 'petersen': 6}
        for name, count in expected.items():
            assert len(list(iter_perfect_matchings(generate(name)))) == count, name

    def test_forced(self):
        k4 = load('k4.txt')
        found = list(iter_perfect_matchings(k4, forced=[0]))
        assert found == [frozenset([0, 5])]
        assert list(iter_perfect_matchings(k4, forced=[0], forbidden=[5])) == []

    def test_all_distinct_and_perfect(self):
        g = generate('cube')
        found = list(iter_perfect_matchings(g))
        assert len(set(found)) == len(found)
        for edges in found:
            assert Matching(edges, g).perfect


class TestTwoFactorFromMatching(unittest.TestCase):

    def test_petersen_complements_are_two_pentagons(self):
        g = load('petersen.txt')
        for edges in iter_perfect_matchings(g):
            x = two_factor_from_matching(g, Matching(edges, g))
            assert x.is_two_factor()
            assert cycle_lengths(x) == [5, 5]

    def test_rejects(self):
        g = load('k4.txt')
        with pytest.raises(RejectedInputError):
            two_factor_from_matching(g, Matching(frozenset([0]), g))
        path = Multigraph.from_edge_list(2, [(0, 1)])
        with pytest.raises(RejectedInputError):
            two_factor_from_matching(path, Matching(frozenset([0]), path))


if __name__ == '__main__':
    unittest.main()
