# -*- coding: utf-8 -*-

import unittest
from fractions import Fraction
from itertools import combinations

import pytest

from cubic_tsp.exceptions import RejectedInputError
from cubic_tsp.generators import generate, random_cubic_3ec
from cubic_tsp.multigraph import (CutSpec, Multigraph, contract, edge_connectivity, find_essential_3cut,
                                  global_min_cut, held_karp_value, min_cut_between, suppress_degree2,
                                  validate_cubic_3ec)

from tests.graph_data import load


def _has_essential_3cut(g) -> bool:
    r, *rest = g.vertices()
    for size in range(1, g.n - 2):
        for others in combinations(rest, size):
            if len(g.cut_edges({r, *others})) == 3:
                return True
    return False


class TestMultigraph(unittest.TestCase):

    def setUp(self) -> None:
        self.k4 = load('k4.txt')
        self.theta = load('theta.txt')

    def test_edge_ids_in_input_order(self):
        assert self.k4.edge_ids() == [0, 1, 2, 3, 4, 5]
        assert self.k4.endpoints(0) == (0, 1)
        assert self.k4.endpoints(5) == (2, 3)
        assert self.k4.other_end(3, 2) == 1

    def test_parallel_edges(self):
        assert self.theta.n == 2
        assert self.theta.m == 3
        assert self.theta.edges_between(0, 1) == [0, 1, 2]
        assert self.theta.is_cubic()
        assert self.theta.girth() == 2

    def test_degree_counts_loops_twice(self):
        g = Multigraph.from_edge_list(2, [(0, 1), (1, 1)])
        assert g.degree(1) == 3
        assert g.is_loop(1)
        assert g.girth() == 1

    def test_fresh_ids_are_never_reused(self):
        g = self.k4.copy()
        g.remove_edge(5)
        eid = g.add_edge(2, 3)
        assert eid == 6
        # copies share the pool
        assert self.k4.copy().add_edge(0, 1) == 7

    def test_unknown_elements(self):
        with pytest.raises(RejectedInputError):
            self.k4.endpoints(17)
        with pytest.raises(RejectedInputError):
            self.k4.incident(9)
        with pytest.raises(RejectedInputError):
            self.k4.add_edge(0, 9)
        with pytest.raises(RejectedInputError):
            self.k4.other_end(5, 0)

    def test_equality_ignores_orientation(self):
        g = Multigraph.from_edge_list(2, [(1, 0)])
        h = Multigraph.from_edge_list(2, [(0, 1)])
        assert g == h
        assert g != Multigraph.from_edge_list(2, [(0, 1), (0, 1)])

    def test_from_networkx_matches_file(self):
        assert generate('petersen') == load('petersen.txt')

    def test_girth(self):
        assert self.k4.girth() == 3
        assert load('petersen.txt').girth() == 5
        assert generate('cube').girth() == 4

    def test_short_cycles(self):
        assert len(self.k4.short_cycles(3)) == 4
        assert len(self.k4.short_cycles(4)) == 3
        assert len(generate('k33').short_cycles(4)) == 9
        assert len(generate('cube').short_cycles(4)) == 6
        cycles = load('petersen.txt').short_cycles(5)
        assert len(cycles) == 12
        for c in cycles:
            assert c.vertices[0] == min(c.vertices)
            assert len(set(c.edges)) == 5
        with pytest.raises(RejectedInputError):
            self.k4.short_cycles(2)

    def test_to_networkx_keys(self):
        nxg = self.theta.to_networkx()
        assert sorted(k for _, _, k in nxg.edges(keys=True)) == [0, 1, 2]

    def test_held_karp_value(self):
        assert held_karp_value(load('petersen.txt')) == Fraction(10)
        assert held_karp_value(self.k4) == Fraction(4)


class TestCuts(unittest.TestCase):

    def setUp(self) -> None:
        self.bridged = load('two_k4_bridged.txt')
        self.petersen = load('petersen.txt')
        self.prism = load('prism.json')

    def test_global_min_cut(self):
        value, cut = global_min_cut(self.bridged)
        assert value == 2
        assert cut.side == frozenset([0, 1, 2, 3])
        assert cut.crossing == (10, 11)
        assert edge_connectivity(self.petersen) == 3
        assert edge_connectivity(load('k4.txt')) == 3

    def test_disconnected(self):
        g = Multigraph.from_edge_list(4, [(0, 1), (2, 3)])
        assert global_min_cut(g)[0] == 0
        assert not g.is_connected()

    def test_min_cut_between(self):
        value, cut = min_cut_between(self.petersen, [0], 7)
        assert value == 3
        assert 0 in cut.side and 7 not in cut.side
        value, _ = min_cut_between(self.bridged, [0, 1], 6, cutoff=3)
        assert value == 2

    def test_validate_cubic_3ec(self):
        validate_cubic_3ec(self.petersen)
        validate_cubic_3ec(load('theta.txt'))
        with pytest.raises(RejectedInputError) as e:
            validate_cubic_3ec(self.bridged)
        assert isinstance(e.value.certificate, CutSpec)
        assert e.value.certificate.weight == 2

        k4_minus_edge = Multigraph.from_edge_list(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        with pytest.raises(RejectedInputError) as e:
            validate_cubic_3ec(k4_minus_edge)
        assert e.value.certificate == (0, 2)

    def test_essential_3cut(self):
        cut = find_essential_3cut(self.prism)
        assert cut.weight == 3
        assert cut.side == frozenset([0, 1, 2])
        assert cut.crossing == (2, 4, 5)  # the rungs
        assert cut.is_essential(self.prism)

        for name in ['k4', 'k33', 'cube', 'petersen', 'moebius-kantor']:
            assert find_essential_3cut(generate(name)) is None, name

    def test_essential_3cut_rejects_2ec(self):
        with pytest.raises(RejectedInputError):
            find_essential_3cut(self.bridged)

    def test_essential_3cut_matches_exhaustive_search(self):
        graphs = [self.prism, self.petersen, generate('k33'), generate('cube')]
        graphs += [random_cubic_3ec(n, seed=seed) for n in range(6, 13, 2) for seed in range(6)]
        seen = set()
        for g in graphs:
            expected = _has_essential_3cut(g)
            cut = find_essential_3cut(g)
            assert (cut is not None) == expected, g
            if cut is not None:
                assert cut.weight == 3
                assert cut.is_essential(g)
                assert len(g.cut_edges(cut.side)) == 3
            seen.add(expected)
        assert seen == {True, False}


class TestContraction(unittest.TestCase):

    def setUp(self) -> None:
        self.k4 = load('k4.txt')

    def test_contract_keeps_edge_ids(self):
        h, hub = contract(self.k4, [0, 1])
        assert hub == 4
        assert h.n == 3
        assert h.edge_ids() == [1, 2, 3, 4, 5]
        assert h.degree(hub) == 4
        assert set(h.endpoints(1)) == {hub, 2}
        # the input graph is untouched
        assert self.k4.m == 6

    def test_contract_single_vertex(self):
        h, hub = contract(self.k4, [2])
        assert hub == 2
        assert h == self.k4

    def test_contract_with_hub(self):
        h, hub = contract(self.k4, [1, 2, 3], hub=10)
        assert hub == 10
        assert h.edges_between(0, 10) == [0, 1, 2]

    def test_contract_rejects(self):
        with pytest.raises(RejectedInputError):
            contract(self.k4, [])
        with pytest.raises(RejectedInputError):
            contract(self.k4, [0, 8])

    def test_suppress_degree2(self):
        g = Multigraph.from_edge_list(5, [(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        h = suppress_degree2(g)
        assert h.n == 4
        assert h.m == 6
        assert h.is_cubic()
        assert edge_connectivity(h) == 3


if __name__ == '__main__':
    unittest.main()
