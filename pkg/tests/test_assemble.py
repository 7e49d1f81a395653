# -*- coding: utf-8 -*-

import time
import unittest

import pytest

from cubic_tsp import globals
from cubic_tsp.assemble import euler_circuit, join_components, solve, tour_bound
from cubic_tsp.exceptions import RejectedInputError
from cubic_tsp.generators import generate
from cubic_tsp.graph_io import write_solution
from cubic_tsp.oracle import verify_tour
from cubic_tsp.subgraph import EvenSubgraph

from tests.graph_data import load


class TestTourBound(unittest.TestCase):

    def test_values(self):
        assert tour_bound(4) == 5
        assert tour_bound(6) == 6
        assert tour_bound(8) == 8
        assert tour_bound(10) == 11
        assert tour_bound(16) == 19
        assert tour_bound(200) == 264


class TestJoin(unittest.TestCase):

    def setUp(self) -> None:
        self.prism = load('prism.json')
        self.left = EvenSubgraph.from_edges(self.prism, [0, 1, 3])
        self.right = EvenSubgraph.from_edges(self.prism, [6, 7, 8])

    def test_join_two_triangles(self):
        h = join_components([self.left, self.right], self.prism)
        assert h.is_connected() and h.is_even() and h.is_spanning()
        assert h.edge_count == 8
        assert h.multiplicity(2) == 2  # the smallest rung

    def test_single_part(self):
        x = EvenSubgraph.from_edges(self.prism, [0, 3, 5, 8, 6, 2])
        assert join_components([x], self.prism) == x

    def test_rejects(self):
        with pytest.raises(RejectedInputError):
            join_components([self.left], self.prism)
        with pytest.raises(RejectedInputError):
            join_components([self.left, self.left, self.right], self.prism)


class TestEulerCircuit(unittest.TestCase):

    def test_circuit(self):
        prism = load('prism.json')
        h = join_components([EvenSubgraph.from_edges(prism, [0, 1, 3]),
                             EvenSubgraph.from_edges(prism, [6, 7, 8])], prism)
        tour = euler_circuit(h)
        assert tour.vertices[0] == tour.vertices[-1] == 0
        assert len(tour.circuit) == 8
        assert (2, 0) in tour.circuit and (2, 1) in tour.circuit
        assert verify_tour(tour, h)

    def test_rejects_odd(self):
        prism = load('prism.json')
        with pytest.raises(RejectedInputError):
            euler_circuit(EvenSubgraph.from_edges(prism, [0, 1]))


class TestSolve(unittest.TestCase):

    def check(self, g, strategy=globals.two_factor_strategy):
        tour, cert = solve(g, strategy=strategy)
        assert cert.passed, cert.verdict
        assert cert.tour_length == len(tour.circuit) == tour.subgraph.edge_count
        assert cert.tour_length <= cert.bound == tour_bound(g.n)
        assert cert.tour_length >= g.n
        assert set(tour.vertices) == set(g.vertices())
        assert list(cert.verdict) == [c for c in globals.verdict_checks if g.n >= 6 or c != 'refined-bound']
        return tour, cert

    def test_named_graphs(self):
        # optimum values: every closed walk needs n edges, Petersen is not Hamiltonian
        expected = {'k4': 4, 'prism': 6, 'k33': 6, 'cube': 8, 'petersen': 11}
        for strategy in globals.two_factor_strategies:
            for name, length in expected.items():
                _, cert = self.check(generate(name), strategy)
                assert cert.tour_length == length, (strategy, name)

    def test_moebius_kantor(self):
        _, cert = self.check(generate('moebius-kantor'))
        assert cert.tour_length <= 19

    def test_random(self):
        for n, seed in [(10, 1), (12, 2), (20, 3), (50, 4), (100, 5)]:
            self.check(generate('random:n={},seed={}'.format(n, seed)))

    def test_certificate(self):
        _, cert = self.check(load('petersen.txt'))
        d = cert.to_dict()
        assert list(d) == globals.certificate_fields
        assert d['n'] == 10
        assert d['bound'] == 11
        assert d['four_thirds_cap'] == 13
        assert d['held_karp'] == '10'
        assert d['compressions'] >= 1
        assert set(d['gadget_cases']) == set(globals.gadget_cases)
        assert sum(sum(c) for c in d['components']) == 10 - 4 * d['compressions']

    def test_k4_bypass(self):
        tour, cert = self.check(load('k4.txt'))
        assert cert.components == [[0, 0, 4]]
        assert cert.compressions == 0

    def test_rejects(self):
        with pytest.raises(RejectedInputError):
            solve(load('two_k4_bridged.txt'))
        with pytest.raises(RejectedInputError):
            solve(load('theta.txt'))
        with pytest.raises(RejectedInputError):
            solve(generate('k34'))

    def test_repeatable_output(self):
        for strategy in globals.two_factor_strategies:
            for name in ['petersen', 'random:n=40,seed=3']:
                g = generate(name)
                first, first_cert = solve(g, strategy=strategy)
                second, second_cert = solve(generate(name), strategy=strategy)
                assert first.circuit == second.circuit, (strategy, name)
                assert write_solution(first.subgraph, first_cert) == write_solution(second.subgraph, second_cert)


@pytest.mark.slow
class TestSolveTiming(unittest.TestCase):

    def test_two_hundred_vertices(self):
        for seed in [1, 2]:
            g = generate('random:n=200,seed={}'.format(seed))
            start = time.perf_counter()
            _, cert = solve(g)
            elapsed = time.perf_counter() - start
            assert cert.passed, cert.verdict
            assert elapsed < 2.0, 'seed {} took {:.2f}s'.format(seed, elapsed)


if __name__ == '__main__':
    unittest.main()
