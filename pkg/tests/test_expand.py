# -*- coding: utf-8 -*-

import unittest
from collections import Counter
from itertools import chain

import pytest

from cubic_tsp import globals
from cubic_tsp.compress import compression_loop
from cubic_tsp.exceptions import RejectedInputError
from cubic_tsp.expand import (component_views, expand_component, expand_deg2, expand_deg4,
                              replace_super_edges)
from cubic_tsp.generators import generate

from tests.graph_data import load


def views_of(g):
    x, ledger = compression_loop(g)
    xh = replace_super_edges(x, ledger)
    return xh, ledger, component_views(xh, ledger)


class TestReplaceSuperEdges(unittest.TestCase):

    def test_petersen(self):
        g = load('petersen.txt')
        xh, ledger, views = views_of(g)
        assert ledger.super_vertices()
        for e in xh.support():
            assert not ledger.is_super_edge(e)
            assert g.has_edge(e)
        for rec in ledger.super_vertices():
            assert xh.degree(rec.sv) in (2, 4)
        # every other vertex keeps its 2-factor degree
        for v in xh.host.vertices():
            if not ledger.is_super_vertex(v):
                assert xh.degree(v) == 2

    def test_views(self):
        g = load('petersen.txt')
        xh, ledger, views = views_of(g)
        assert sum(len(w.vertices) for w in views) == xh.host.n
        for w in views:
            k1, k2, k3 = w.counts
            assert k1 + k2 + k3 == len(w.vertices)
            assert len(w.pending) == k1 + k2


class TestExpansion(unittest.TestCase):

    def setUp(self) -> None:
        self.g = load('petersen.txt')
        self.xh, self.ledger, self.views = views_of(self.g)

    def test_single_step(self):
        for w in self.views:
            for rec in w.pending:
                degree = w.subgraph.degree(rec.sv)
                step = expand_deg2 if degree == 2 else expand_deg4
                after = step(w, rec)
                event = after.events[-1]
                assert event.sv == rec.sv
                assert event.case in globals.gadget_cases
                assert event.vertices_added == 4
                assert event.edges_added <= globals.gadget_budget[degree]
                assert event.even and event.connected
                assert rec not in after.pending

    def test_wrong_degree(self):
        for w in self.views:
            for rec in w.pending:
                wrong = expand_deg4 if w.subgraph.degree(rec.sv) == 2 else expand_deg2
                with pytest.raises(RejectedInputError):
                    wrong(w, rec)

    def test_expand_component(self):
        stats = Counter()
        for w in self.views:
            y = expand_component(w, stats=stats)
            assert y.host is self.g
            assert y.is_even() and y.is_connected()
            assert y.edge_count <= 4 * len(y.vertices()) // 3 - 2
        assert sum(stats[case] for case in globals.gadget_cases) == len(self.ledger.super_vertices())

    def test_random(self):
        for seed in range(3):
            g = generate('random:n=30,seed={}'.format(seed))
            _, _, views = views_of(g)
            covered = []
            for w in views:
                y = expand_component(w)
                assert y.is_even() and y.is_connected()
                assert y.edge_count <= 4 * len(y.vertices()) // 3 - 2
                covered.extend(y.vertices())
            assert sorted(covered) == g.vertices()

    def test_edge_copies_per_case(self):
        copies = {'deg2-adjacent': 4, 'deg2-distance2': 5, 'deg4-default': 3, 'deg4-cut': 4}
        graphs = chain((generate('random:n={},seed={}'.format(n, seed))
                        for n in range(10, 25, 2) for seed in range(40)), [self.g])
        seen = set()
        for g in graphs:
            _, _, views = views_of(g)
            for w in views:
                while w.pending:
                    rec = w.pending[0]
                    step = expand_deg2 if w.subgraph.degree(rec.sv) == 2 else expand_deg4
                    after = step(w, rec)
                    event = after.events[-1]
                    assert event.edges_added == copies[event.case], event
                    assert after.subgraph.edge_count - w.subgraph.edge_count == event.edges_added
                    assert event.even and event.connected
                    assert after.subgraph.is_even() and after.subgraph.is_connected()
                    seen.add(event.case)
                    w = after
            if seen == set(globals.gadget_cases):
                break
        assert seen == set(globals.gadget_cases)


if __name__ == '__main__':
    unittest.main()
