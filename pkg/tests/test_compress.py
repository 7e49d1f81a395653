# -*- coding: utf-8 -*-

import unittest
from collections import Counter

import pytest

from cubic_tsp import globals
from cubic_tsp.compress import compress_5cycle, compression_loop, mader_split
from cubic_tsp.exceptions import RejectedInputError
from cubic_tsp.generators import generate
from cubic_tsp.multigraph import Cycle, validate_cubic_3ec
from cubic_tsp.provenance import ProvenanceLedger, SuperEdgeRecord, SuperVertexRecord

from tests.graph_data import load

OUTER = Cycle((0, 1, 2, 3, 4), (0, 3, 5, 7, 1))  # outer 5-cycle of the Petersen graph


class TestCompress5Cycle(unittest.TestCase):

    def setUp(self) -> None:
        self.g = load('petersen.txt')
        self.ledger = ProvenanceLedger(self.g)

    def test_compress(self):
        h, rec = compress_5cycle(self.g, OUTER, self.ledger)
        assert h.n == 6
        assert h.degree(rec.sv) == 5
        assert rec.port_map == {2: 0, 4: 1, 6: 2, 8: 3, 9: 4}
        assert sorted(rec.internal_ends) == [0, 1, 3, 5, 7]
        assert rec.chords == []
        assert self.ledger.is_super_vertex(rec.sv)
        assert self.ledger.record_of(rec.sv) is rec

    def test_undo(self):
        h, _ = compress_5cycle(self.g, OUTER, self.ledger)
        assert self.ledger.undo_graph(h) == self.g

    def test_rejects(self):
        with pytest.raises(RejectedInputError):
            compress_5cycle(self.g, Cycle((0, 1, 2, 3), (0, 3, 5, 7)), self.ledger)
        with pytest.raises(RejectedInputError):
            # edge 1 joins 0 and 4, not 3 and 4
            compress_5cycle(self.g, Cycle((0, 1, 2, 3, 4), (0, 3, 5, 1, 7)), self.ledger)
        h, rec = compress_5cycle(self.g, OUTER, self.ledger)
        with pytest.raises(RejectedInputError):
            compress_5cycle(h, Cycle((rec.sv, 5, 7, 9, 6), (2, 10, 14, 13, 4)), self.ledger)


class TestMaderSplit(unittest.TestCase):

    def setUp(self) -> None:
        self.g = load('petersen.txt')
        self.ledger = ProvenanceLedger(self.g)
        self.h, self.rec = compress_5cycle(self.g, OUTER, self.ledger)

    def test_split(self):
        stats = Counter()
        h, se = mader_split(self.h, self.rec.sv, self.ledger, stats=stats)
        assert isinstance(se, SuperEdgeRecord)
        assert h.is_cubic()
        validate_cubic_3ec(h)
        assert h.degree(se.sv) == 3
        assert set(h.endpoints(se.se)) == set(se.ends)
        assert stats['mader_candidates'] >= 1
        assert self.ledger.expand_edge(se.se) == list(se.replaced)

    def test_undo_round_trip(self):
        h, _ = mader_split(self.h, self.rec.sv, self.ledger)
        assert self.ledger.undo_graph(h) == self.g
        assert [type(r) for r in self.ledger.records] == [SuperVertexRecord, SuperEdgeRecord]

    def test_rejects_wrong_degree(self):
        with pytest.raises(RejectedInputError):
            mader_split(self.g, 0, self.ledger)


class TestCompressionLoop(unittest.TestCase):

    def check(self, g, stats=None):
        x, ledger = compression_loop(g, stats=stats)
        assert x.is_two_factor()
        for c in x.cycles():
            assert len(c.edges) > globals.min_cycle_length or ledger.touches(c)
        validate_cubic_3ec(x.host)
        assert ledger.undo_graph(x.host) == g
        return x, ledger

    def test_petersen(self):
        stats = Counter()
        x, ledger = self.check(load('petersen.txt'), stats)
        assert stats['compressions'] >= 1
        assert stats['split_offs'] == stats['compressions']
        assert len(ledger.super_vertices()) == stats['compressions']

    def test_no_compression_needed(self):
        stats = Counter()
        x, ledger = self.check(generate('cube'), stats)
        assert stats['compressions'] == 0
        assert len(ledger) == 0

    def test_named_and_random(self):
        for name in ['prism', 'k33', 'random:n=24,seed=1', 'random:n=40,seed=2']:
            self.check(generate(name))

    def test_girth_six(self):
        stats = Counter()
        x, ledger = self.check(generate('moebius-kantor'), stats)
        assert stats['compressions'] == 0
        assert len(ledger) == 0
        assert x.sigma() >= 6


if __name__ == '__main__':
    unittest.main()
