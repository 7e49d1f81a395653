# -*- coding: utf-8 -*-

"""
Ground truth for small instances: the minimum connected spanning Eulerian sub-multigraph by
branch and bound, and a verifier for claimed solutions.
"""

import logging
from dataclasses import dataclass, field

from networkx.utils import UnionFind

from cubic_tsp import globals
from cubic_tsp.exceptions import OracleRefused, RejectedInputError
from cubic_tsp.subgraph import EvenSubgraph

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OptResult():
    """Optimum edge count and a subgraph attaining it."""
    opt: int
    witness: EvenSubgraph


def _need(d) -> int:
    """Endpoint incidences a vertex of degree d is missing at least."""
    return 2 if d == 0 else d % 2


class _EulerianSearch():
    """
    Branch and bound over the edges in ascending id order, multiplicities tried in the order 1, 2, 0.
    A vertex is checked for an even degree >= 2 when its last edge is decided; leaving an edge out
    is only allowed while the chosen and the undecided edges still connect all vertices.
    """

    def __init__(self, g):
        self.g = g
        self.edges = [e for e in g.edge_ids() if not g.is_loop(e)]
        self.ends = [g.endpoints(e) for e in self.edges]
        self.last = {}
        for i, (u, v) in enumerate(self.ends):
            self.last[u] = self.last[v] = i
        self.deg = {v: 0 for v in g.vertices()}
        self.mult = [0] * len(self.edges)
        self.need = 2 * g.n
        self.count = 0
        self.nodes = 0
        # a doubled spanning tree is always feasible
        self.best, self.best_mult = self._doubled_tree()

    def _doubled_tree(self):
        forest = UnionFind(self.g.vertices())
        mult = [0] * len(self.edges)
        for i, (u, v) in enumerate(self.ends):
            if forest[u] != forest[v]:
                forest.union(u, v)
                mult[i] = 2
        return sum(mult), mult

    def _connectable(self, i) -> bool:
        """Chosen edges before i together with all edges from i on connect every vertex."""
        forest = UnionFind(self.g.vertices())
        for j, (u, v) in enumerate(self.ends):
            if j >= i or self.mult[j]:
                forest.union(u, v)
        return len({forest[v] for v in self.g.vertices()}) == 1

    def _add(self, i, k):
        u, v = self.ends[i]
        for x in (u, v):
            self.need -= _need(self.deg[x])
            self.deg[x] += k
            self.need += _need(self.deg[x])
        self.mult[i] += k
        self.count += k

    def _closed_ok(self, i) -> bool:
        return all(self.deg[x] >= 2 and self.deg[x] % 2 == 0 for x in self.ends[i] if self.last[x] == i)

    def run(self):
        self._branch(0)
        return self.best, self.best_mult

    def _branch(self, i):
        self.nodes += 1
        if self.count + (self.need + 1) // 2 >= self.best:
            return
        if i == len(self.edges):
            self.best, self.best_mult = self.count, list(self.mult)
            return
        for k in (1, 2, 0):
            self._add(i, k)
            if self._closed_ok(i) and (k or self._connectable(i + 1)):
                self._branch(i + 1)
            self._add(i, -k)


def opt_eulerian(g, limit=globals.oracle_cap) -> OptResult:
    """
    Exact minimum number of edge copies of a connected spanning even sub-multigraph of g, with
    every multiplicity in {0, 1, 2}.

    Parameters
    ----------
    g : Multigraph
        Connected graph with at least 2 vertices.
    limit : int, optional
        Largest accepted vertex count.

    Returns
    -------
    result : OptResult
    """
    if g.n > limit:
        raise OracleRefused("Graph has {} vertices, the oracle accepts at most {}".format(g.n, limit))
    if g.n < 2:
        raise RejectedInputError("The oracle needs at least 2 vertices, got {}".format(g.n))
    if not g.is_connected():
        raise RejectedInputError("The oracle needs a connected graph")
    search = _EulerianSearch(g)
    opt, mult = search.run()
    _logger.debug("Oracle optimum {} on {} vertices after {} nodes".format(opt, g.n, search.nodes))
    witness = EvenSubgraph(g, {e: k for e, k in zip(search.edges, mult) if k})
    return OptResult(opt, witness)


@dataclass
class Verdict():
    """Named pass/fail checks, in report order."""
    checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    @property
    def failures(self) -> list:
        return [name for name, ok in self.checks.items() if not ok]

    def __str__(self):
        return ' '.join('{}={}'.format(name, 'PASS' if ok else 'FAIL') for name, ok in self.checks.items())


def verify(g, h) -> Verdict:
    """
    Check a claimed solution h over the EdgeIds of g.

    The checks are: all edges known to g, spanning, connected, all degrees even, multiplicities
    at most 2, at most floor(4n/3) edge copies and, for n >= 6, at most floor(4n/3) - 2.
    """
    checks = dict()
    checks['known-edges'] = all(g.has_edge(e) for e in h.mult)
    sub = EvenSubgraph(g, {e: k for e, k in h.mult.items() if g.has_edge(e)})
    checks['spanning'] = sub.is_spanning()
    checks['connected'] = sub.is_connected() and len(sub.vertices()) == g.n
    checks['all-even'] = sub.is_even()
    checks['multiplicity'] = sub.max_multiplicity() <= globals.max_multiplicity
    checks['four-thirds'] = h.edge_count <= 4 * g.n // 3
    if g.n >= globals.refined_bound_min_n:
        checks['refined-bound'] = h.edge_count <= 4 * g.n // 3 - 2
    return Verdict(checks)


def verify_tour(tour, h) -> bool:
    """The tour is a closed walk that uses every edge copy of h exactly once."""
    vertices, circuit = tour.vertices, tour.circuit
    if len(vertices) != len(circuit) + 1 or vertices[0] != vertices[-1]:
        return False
    used = {}
    for i, (eid, _) in enumerate(circuit):
        if not h.host.has_edge(eid) or set(h.host.endpoints(eid)) != {vertices[i], vertices[i + 1]}:
            return False
        used[eid] = used.get(eid, 0) + 1
    return used == h.mult
