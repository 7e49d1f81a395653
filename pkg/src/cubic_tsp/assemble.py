# -*- coding: utf-8 -*-

"""
Join the expanded components into one connected spanning Eulerian sub-multigraph, extract an
Euler circuit and certify the edge count.
"""

import logging
from collections import Counter, namedtuple
from dataclasses import dataclass, field

import networkx as nx
from networkx.utils import UnionFind

from cubic_tsp import globals
from cubic_tsp.compress import compression_loop
from cubic_tsp.exceptions import RejectedInputError
from cubic_tsp.expand import component_views, expand_component, replace_super_edges
from cubic_tsp.multigraph import held_karp_value, validate_cubic_3ec
from cubic_tsp.oracle import verify, verify_tour
from cubic_tsp.subgraph import EvenSubgraph
from cubic_tsp.twofactor import find_girth5_two_factor

_logger = logging.getLogger(__name__)

# circuit: (EdgeId, copy index) per step; vertices: the walk, first == last
Tour = namedtuple('Tour', ['circuit', 'vertices', 'subgraph'])


def tour_bound(n) -> int:
    """floor(4n/3) - 2 from 6 vertices on, floor(4n/3) below."""
    bound = 4 * n // 3
    return bound - 2 if n >= globals.refined_bound_min_n else bound


@dataclass
class Certificate():
    """Summary of one solve, serialised in the order of globals.certificate_fields."""
    n: int
    tour_length: int
    bound: int
    four_thirds_cap: int
    held_karp: str
    components: list = field(default_factory=list)
    compressions: int = 0
    split_offs: int = 0
    reductions: int = 0
    gadget_cases: dict = field(default_factory=dict)
    verdict: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.verdict.values())

    def to_dict(self) -> dict:
        return {name: getattr(self, name) for name in globals.certificate_fields}


def join_components(parts, g) -> EvenSubgraph:
    """
    Connect vertex-disjoint connected even subgraphs that together span g. A spanning tree of
    the parts is grown over the edges of g in ascending id order; every tree edge is added twice.
    """
    part_of = {}
    for i, part in enumerate(parts):
        for v in part.vertices():
            if v in part_of:
                raise RejectedInputError("Vertex {} belongs to more than one part".format(v))
            part_of[v] = i
    missing = sorted(set(g.vertices()) - set(part_of))
    if missing:
        raise RejectedInputError("Parts do not span the graph, vertices {} are missing".format(missing))

    mult = {}
    for part in parts:
        mult.update(part.mult)
    forest = UnionFind(range(len(parts)))
    for eid in g.edge_ids():
        u, v = g.endpoints(eid)
        pu, pv = part_of[u], part_of[v]
        if forest[pu] != forest[pv]:
            forest.union(pu, pv)
            mult[eid] = 2
    if len({forest[i] for i in range(len(parts))}) > 1:
        raise RejectedInputError("The parts cannot be connected, the graph is disconnected")
    return EvenSubgraph(g, mult)


def euler_circuit(h) -> Tour:
    """Closed walk through every edge copy of h, starting at its smallest vertex."""
    if not (h.is_spanning() and h.is_even() and h.is_connected()):
        raise RejectedInputError("Subgraph is not a connected spanning even subgraph")
    nxg = h.to_networkx(copies=True)
    start = h.vertices()[0]
    walk = list(nx.eulerian_circuit(nxg, source=start, keys=True))
    vertices = (start,) + tuple(v for _, v, _ in walk)
    return Tour(tuple(key for _, _, key in walk), vertices, h)


def solve(g, strategy=globals.two_factor_strategy):
    """
    Connected spanning Eulerian sub-multigraph of a cubic 3-edge-connected graph with at most
    floor(4n/3) - 2 edges (n >= 6), and its Euler circuit.

    Parameters
    ----------
    g : Multigraph
        Cubic, 3-edge-connected graph with at least 4 vertices.
    strategy : str, optional
        2-factor strategy, 'reduction' or 'search'.

    Returns
    -------
    tour : Tour
    certificate : Certificate
    """
    validate_cubic_3ec(g)
    if g.n < 4:
        raise RejectedInputError("Graph has {} vertices, at least 4 are needed".format(g.n))
    stats = Counter()
    if g.n == 4:
        # K4: its Hamiltonian cycles are the optimum
        x = find_girth5_two_factor(g, strategy=strategy, stats=stats, validate=False)
        parts, counts = [x], [(0, 0, 4)]
    else:
        x, ledger = compression_loop(g, strategy=strategy, stats=stats)
        views = component_views(replace_super_edges(x, ledger), ledger)
        parts = [expand_component(w, stats=stats) for w in views]
        counts = [w.counts for w in views]

    h = join_components(parts, g)
    tour = euler_circuit(h)
    verdict = verify(g, h)
    verdict.checks['tour'] = verify_tour(tour, h)

    cert = Certificate(n=g.n, tour_length=len(tour.circuit), bound=tour_bound(g.n),
                       four_thirds_cap=4 * g.n // 3, held_karp=str(held_karp_value(g)),
                       components=[list(c) for c in counts],
                       compressions=stats['compressions'], split_offs=stats['split_offs'],
                       reductions=stats['reductions'],
                       gadget_cases={case: stats[case] for case in globals.gadget_cases},
                       verdict=dict(verdict.checks))
    if cert.passed:
        _logger.info("Solved n={}: tour {} <= {}".format(g.n, cert.tour_length, cert.bound))
    else:
        _logger.error("Solution on n={} failed checks {}".format(g.n, verdict.failures))
    return tour, cert
