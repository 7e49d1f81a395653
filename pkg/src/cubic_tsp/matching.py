# -*- coding: utf-8 -*-

"""
Maximum-cardinality matchings with forced and forbidden edges, and the 2-factors
they leave behind in cubic graphs.
"""

import logging
from dataclasses import dataclass, field

import networkx as nx

from cubic_tsp.exceptions import RejectedInputError
from cubic_tsp.multigraph import Multigraph
from cubic_tsp.subgraph import EvenSubgraph

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Matching():
    """Set of pairwise non-adjacent EdgeIds of host."""
    edges: frozenset
    host: Multigraph = field(compare=False, repr=False)

    def __len__(self):
        return len(self.edges)

    def covered(self) -> set:
        return {v for eid in self.edges for v in self.host.endpoints(eid)}

    @property
    def perfect(self) -> bool:
        """Every vertex of the host is covered."""
        return 2 * len(self.edges) == self.host.n and len(self.covered()) == self.host.n


def _forced_endpoints(g, forced, forbidden) -> set:
    if forced & forbidden:
        raise RejectedInputError("Edges {} are both forced and forbidden".format(sorted(forced & forbidden)))
    blocked = set()
    for eid in sorted(forced):
        u, v = g.endpoints(eid)
        if u == v:
            raise RejectedInputError("Forced edge {} is a self-loop".format(eid))
        if u in blocked or v in blocked:
            raise RejectedInputError("Forced edge {} shares an endpoint with another forced edge".format(eid))
        blocked.update((u, v))
    return blocked


def max_matching(g, forced=(), forbidden=()) -> Matching:
    """
    Maximum matching of g that contains every forced and no forbidden edge.

    The endpoints of the forced edges are removed, the rest is matched with the blossom
    algorithm and the forced edges are added back. Between a pair of vertices the parallel
    edge with the smallest id is the one that can enter the matching.

    Parameters
    ----------
    g : Multigraph
    forced : iterable of EdgeIds, optional
        Pairwise non-adjacent edges that must be matched.
    forbidden : iterable of EdgeIds, optional
        Edges that must not be matched.

    Returns
    -------
    matching : Matching
        Check `perfect` to see whether every vertex is covered.
    """
    forced, forbidden = set(forced), set(forbidden)
    blocked = _forced_endpoints(g, forced, forbidden)

    residual = nx.Graph()
    residual.add_nodes_from(v for v in g.vertices() if v not in blocked)
    for eid in g.edge_ids():
        if eid in forced or eid in forbidden:
            continue
        u, v = g.endpoints(eid)
        if u == v or u in blocked or v in blocked or residual.has_edge(u, v):
            continue
        residual.add_edge(u, v, eid=eid)

    pairs = nx.max_weight_matching(residual, maxcardinality=True)
    edges = set(forced) | {residual[u][v]['eid'] for u, v in pairs}
    return Matching(frozenset(edges), g)


def iter_perfect_matchings(g, forced=(), forbidden=()):
    """
    Generate every perfect matching that contains the forced and avoids the forbidden edges.
    Branches on the edges at the smallest uncovered vertex in ascending id order.

    Yields
    ------
    edges : frozenset of EdgeIds
    """
    forced, forbidden = set(forced), set(forbidden)
    covered = _forced_endpoints(g, forced, forbidden)
    order = g.vertices()

    def _extend(chosen, covered):
        free = [v for v in order if v not in covered]
        if not free:
            yield frozenset(chosen)
            return
        v = free[0]
        for eid in g.incident(v):
            if eid in forbidden or g.is_loop(eid):
                continue
            other = g.other_end(eid, v)
            if other in covered:
                continue
            yield from _extend(chosen | {eid}, covered | {v, other})

    yield from _extend(frozenset(forced), frozenset(covered))


def two_factor_from_matching(g, m) -> EvenSubgraph:
    """
    The complement of a perfect matching of a cubic graph, a 2-factor.

    Parameters
    ----------
    g : Multigraph
        Cubic graph.
    m : Matching
        Perfect matching of g.
    """
    if not g.is_cubic():
        raise RejectedInputError("A matching complement is a 2-factor only in cubic graphs")
    if not m.perfect:
        raise RejectedInputError("Matching of size {} is not perfect on {} vertices".format(len(m), g.n))
    return EvenSubgraph(g, {eid: 1 for eid in g.edge_ids() if eid not in m.edges})
