# -*- coding: utf-8 -*-

"""
Compression loop: 5-cycles of the current 2-factor are contracted into super-vertices, which are
split off back to degree 3, until every cycle of the 2-factor is long or runs through a
super-vertex or a super-edge.
"""

import logging
from collections import Counter
from itertools import combinations

from cubic_tsp import globals
from cubic_tsp.exceptions import RejectedInputError, SolverError
from cubic_tsp.multigraph import contract, edge_connectivity, min_cut_between, suppress_degree2
from cubic_tsp.provenance import ProvenanceLedger, SuperEdgeRecord, SuperVertexRecord
from cubic_tsp.twofactor import find_girth5_two_factor

_logger = logging.getLogger(__name__)


def compress_5cycle(g, cycle, ledger):
    """
    Contract a 5-cycle of original vertices and edges into a super-vertex.

    Parameters
    ----------
    g : Multigraph
        Current graph.
    cycle : Cycle
        5-cycle of the current 2-factor.
    ledger : ProvenanceLedger
        Receives the SuperVertexRecord.

    Returns
    -------
    h : Multigraph
        g with 4 vertices less; the super-vertex has degree 5 (3 if the cycle has a chord).
    rec : SuperVertexRecord
    """
    vertices, edges = tuple(cycle.vertices), tuple(cycle.edges)
    if len(vertices) != 5 or len(set(vertices)) != 5 or len(set(edges)) != 5:
        raise RejectedInputError("Not a 5-cycle: vertices {}, edges {}".format(vertices, edges))
    for i, eid in enumerate(edges):
        if set(g.endpoints(eid)) != {vertices[i], vertices[(i + 1) % 5]}:
            raise RejectedInputError("Edge {} does not join {} and {}".format(
                eid, vertices[i], vertices[(i + 1) % 5]))
    if ledger.touches(cycle):
        raise RejectedInputError("Cycle {} contains a super-vertex or a super-edge".format(vertices))

    side = set(vertices)
    port_map, internal_ends = {}, {}
    for v in vertices:
        for eid in g.incident(v):
            if g.other_end(eid, v) in side:
                internal_ends[eid] = g.endpoints(eid)
            else:
                port_map[eid] = v
    h, sv = contract(g, side)
    rec = SuperVertexRecord(sv, vertices, edges, port_map, internal_ends)
    ledger.push(rec)
    _logger.debug("Compressed cycle {} into super-vertex {} of degree {}".format(vertices, sv, h.degree(sv)))
    return h, rec


def _keeps_3ec(h, sv, x1) -> bool:
    """Whether the split-off graph h is homeomorphic to a 3-edge-connected graph."""
    reduced = suppress_degree2(h)
    if reduced.n != h.n:
        return reduced.n >= 2 and edge_connectivity(reduced) >= 3
    # only cuts between sv and the new edge x1 x2 can have lost weight
    value, _ = min_cut_between(h, [sv], x1, cutoff=3)
    return value >= 3


def mader_split(g, sv, ledger, stats=None):
    """
    Split off two edges x1 sv, x2 sv into a super-edge x1 x2 so that the result stays
    3-edge-connected. Candidate pairs are tried in ascending EdgeId order; pairs ending in
    the same vertex would create a loop and are skipped.

    Returns
    -------
    h : Multigraph
        Cubic, 3-edge-connected graph.
    rec : SuperEdgeRecord
    """
    if g.degree(sv) != 5:
        raise RejectedInputError("Super-vertex {} has degree {}, not 5".format(sv, g.degree(sv)))
    stats = stats if stats is not None else Counter()
    for e1, e2 in combinations(g.incident(sv), 2):
        x1, x2 = g.other_end(e1, sv), g.other_end(e2, sv)
        if x1 == x2:
            continue
        stats['mader_candidates'] += 1
        h = g.copy()
        h.remove_edge(e1)
        h.remove_edge(e2)
        se = h.add_edge(x1, x2)
        if _keeps_3ec(h, sv, x1):
            rec = SuperEdgeRecord(se, (e1, e2), (x1, x2), sv)
            ledger.push(rec)
            _logger.debug("Split off edges {} and {} at {} into super-edge {}".format(e1, e2, sv, se))
            return h, rec
    raise SolverError("No split-off at super-vertex {} keeps the graph 3-edge-connected".format(sv))


def _next_plain_5cycle(x, ledger):
    """The 5-cycle of x without super elements whose smallest vertex is smallest."""
    plain = [c for c in x.cycles() if len(c.edges) == globals.min_cycle_length and not ledger.touches(c)]
    return min(plain, key=lambda c: min(c.vertices), default=None)


def compression_loop(g, strategy=globals.two_factor_strategy, stats=None):
    """
    Compress plain 5-cycles of the 2-factor until each of its cycles has length >= 6 or contains
    a super-vertex or a super-edge.

    Parameters
    ----------
    g : Multigraph
        Cubic, 3-edge-connected graph.
    strategy : str, optional
        2-factor strategy.
    stats : collections.Counter, optional
        Receives 'compressions', 'split_offs' and the strategy counters.

    Returns
    -------
    x : EvenSubgraph
        2-factor of the final compressed graph (x.host).
    ledger : ProvenanceLedger
        Every compression and split-off, on top of g.
    """
    stats = stats if stats is not None else Counter()
    ledger = ProvenanceLedger(g)
    current = g
    x = find_girth5_two_factor(current, strategy=strategy, stats=stats)
    while True:
        cycle = _next_plain_5cycle(x, ledger)
        if cycle is None:
            break
        current, rec = compress_5cycle(current, cycle, ledger)
        stats['compressions'] += 1
        if current.degree(rec.sv) == 5:
            current, _ = mader_split(current, rec.sv, ledger, stats=stats)
            stats['split_offs'] += 1
        x = find_girth5_two_factor(current, strategy=strategy, stats=stats, validate=False)
    _logger.debug("Compression loop done after {} compressions, {} vertices left".format(
        stats['compressions'], current.n))
    return x, ledger
