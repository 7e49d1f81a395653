# -*- coding: utf-8 -*-

"""
Reversible transformation records and the ledger that stacks them.
"""

import logging
from dataclasses import dataclass, field

from cubic_tsp.exceptions import SolverError
from cubic_tsp.multigraph import Multigraph, contract

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SuperVertexRecord():
    """
    A 5-cycle of original vertices contracted into the super-vertex sv.

    Attributes
    ----------
    sv : int
        Id of the super-vertex.
    cycle : tuple
        The cycle vertices v1..v5 in cycle order.
    cycle_edges : tuple
        cycle_edges[i] joins cycle[i] and cycle[i+1] (cyclically).
    port_map : dict
        EdgeId of every edge of sv -> the cycle vertex it was attached to.
    internal_ends : dict
        EdgeId -> endpoints of every edge dropped by the contraction (cycle edges and chords).
    """
    sv: int
    cycle: tuple
    cycle_edges: tuple
    port_map: dict
    internal_ends: dict

    @property
    def chords(self) -> list:
        return sorted(set(self.internal_ends) - set(self.cycle_edges))

    def undo(self, g):
        """Put the cycle back in place of sv (in place)."""
        far = {eid: g.other_end(eid, self.sv) for eid in g.incident(self.sv)}
        if set(far) != set(self.port_map):
            raise SolverError("Super-vertex {} has edges {}, expected {}".format(
                self.sv, sorted(far), sorted(self.port_map)))
        g.remove_vertex(self.sv)
        for v in self.cycle:
            g.add_vertex(v)
        for eid in sorted(self.internal_ends):
            g.add_edge(*self.internal_ends[eid], eid=eid)
        for eid in sorted(far):
            g.add_edge(self.port_map[eid], far[eid], eid=eid)


@dataclass(frozen=True)
class SuperEdgeRecord():
    """
    Split-off at a super-vertex: the edges replaced = (x1 sv, x2 sv) became the super-edge se = x1 x2.
    """
    se: int
    replaced: tuple
    ends: tuple
    sv: int

    def undo(self, g):
        g.remove_edge(self.se)
        for eid, x in zip(self.replaced, self.ends):
            g.add_edge(x, self.sv, eid=eid)


@dataclass(frozen=True)
class FourCycleReduction():
    """
    A 4-cycle v1 v2 v3 v4 with pendant edges f_i at v_i, reduced by merging v1, v2 into a and
    v3, v4 into b. cycle_edges = (c12, c23, c34, c41); c23 stays as the edge ab, the other
    three are dropped. `state` names the way the lifted 2-factor crosses the cycle.
    """
    cycle: tuple
    cycle_edges: tuple
    pendants: tuple
    merged: tuple
    state: str
    host: Multigraph = field(compare=False, repr=False)  # the graph before the reduction

    @property
    def kept(self) -> int:
        return self.cycle_edges[1]

    def undo(self, g):
        a, b = self.merged
        hubs = (a, a, b, b)
        far = [g.other_end(f, hub) for f, hub in zip(self.pendants, hubs)]
        g.remove_vertex(a)
        g.remove_vertex(b)
        for v in self.cycle:
            g.add_vertex(v)
        for i, eid in enumerate(self.cycle_edges):
            g.add_edge(self.cycle[i], self.cycle[(i + 1) % 4], eid=eid)
        for v, f, x in zip(self.cycle, self.pendants, far):
            g.add_edge(v, x, eid=f)


class ProvenanceLedger():
    """
    Ordered stack of transformation records on top of a base graph.

    Parameters
    ----------
    base : Multigraph
        The graph before the first transformation.
    """

    def __init__(self, base):
        self.base = base
        self._records = []
        self._super_vertices = {}
        self._super_edges = {}

    def __len__(self):
        return len(self._records)

    def push(self, record):
        if isinstance(record, SuperVertexRecord):
            self._super_vertices[record.sv] = record
        elif isinstance(record, SuperEdgeRecord):
            self._super_edges[record.se] = record
        self._records.append(record)
        _logger.debug("Ledger entry {}: {}".format(len(self._records), record))

    @property
    def records(self) -> tuple:
        return tuple(self._records)

    def super_vertices(self) -> list:
        """Compression records in the order they were made."""
        return [r for r in self._records if isinstance(r, SuperVertexRecord)]

    def super_edges(self) -> list:
        return [r for r in self._records if isinstance(r, SuperEdgeRecord)]

    def record_of(self, sv) -> SuperVertexRecord:
        return self._super_vertices[sv]

    def is_super_vertex(self, v) -> bool:
        return v in self._super_vertices

    def is_super_edge(self, eid) -> bool:
        return eid in self._super_edges

    def touches(self, cycle) -> bool:
        """True if the cycle runs through a super-vertex or a super-edge (or anything not in the base graph)."""
        return any(not self.base.has_vertex(v) or self.is_super_vertex(v) for v in cycle.vertices) or \
               any(not self.base.has_edge(e) or self.is_super_edge(e) for e in cycle.edges)

    def expand_edge(self, eid) -> list:
        """The base graph edges that a (possibly nested) super-edge stands for, in path order."""
        leaves = []
        stack = [eid]
        while stack:
            e = stack.pop()
            rec = self._super_edges.get(e)
            if rec is None:
                leaves.append(e)
            else:
                stack.extend(reversed(rec.replaced))
        return leaves

    def internal_edges(self, rec) -> list:
        """Base graph edges with both endpoints on the cycle of rec."""
        cycle = set(rec.cycle)
        return sorted({e for v in rec.cycle for e in self.base.incident(v)
                       if set(self.base.endpoints(e)) <= cycle})

    def contracted_host(self):
        """
        The base graph with the cycle of every super-vertex contracted into it. Its edges are
        base edges, so it hosts the 2-factor of the compressed graph after super-edge replacement.
        """
        h = self.base.copy()
        for rec in self.super_vertices():
            h, _ = contract(h, rec.cycle, hub=rec.sv)
        return h

    def undo_graph(self, current):
        """Undo all transformations in reverse order; returns a restored copy of current."""
        h = current.copy()
        for rec in reversed(self._records):
            rec.undo(h)
        return h
