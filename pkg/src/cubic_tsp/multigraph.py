# -*- coding: utf-8 -*-

"""
Multigraph with stable edge identities, plus the connectivity and cut queries used by the solver.
"""

import logging
from collections import namedtuple
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx
from networkx.algorithms.flow import build_residual_network, edmonds_karp

from cubic_tsp import globals
from cubic_tsp.exceptions import RejectedInputError

_logger = logging.getLogger(__name__)

# vertices[i] and vertices[i+1] (cyclically) are joined by edges[i]
Cycle = namedtuple('Cycle', ['vertices', 'edges'])

_SOURCE = 'source'  # super-source of the flow networks


class IdPool():
    """
    Hands out vertex and edge ids. Graphs derived from one another share their pool,
    so that an id is never reused within one solver run.
    """

    def __init__(self, next_vertex=0, next_edge=0):
        self._next_vertex = next_vertex
        self._next_edge = next_edge

    def vertex(self) -> int:
        v = self._next_vertex
        self._next_vertex += 1
        return v

    def edge(self) -> int:
        e = self._next_edge
        self._next_edge += 1
        return e

    def reserve(self, vertex=None, edge=None):
        """Make sure that the given ids are never handed out."""
        if vertex is not None:
            self._next_vertex = max(self._next_vertex, vertex + 1)
        if edge is not None:
            self._next_edge = max(self._next_edge, edge + 1)


class Multigraph():
    """
    Undirected multigraph. Parallel edges and self-loops are allowed, every edge has an
    integer id (EdgeId) that survives all transformations that keep the edge.

    Parameters
    ----------
    pool : IdPool, optional
        Id source shared with related graphs. A new pool is created if not given.
    """

    def __init__(self, pool=None):
        self.pool = pool if pool is not None else IdPool()
        self._adj = {}  # vertex -> {eid: other endpoint}
        self._ends = {}  # eid -> (u, v)

    @classmethod
    def from_edge_list(cls, n, pairs):
        """
        Graph on the vertices 0..n-1 with EdgeIds assigned in the order of pairs.

        Parameters
        ----------
        n : int
            Number of vertices.
        pairs : iterable of (int, int)
            Endpoints of the edges; repeated pairs become parallel edges.
        """
        g = cls()
        for v in range(n):
            g.add_vertex(v)
        for u, v in pairs:
            g.add_edge(u, v)
        return g

    @classmethod
    def from_networkx(cls, nxg):
        """Relabel the nodes of a networkx graph to 0..n-1 (sorted order) and copy its edges in sorted order."""
        index = {node: i for i, node in enumerate(sorted(nxg.nodes()))}
        pairs = sorted(tuple(sorted((index[u], index[v]))) for u, v in nxg.edges())
        return cls.from_edge_list(len(index), pairs)

    def __repr__(self):
        return '{}(n={}, m={})'.format(type(self).__name__, self.n, self.m)

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return set(self._adj) == set(other._adj) and \
               {e: frozenset(ends) for e, ends in self._ends.items()} == \
               {e: frozenset(ends) for e, ends in other._ends.items()}

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return len(self._ends)

    def vertices(self) -> list:
        return sorted(self._adj)

    def edge_ids(self) -> list:
        return sorted(self._ends)

    def has_vertex(self, v) -> bool:
        return v in self._adj

    def has_edge(self, eid) -> bool:
        return eid in self._ends

    def add_vertex(self, v=None) -> int:
        """Add the vertex v, or a vertex with a fresh id. Returns the id."""
        if v is None:
            v = self.pool.vertex()
        elif v in self._adj:
            raise RejectedInputError("Vertex {} already exists".format(v))
        else:
            self.pool.reserve(vertex=v)
        self._adj[v] = {}
        return v

    def add_edge(self, u, v, eid=None) -> int:
        """Add the edge uv, with a fresh id unless eid is given. Returns the id."""
        for x in (u, v):
            if x not in self._adj:
                raise RejectedInputError("Vertex {} does not exist".format(x))
        if eid is None:
            eid = self.pool.edge()
        elif eid in self._ends:
            raise RejectedInputError("Edge {} already exists".format(eid))
        else:
            self.pool.reserve(edge=eid)
        self._ends[eid] = (u, v)
        self._adj[u][eid] = v
        self._adj[v][eid] = u
        return eid

    def remove_edge(self, eid) -> tuple:
        """Remove an edge and return its endpoints."""
        u, v = self.endpoints(eid)
        del self._ends[eid]
        del self._adj[u][eid]
        self._adj[v].pop(eid, None)
        return u, v

    def remove_vertex(self, v):
        """Remove a vertex together with its incident edges."""
        for eid in self.incident(v):
            self.remove_edge(eid)
        del self._adj[v]

    def endpoints(self, eid) -> tuple:
        try:
            return self._ends[eid]
        except KeyError:
            raise RejectedInputError("Edge {} does not exist".format(eid))

    def other_end(self, eid, v):
        u, w = self.endpoints(eid)
        if v == u:
            return w
        if v == w:
            return u
        raise RejectedInputError("Edge {} is not incident to vertex {}".format(eid, v))

    def incident(self, v) -> list:
        """Ids of the edges at v in ascending order, a self-loop listed once."""
        try:
            return sorted(self._adj[v])
        except KeyError:
            raise RejectedInputError("Vertex {} does not exist".format(v))

    def neighbors(self, v) -> list:
        """Other endpoints of the incident edges of v, in edge order (with repetitions)."""
        return [self._adj[v][eid] for eid in self.incident(v)]

    def degree(self, v) -> int:
        """Number of edge endpoints at v, a self-loop counts twice."""
        return sum(2 if other == v else 1 for other in self._adj[v].values())

    def is_loop(self, eid) -> bool:
        u, v = self.endpoints(eid)
        return u == v

    def is_cubic(self) -> bool:
        return self.n > 0 and all(self.degree(v) == 3 for v in self._adj)

    def copy(self):
        """Copy that shares the id pool with this graph."""
        h = type(self)(pool=self.pool)
        h._adj = {v: dict(inc) for v, inc in self._adj.items()}
        h._ends = dict(self._ends)
        return h

    def cut_edges(self, side) -> list:
        """Ids of the edges with exactly one endpoint in side."""
        side = set(side)
        return sorted(eid for eid, (u, v) in self._ends.items() if (u in side) != (v in side))

    def edges_between(self, u, v) -> list:
        return sorted(eid for eid, other in self._adj[u].items() if other == v)

    def to_networkx(self):
        """nx.MultiGraph with the same vertices, edges keyed by EdgeId."""
        nxg = nx.MultiGraph()
        nxg.add_nodes_from(self.vertices())
        for eid in self.edge_ids():
            u, v = self._ends[eid]
            nxg.add_edge(u, v, key=eid)
        return nxg

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        return nx.is_connected(self.to_networkx())

    def girth(self):
        """Length of a shortest cycle (loops have length 1, parallel pairs length 2); inf if acyclic."""
        if any(u == v for u, v in self._ends.values()):
            return 1
        simple = nx.Graph()
        simple.add_nodes_from(self._adj)
        for u, v in self._ends.values():
            if simple.has_edge(u, v):
                return 2
            simple.add_edge(u, v)
        return nx.girth(simple)

    def short_cycles(self, length) -> list:
        """
        All cycles with exactly `length` (>= 3) distinct vertices.

        Returns
        -------
        cycles : list of Cycle
            Each cycle starts at its smallest vertex; sorted by their edge ids.
        """
        if length < 3:
            raise RejectedInputError("Cycles are searched from length 3 on, not {}".format(length))
        found = {}
        for start in self.vertices():
            stack = [([start], [])]
            while stack:
                path, edges = stack.pop()
                last = path[-1]
                if len(path) == length:
                    for eid in self.incident(last):
                        if self._adj[last][eid] == start:
                            cyc = Cycle(tuple(path), tuple(edges + [eid]))
                            found.setdefault(frozenset(cyc.edges), cyc)
                    continue
                for eid in reversed(self.incident(last)):
                    other = self._adj[last][eid]
                    if other > start and other not in path:
                        stack.append((path + [other], edges + [eid]))
        return sorted(found.values(), key=lambda c: sorted(c.edges))


@dataclass(frozen=True)
class CutSpec():
    """Edge cut (S, V-S): the side S and the crossing EdgeIds."""
    side: frozenset
    crossing: tuple

    @classmethod
    def of(cls, g, side):
        side = frozenset(side)
        return cls(side, tuple(g.cut_edges(side)))

    @property
    def weight(self) -> int:
        return len(self.crossing)

    def other_side(self, g) -> frozenset:
        return frozenset(g.vertices()) - self.side

    def is_essential(self, g) -> bool:
        """Both sides have at least 2 vertices (for cubic graphs: both sides induce an edge)."""
        return len(self.side) >= 2 and g.n - len(self.side) >= 2


def _flow_network(g, sources):
    """Unit-capacity flow network of g; several sources are joined to a super-source."""
    network = nx.DiGraph()
    network.add_nodes_from(g.vertices())
    for eid in g.edge_ids():
        u, v = g.endpoints(eid)
        if u == v:
            continue
        for a, b in ((u, v), (v, u)):
            if network.has_edge(a, b):
                network[a][b]['capacity'] += 1
            else:
                network.add_edge(a, b, capacity=1)
    if len(sources) > 1:
        for s in sources:
            network.add_edge(_SOURCE, s, capacity=float('inf'))
    return network


class _FlowSweep():
    """Max-flow queries from a fixed source set to varying sinks, reusing one residual network."""

    def __init__(self, g, sources):
        sources = list(sources)
        self.network = _flow_network(g, sources)
        self.source = sources[0] if len(sources) == 1 else _SOURCE
        self.residual = build_residual_network(self.network, 'capacity')

    def max_flow(self, sink, cutoff=None) -> int:
        """Flow value towards sink; with a cutoff the search stops once the value reaches it."""
        kwargs = {} if cutoff is None else {'cutoff': cutoff}
        residual = edmonds_karp(self.network, self.source, sink, residual=self.residual, **kwargs)
        return int(residual.graph['flow_value'])

    def source_side(self) -> frozenset:
        """Vertices reachable from the source in the residual network of the last query."""
        succ = self.residual.succ
        side = {self.source}
        stack = [self.source]
        while stack:
            u = stack.pop()
            for v, attr in succ[u].items():
                if v not in side and attr['flow'] < attr['capacity']:
                    side.add(v)
                    stack.append(v)
        side.discard(_SOURCE)
        return frozenset(side)


def min_cut_between(g, sources, sink, cutoff=None):
    """
    Minimum edge cut separating the vertex set `sources` from `sink`.

    Parameters
    ----------
    g : Multigraph
    sources : iterable
        Vertices on the source side.
    sink : vertex
    cutoff : int, optional
        Stop once this flow value is reached; the returned side is only a minimum cut
        if the value stays below the cutoff.

    Returns
    -------
    value : int
    cut : CutSpec
    """
    sources = list(sources)
    if sink in sources:
        raise RejectedInputError("Sink {} is also a source".format(sink))
    sweep = _FlowSweep(g, sources)
    value = sweep.max_flow(sink, cutoff=cutoff)
    return value, CutSpec.of(g, sweep.source_side())


def _cut_degree(g, v) -> int:
    return sum(1 for eid in g.incident(v) if not g.is_loop(eid))


def global_min_cut(g, limit=None):
    """
    Global minimum edge cut by max-flows from one root to every other vertex.

    Parameters
    ----------
    g : Multigraph
        Graph with at least 2 vertices.
    limit : int, optional
        Stop as soon as a cut lighter than limit is known.

    Returns
    -------
    value : int
        Weight of the cut, counting parallel edges; 0 if g is disconnected.
    cut : CutSpec
    """
    if g.n < 2:
        raise RejectedInputError("Edge connectivity needs at least 2 vertices, got {}".format(g.n))
    components = list(nx.connected_components(g.to_networkx()))
    if len(components) > 1:
        return 0, CutSpec.of(g, min(components, key=min))

    root = min(g.vertices(), key=lambda v: (_cut_degree(g, v), v))
    best = _cut_degree(g, root)
    best_side = frozenset([root])
    sweep = _FlowSweep(g, [root])
    for t in g.vertices():
        if t == root:
            continue
        if limit is not None and best < limit:
            break
        value = sweep.max_flow(t, cutoff=best)
        if value < best:
            best, best_side = value, sweep.source_side()
    return best, CutSpec.of(g, best_side)


def edge_connectivity(g) -> int:
    """Global min-cut weight counting multiplicities; 0 for disconnected graphs."""
    return global_min_cut(g)[0]


def validate_cubic_3ec(g):
    """
    Raise a RejectedInputError unless g is cubic and 3-edge-connected.
    The error carries the violated certificate: (vertex, degree) or a CutSpec of weight < 3.
    """
    if g.n < 2:
        raise RejectedInputError("Graph has {} vertices, a cubic 3-edge-connected graph needs "
                                 "at least 2".format(g.n))
    for v in g.vertices():
        d = g.degree(v)
        if d != 3:
            raise RejectedInputError("Vertex {} has degree {}, not 3".format(v, d), certificate=(v, d))
    value, cut = global_min_cut(g, limit=3)
    if value < 3:
        raise RejectedInputError("Graph is not 3-edge-connected: cut of weight {} crossing edges {}".format(
            value, list(cut.crossing)), certificate=cut)


def find_essential_3cut(g, validate=True):
    """
    Search a 3-edge cut with at least 2 vertices on either side.

    Every such cut has a side that contains the smallest vertex r together with one of its
    neighbours r'. For each r' the flow from {r, r'} to every other vertex t is exactly 3;
    the minimal source side of that flow is returned as soon as it leaves at least 2 vertices
    on the other side.

    Parameters
    ----------
    g : Multigraph
        Cubic, 3-edge-connected graph.
    validate : bool, optional (default: True)
        Check the precondition first. Callers that preserve it may skip the check.

    Returns
    -------
    cut : CutSpec or None
    """
    if validate:
        validate_cubic_3ec(g)
    if g.n < 4:
        return None
    r = g.vertices()[0]
    for nb in sorted(set(g.neighbors(r))):
        sweep = _FlowSweep(g, [r, nb])
        for t in g.vertices():
            if t in (r, nb):
                continue
            value = sweep.max_flow(t, cutoff=globals.essential_cut_cutoff)
            if value < 3:
                cut = CutSpec.of(g, sweep.source_side())
                raise RejectedInputError("Graph is not 3-edge-connected: cut of weight {}".format(value),
                                         certificate=cut)
            if value == 3:
                side = sweep.source_side()
                if g.n - len(side) >= 2:
                    cut = CutSpec.of(g, side)
                    _logger.debug("Essential 3-cut {} with sides of size {} and {}".format(
                        list(cut.crossing), len(side), g.n - len(side)))
                    return cut
    return None


def contract(g, s, hub=None):
    """
    Merge the vertex set s into one new vertex; edges inside s are dropped, parallel edges
    are kept and every surviving edge keeps its id.

    Parameters
    ----------
    g : Multigraph
    s : iterable
        Non-empty subset of the vertices of g.
    hub : int, optional
        Id of the merged vertex. A fresh id is used if not given.

    Returns
    -------
    h : Multigraph
    hub : int
    """
    s = set(s)
    if not s:
        raise RejectedInputError("Cannot contract an empty vertex set")
    missing = sorted(v for v in s if not g.has_vertex(v))
    if missing:
        raise RejectedInputError("Vertices {} are not in the graph".format(missing))
    if len(s) == 1 and hub is None:
        return g.copy(), next(iter(s))

    h = g.copy()
    inner = {}
    for v in sorted(s):
        for eid in h.incident(v):
            inner[eid] = h.remove_edge(eid)
        h.remove_vertex(v)
    hub = h.add_vertex(hub)
    for eid in sorted(inner):
        u, v = inner[eid]
        if u in s and v in s:
            continue
        h.add_edge(hub, v if u in s else u, eid=eid)
    return h, hub


def suppress_degree2(g):
    """
    Repeatedly replace a vertex of degree 2 and its two edges by a single new edge
    (possibly a loop or a parallel edge), smallest vertex first.
    """
    h = g.copy()
    while True:
        candidates = [v for v in h.vertices() if h.degree(v) == 2 and len(h.incident(v)) == 2]
        if not candidates:
            return h
        v = candidates[0]
        e1, e2 = h.incident(v)
        x, y = h.other_end(e1, v), h.other_end(e2, v)
        h.remove_vertex(v)
        h.add_edge(x, y)


def held_karp_value(g) -> Fraction:
    """Value of the uniform 2/3 edge assignment; equals n for cubic graphs."""
    return Fraction(2, 3) * g.m
