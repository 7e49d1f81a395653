# -*- coding: utf-8 -*-

"""
Sub-multigraphs given by edge multiplicities over a host graph. They represent 2-factors,
intermediate even subgraphs and the final Eulerian solutions.
"""

from collections import Counter

import networkx as nx

from cubic_tsp.exceptions import RejectedInputError
from cubic_tsp.multigraph import Cycle


class EvenSubgraph():
    """
    Mapping EdgeId -> multiplicity over a host Multigraph. Only positive multiplicities are stored.

    Parameters
    ----------
    host : Multigraph
        The graph whose edges are used.
    mult : dict, optional
        Multiplicity of each used EdgeId. Zero entries are dropped.
    """

    def __init__(self, host, mult=None):
        self.host = host
        self.mult = {}
        for eid, k in (mult or {}).items():
            k = int(k)
            if k < 0:
                raise RejectedInputError("Edge {} has negative multiplicity {}".format(eid, k))
            if k == 0:
                continue
            if not host.has_edge(eid):
                raise RejectedInputError("Edge {} is not an edge of the host graph".format(eid))
            self.mult[eid] = k

    @classmethod
    def from_edges(cls, host, edges):
        """Each occurrence of an EdgeId in edges adds one copy."""
        return cls(host, Counter(edges))

    def __repr__(self):
        return '{}(edges={}, copies={})'.format(type(self).__name__, len(self.mult), self.edge_count)

    def __eq__(self, other):
        if not isinstance(other, EvenSubgraph):
            return NotImplemented
        return self.mult == other.mult

    def __contains__(self, eid):
        return eid in self.mult

    @property
    def edge_count(self) -> int:
        """Number of edge copies."""
        return sum(self.mult.values())

    def support(self) -> list:
        return sorted(self.mult)

    def multiplicity(self, eid) -> int:
        return self.mult.get(eid, 0)

    def max_multiplicity(self) -> int:
        return max(self.mult.values(), default=0)

    def degrees(self) -> dict:
        """Degree of every host vertex, counting multiplicities (a loop counts twice)."""
        deg = {v: 0 for v in self.host.vertices()}
        for eid, k in self.mult.items():
            u, v = self.host.endpoints(eid)
            deg[u] += k
            deg[v] += k
        return deg

    def degree(self, v) -> int:
        return self.degrees()[v]

    def vertices(self) -> list:
        """Vertices covered by at least one edge."""
        return sorted(v for v, d in self.degrees().items() if d > 0)

    def is_even(self) -> bool:
        return all(d % 2 == 0 for d in self.degrees().values())

    def is_spanning(self) -> bool:
        return all(d >= 2 for d in self.degrees().values())

    def is_two_factor(self) -> bool:
        return self.max_multiplicity() <= 1 and all(d == 2 for d in self.degrees().values())

    def to_networkx(self, copies=False):
        """
        nx.MultiGraph on the covered vertices.

        Parameters
        ----------
        copies : bool, optional (default: False)
            If True, every copy of an edge is a separate edge keyed (eid, i),
            otherwise one edge keyed eid with a 'mult' attribute.
        """
        nxg = nx.MultiGraph()
        nxg.add_nodes_from(self.vertices())
        for eid in self.support():
            u, v = self.host.endpoints(eid)
            if copies:
                for i in range(self.mult[eid]):
                    nxg.add_edge(u, v, key=(eid, i))
            else:
                nxg.add_edge(u, v, key=eid, mult=self.mult[eid])
        return nxg

    def components(self) -> list:
        """Vertex lists of the components induced by the used edges, ordered by smallest vertex."""
        comps = [sorted(c) for c in nx.connected_components(self.to_networkx())]
        return sorted(comps, key=lambda c: c[0])

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def sigma(self) -> int:
        """Size of the smallest component, 0 for the empty subgraph."""
        return min((len(c) for c in self.components()), default=0)

    def restricted(self, vertices):
        """The edges with both endpoints in vertices, over the same host."""
        vertices = set(vertices)
        return EvenSubgraph(self.host, {eid: k for eid, k in self.mult.items()
                                        if set(self.host.endpoints(eid)) <= vertices})

    def rehosted(self, host):
        """The same multiplicities over another host that has all used EdgeIds."""
        return EvenSubgraph(host, self.mult)

    def cycles(self) -> list:
        """
        The cycles of a subgraph in which every covered vertex has degree 2.

        Returns
        -------
        cycles : list of Cycle
            One per component, starting at its smallest vertex.
        """
        if any(d not in (0, 2) for d in self.degrees().values()):
            raise RejectedInputError("Subgraph is not a disjoint union of cycles")
        nxg = self.to_networkx(copies=True)
        cycles = []
        for comp in self.components():
            walk = list(nx.eulerian_circuit(nxg.subgraph(comp), source=comp[0], keys=True))
            cycles.append(Cycle(tuple(u for u, _, _ in walk), tuple(key[0] for _, _, key in walk)))
        return cycles
