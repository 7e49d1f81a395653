# -*- coding: utf-8 -*-

"""
Undo the compression inside the final 2-factor: super-edges are replaced by the edges they stand
for, then every super-vertex is expanded back into its 5-cycle with an even, connected gadget.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import product

from cubic_tsp import globals
from cubic_tsp.exceptions import RejectedInputError, SolverError
from cubic_tsp.provenance import ProvenanceLedger
from cubic_tsp.subgraph import EvenSubgraph

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExpansionEvent():
    """One super-vertex expansion and the state of the component right after it."""
    sv: int
    case: str
    vertices_added: int
    edges_added: int
    even: bool
    connected: bool


@dataclass(frozen=True)
class ComponentView():
    """
    One component W of the subgraph after super-edge replacement.

    Attributes
    ----------
    subgraph : EvenSubgraph
        The edges of W over the current, partly expanded host.
    pending : tuple
        SuperVertexRecords of W not expanded yet, by ascending id.
    ledger : ProvenanceLedger
    k1, k2, k3 : int
        Super-vertices of degree 2, of degree 4 and plain vertices of W before expansion.
    events : tuple
        ExpansionEvents so far.
    """
    subgraph: EvenSubgraph
    pending: tuple
    ledger: ProvenanceLedger = field(repr=False)
    k1: int = 0
    k2: int = 0
    k3: int = 0
    events: tuple = ()

    @property
    def vertices(self) -> list:
        return self.subgraph.vertices()

    @property
    def counts(self) -> tuple:
        return self.k1, self.k2, self.k3


def replace_super_edges(x, ledger) -> EvenSubgraph:
    """
    Replace every super-edge of the final 2-factor by the base edges it stands for, at the same
    multiplicity. The result lives on the contracted host of the ledger, where super-vertices
    have degree 2 or 4.
    """
    host = ledger.contracted_host()
    mult = Counter()
    for eid, k in x.mult.items():
        for leaf in ledger.expand_edge(eid):
            mult[leaf] += k
    return EvenSubgraph(host, mult)


def component_views(xh, ledger) -> list:
    """One ComponentView per component of xh, ordered by smallest vertex."""
    views = []
    for comp in xh.components():
        sub = xh.restricted(comp)
        svs = sorted(v for v in comp if ledger.is_super_vertex(v))
        degrees = Counter(sub.degree(v) for v in svs)
        views.append(ComponentView(sub, tuple(ledger.record_of(v) for v in svs), ledger,
                                   k1=degrees[2], k2=degrees[4], k3=len(comp) - len(svs)))
    return views


def _expanded_host(host, rec, ledger):
    """host with rec.sv replaced by its cycle; every edge of sv goes back to its base endpoint."""
    base = ledger.base
    cycle = set(rec.cycle)
    h = host.copy()
    far = {eid: h.other_end(eid, rec.sv) for eid in h.incident(rec.sv)}
    h.remove_vertex(rec.sv)
    for v in rec.cycle:
        h.add_vertex(v)
    ports = {}
    for eid in sorted(far):
        u, v = base.endpoints(eid)
        ports[eid] = u if u in cycle else v
        h.add_edge(ports[eid], far[eid], eid=eid)
    for eid in ledger.internal_edges(rec):
        h.add_edge(*base.endpoints(eid), eid=eid)
    return h, ports


def _gadgets(rec, ext, budget):
    """
    Multiplicities of the 5 cycle edges with at most `budget` copies that give every cycle
    vertex an even degree >= 2 together with its used external edges; fewest copies first,
    ties by the sorted list of edge copies.
    """
    cycle = rec.cycle
    found = []
    for ks in product(range(globals.max_multiplicity + 1), repeat=5):
        if sum(ks) > budget:
            continue
        deg = [ext[v] for v in cycle]
        for i, k in enumerate(ks):
            deg[i] += k
            deg[(i + 1) % 5] += k
        if all(d % 2 == 0 and d >= 2 for d in deg):
            copies = sorted(e for e, k in zip(rec.cycle_edges, ks) for _ in range(k))
            found.append((sum(ks), copies, ks))
    return [ks for _, _, ks in sorted(found)]


def _case(degree, rec, ext, copies) -> str:
    if degree == 4:
        return 'deg4-default' if copies == 3 else 'deg4-cut'
    ports = [i for i, v in enumerate(rec.cycle) if ext[v]]
    distance = min(abs(ports[0] - ports[-1]), 5 - abs(ports[0] - ports[-1]))
    return 'deg2-adjacent' if distance == 1 else 'deg2-distance2'


def _expand(w, rec, degree) -> ComponentView:
    x = w.subgraph
    if x.degree(rec.sv) != degree:
        raise RejectedInputError("Super-vertex {} has degree {} in its component, not {}".format(
            rec.sv, x.degree(rec.sv), degree))
    host, ports = _expanded_host(x.host, rec, w.ledger)
    ext = Counter()
    for eid, port in ports.items():
        ext[port] += x.multiplicity(eid)

    for ks in _gadgets(rec, ext, globals.gadget_budget[degree]):
        mult = dict(x.mult)
        mult.update({e: k for e, k in zip(rec.cycle_edges, ks) if k})
        y = EvenSubgraph(host, mult)
        if y.is_connected():
            break
    else:
        raise SolverError("No gadget with at most {} edges keeps the component of super-vertex {} "
                          "connected".format(globals.gadget_budget[degree], rec.sv))

    event = ExpansionEvent(rec.sv, _case(degree, rec, ext, sum(ks)), len(rec.cycle) - 1, sum(ks),
                           y.is_even(), y.is_connected())
    _logger.debug("Expanded {}".format(event))
    pending = tuple(r for r in w.pending if r.sv != rec.sv)
    return ComponentView(y, pending, w.ledger, w.k1, w.k2, w.k3, w.events + (event,))


def expand_deg2(w, rec) -> ComponentView:
    """Expand a super-vertex of degree 2: +4 vertices and at most 5 edge copies."""
    return _expand(w, rec, 2)


def expand_deg4(w, rec) -> ComponentView:
    """
    Expand a super-vertex of degree 4. The default gadget drops the two cycle edges away from
    the unused attachment (+3 edge copies); if they form a cut of the component, another
    gadget with at most 4 copies is used.
    """
    return _expand(w, rec, 4)


def expand_component(w, stats=None) -> EvenSubgraph:
    """
    Expand all super-vertices of a component, by ascending id.

    Returns
    -------
    y : EvenSubgraph
        Connected even subgraph over the base graph with at most floor(4|V|/3) - 2 edge copies.
    """
    while w.pending:
        rec = w.pending[0]
        degree = w.subgraph.degree(rec.sv)
        if degree == 2:
            w = expand_deg2(w, rec)
        elif degree == 4:
            w = expand_deg4(w, rec)
        else:
            raise SolverError("Super-vertex {} has degree {} after super-edge replacement".format(rec.sv, degree))
        if stats is not None:
            stats[w.events[-1].case] += 1

    y = w.subgraph.rehosted(w.ledger.base)
    size = len(y.vertices())
    bound = 4 * size // 3 - 2
    if not (y.is_even() and y.is_connected()):
        raise SolverError("Expanded component on {} vertices is not connected and even".format(size))
    if y.edge_count > bound:
        raise SolverError("Expanded component has {} edges, more than {} on {} vertices".format(
            y.edge_count, bound, size))
    return y
