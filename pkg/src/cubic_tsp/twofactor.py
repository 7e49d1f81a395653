# -*- coding: utf-8 -*-

"""
2-factors of cubic 3-edge-connected graphs that contain two required edges at a vertex and
whose cycles have length >= min(n, 5).

Two strategies are available:

- 'reduction' splits at essential 3-edge cuts, solves K4 directly, reduces 4-cycles and
  matches the girth-5 remainder, falling back to the search where a reduction is unusable.
- 'search' branches on the short cycles of matching complements within a node budget and
  enumerates perfect matchings on small graphs.
"""

import logging
from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import combinations

from cubic_tsp import globals
from cubic_tsp.exceptions import RejectedInputError, SolverError
from cubic_tsp.matching import Matching, iter_perfect_matchings, max_matching, two_factor_from_matching
from cubic_tsp.multigraph import Multigraph, contract, find_essential_3cut, global_min_cut, validate_cubic_3ec
from cubic_tsp.provenance import FourCycleReduction, ProvenanceLedger
from cubic_tsp.subgraph import EvenSubgraph

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Constraints():
    """EdgeIds a 2-factor has to contain (must_use) and to leave out (must_avoid)."""
    must_use: frozenset = frozenset()
    must_avoid: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, 'must_use', frozenset(self.must_use))
        object.__setattr__(self, 'must_avoid', frozenset(self.must_avoid))

    @property
    def size(self) -> int:
        return len(self.must_use) + len(self.must_avoid)

    def restricted(self, edges):
        """The constraints on the given edges only."""
        edges = set(edges)
        return Constraints(self.must_use & edges, self.must_avoid & edges)

    def without(self, edges):
        edges = set(edges)
        return Constraints(self.must_use - edges, self.must_avoid - edges)

    def merged(self, other):
        return Constraints(self.must_use | other.must_use, self.must_avoid | other.must_avoid)

    def used_among(self, edges) -> int:
        return len(self.must_use & set(edges))

    def satisfied_by(self, x) -> bool:
        return all(e in x for e in self.must_use) and not any(e in x for e in self.must_avoid)


@dataclass(frozen=True)
class RequiredEdges():
    """Two distinct edges e1 = u1 u2 and e2 = u2 u3 at a common vertex u2 of degree 3."""
    e1: int
    e2: int

    def hub(self, g):
        """The common vertex u2."""
        if self.e1 == self.e2:
            raise RejectedInputError("Required edges must be distinct, got {} twice".format(self.e1))
        common = set(g.endpoints(self.e1)) & set(g.endpoints(self.e2))
        for v in sorted(common):
            if g.degree(v) == 3:
                return v
        raise RejectedInputError("Required edges {} and {} do not meet at a vertex of degree 3".format(
            self.e1, self.e2), certificate=(self.e1, self.e2))

    def constraints(self, g) -> Constraints:
        self.hub(g)
        return Constraints(must_use={self.e1, self.e2})


def propagate(g, cons):
    """
    Close the constraints under the rules at every vertex of degree 3: two used edges
    exclude the third, an avoided edge forces the other two.

    Returns
    -------
    cons : Constraints or None
        None if the constraints contradict each other.
    """
    use, avoid = set(cons.must_use), set(cons.must_avoid)
    unknown = sorted(e for e in use | avoid if not g.has_edge(e))
    if unknown:
        raise RejectedInputError("Constrained edges {} are not in the graph".format(unknown))
    if use & avoid:
        return None

    queue = deque(sorted({v for e in use | avoid for v in g.endpoints(e)}))
    queued = set(queue)
    while queue:
        v = queue.popleft()
        queued.discard(v)
        inc = g.incident(v)
        if len(inc) != 3 or g.degree(v) != 3:
            continue
        used = [e for e in inc if e in use]
        avoided = [e for e in inc if e in avoid]
        if len(used) > 2 or len(avoided) > 1:
            return None
        if len(used) == 2 and not avoided:
            new, target = [e for e in inc if e not in use], avoid
        elif len(avoided) == 1 and len(used) < 2:
            new, target = [e for e in inc if e not in avoid and e not in use], use
        else:
            continue
        for e in new:
            target.add(e)
            for x in g.endpoints(e):
                if x not in queued:
                    queue.append(x)
                    queued.add(x)
    return Constraints(use, avoid)


# ----- essential 3-edge cuts -----

@dataclass(frozen=True)
class RejoinRule():
    """How the 2-factors of the two sides of a 3-edge cut of host fit together."""
    host: Multigraph = field(compare=False, repr=False)
    crossing: tuple
    hub1: int  # vertex of g1 that stands for the far side
    hub2: int  # vertex of g2 that stands for the near side

    def used_crossing(self, x) -> tuple:
        return tuple(e for e in self.crossing if e in x)

    def pair_constraints(self, pair) -> Constraints:
        """Use the crossing edges in pair, avoid the remaining one."""
        return Constraints(set(pair), set(self.crossing) - set(pair))


def decompose_at_3cut(g, cut):
    """
    Split g at an essential 3-edge cut (S, V-S).

    Returns
    -------
    g1 : Multigraph
        g with V-S contracted to one vertex.
    g2 : Multigraph
        g with S contracted to one vertex.
    rule : RejoinRule
        The crossing EdgeIds (the same in g, g1 and g2) and the two contracted vertices.
    """
    if cut.weight != 3 or not cut.is_essential(g):
        raise RejectedInputError("Cut {} is not an essential 3-edge cut".format(list(cut.crossing)),
                                 certificate=cut)
    g1, hub1 = contract(g, cut.other_side(g))
    g2, hub2 = contract(g, cut.side)
    return g1, g2, RejoinRule(g, cut.crossing, hub1, hub2)


def combine_solutions(x1, x2, rule) -> EvenSubgraph:
    """Union of the 2-factors of both sides over the original EdgeIds."""
    used1, used2 = rule.used_crossing(x1), rule.used_crossing(x2)
    if used1 != used2 or len(used1) != 2:
        raise SolverError("Crossing edges disagree: {} on one side, {} on the other".format(used1, used2))
    mult = dict(x1.mult)
    mult.update(x2.mult)
    return EvenSubgraph(rule.host, mult)


# ----- 4-cycle reductions -----

_LIFT_STATES = ('open', 'f1f4', 'f2f3')


def _state_edges(state, cycle_edges, pendants) -> frozenset:
    """Local edges used by the lifted 2-factor in the given state."""
    c12, c23, c34, c41 = cycle_edges
    f1, f2, f3, f4 = pendants
    if state == 'open':  # paths w1 v1 v2 w2 and w3 v3 v4 w4
        return frozenset([f1, f2, f3, f4, c12, c34])
    if state == 'f1f4':  # path w1 v1 v2 v3 v4 w4
        return frozenset([f1, f4, c12, c23, c34])
    if state == 'f2f3':  # path w2 v2 v1 v4 v3 w3
        return frozenset([f2, f3, c12, c41, c34])
    raise ValueError("Unknown state {}".format(state))


def _state_constraints(state, kept, pendants) -> Constraints:
    """Constraints on the reduced graph that make its 2-factor liftable in the given state."""
    f1, f2, f3, f4 = pendants
    if state == 'open':
        return Constraints(must_avoid={kept})
    if state == 'f1f4':
        return Constraints({kept, f1, f4}, {f2, f3})
    if state == 'f2f3':
        return Constraints({kept, f2, f3}, {f1, f4})
    raise ValueError("Unknown state {}".format(state))


def _rotations(cycle):
    vs, es = cycle.vertices, cycle.edges
    yield vs, es
    yield vs[1:] + vs[:1], es[1:] + es[:1]


def _pendants(g, vertices, cycle_edges):
    """The edge leaving the cycle at each vertex, or None if the cycle has a chord."""
    inside = set(vertices)
    pendants = []
    for v in vertices:
        out = [e for e in g.incident(v) if e not in cycle_edges]
        if len(out) != 1 or g.other_end(out[0], v) in inside:
            return None
        pendants.append(out[0])
    return tuple(pendants) if len(set(pendants)) == 4 else None


def _reduce_4cycle(g, vertices, cycle_edges):
    """Merge v1 v2 and v3 v4, keep c23 as the edge between them and drop c41."""
    v1, v2, v3, v4 = vertices
    h, a = contract(g, [v1, v2])
    h, b = contract(h, [v3, v4])
    h.remove_edge(cycle_edges[3])
    return h, (a, b)


def _cycle_order(cons):
    """Cycles without required edges first, then those with two, then those with one."""
    rank = {0: 0, 2: 1, 1: 2}

    def key(cycle):
        return rank.get(cons.used_among(cycle.edges), 3), min(cycle.edges)
    return key


def _reductions(g, cons):
    """
    Generate the admissible reductions of g in visiting order.

    Yields
    ------
    (reduced graph, FourCycleReduction, constraints on the reduced graph)
    """
    for cycle in sorted(g.short_cycles(4), key=_cycle_order(cons)):
        for vertices, cycle_edges in _rotations(cycle):
            pendants = _pendants(g, vertices, cycle_edges)
            if pendants is None:
                continue
            h, merged = _reduce_4cycle(g, vertices, cycle_edges)
            if not h.is_cubic() or global_min_cut(h, limit=3)[0] < 3:
                continue
            local = set(cycle_edges) | set(pendants)
            local_cons = cons.restricted(local)
            for state in _LIFT_STATES:
                used = _state_edges(state, cycle_edges, pendants)
                if not local_cons.must_use <= used or local_cons.must_avoid & used:
                    continue
                reduced = propagate(h, cons.without(local).merged(
                    _state_constraints(state, cycle_edges[1], pendants)))
                if reduced is None:
                    continue
                rec = FourCycleReduction(tuple(vertices), tuple(cycle_edges), pendants, merged, state, host=g)
                yield h, rec, reduced


def eliminate_4cycles(g, req=None):
    """
    Reduce 4-cycles until the graph has girth >= 5, contains a triangle (an essential 3-edge cut
    appeared) or no admissible reduction is left. Each reduction removes 2 vertices and 3 edges.

    Parameters
    ----------
    g : Multigraph
        Cubic, 3-edge-connected graph.
    req : RequiredEdges or Constraints, optional

    Returns
    -------
    reduced : Multigraph
    cons : Constraints
        Constraints on the reduced graph; its 2-factors that satisfy them lift to g.
    ledger : ProvenanceLedger
        One FourCycleReduction per step, to be lifted with undo_reduction in reverse order.
    """
    cons = _as_constraints(g, req)
    ledger = ProvenanceLedger(g)
    current = g
    while current.girth() == 4:
        step = next(_reductions(current, cons), None)
        if step is None:
            break
        current, rec, cons = step
        ledger.push(rec)
        _logger.debug("Reduced 4-cycle {} (state {}), {} vertices left".format(rec.cycle, rec.state, current.n))
    return current, cons, ledger


def undo_reduction(rec, x) -> EvenSubgraph:
    """Lift a 2-factor of the reduced graph to the graph before the reduction."""
    f1, f2, f3, f4 = rec.pendants
    if rec.kept not in x:
        state = 'open'
    elif f1 in x and f4 in x:
        state = 'f1f4'
    elif f2 in x and f3 in x:
        state = 'f2f3'
    else:
        raise SolverError("2-factor crosses the reduced 4-cycle {} diagonally".format(rec.cycle))
    local = set(rec.cycle_edges) | set(rec.pendants)
    mult = {e: k for e, k in x.mult.items() if e not in local}
    mult.update({e: 1 for e in _state_edges(state, rec.cycle_edges, rec.pendants)})
    return EvenSubgraph(rec.host, mult)


def _as_constraints(g, req) -> Constraints:
    if req is None:
        return Constraints()
    if isinstance(req, Constraints):
        return req
    return req.constraints(g)


# ----- strategies -----

class TwoFactorStrategy():
    """
    Base class of the 2-factor strategies.

    Parameters
    ----------
    stats : collections.Counter, optional
        Counters updated while solving.
    budget : int, optional
        Branch nodes of the search before it gives up.
    exhaustive_cap : int, optional
        Largest vertex count on which perfect matchings are enumerated.
    """
    name = None

    def __init__(self, stats=None, budget=globals.search_budget, exhaustive_cap=globals.exhaustive_cap):
        self.stats = stats if stats is not None else Counter()
        self.budget = budget
        self.exhaustive_cap = exhaustive_cap

    def solve(self, g, cons):
        """2-factor of g that satisfies cons with every cycle of length >= min(n, 5), or None."""
        raise NotImplementedError

    @staticmethod
    def target(g) -> int:
        return min(g.n, globals.min_cycle_length)

    def accepts(self, g, x, cons) -> bool:
        return x.host is g and x.is_two_factor() and x.sigma() >= self.target(g) and cons.satisfied_by(x)

    def exhaustive(self, g, cons):
        """First acceptable complement of a perfect matching, in enumeration order."""
        self.stats['exhaustive'] += 1
        for edges in iter_perfect_matchings(g, forced=cons.must_avoid, forbidden=cons.must_use):
            x = two_factor_from_matching(g, Matching(edges, g))
            if self.accepts(g, x, cons):
                return x
        return None


class SearchStrategy(TwoFactorStrategy):
    """
    Complete branch search. A node is a constraint set; its 2-factor is the complement of a
    matching under those constraints. A node whose 2-factor has a short cycle branches on which
    edge of the shortest such cycle is avoided, the earlier edges of the cycle being used.
    """
    name = 'search'

    def solve(self, g, cons):
        cons = propagate(g, cons)
        if cons is None:
            return None
        target = self.target(g)
        stack = [cons]
        nodes = 0
        while stack:
            node = stack.pop()
            nodes += 1
            self.stats['search_nodes'] += 1
            if nodes > self.budget:
                if g.n <= self.exhaustive_cap:
                    return self.exhaustive(g, cons)
                raise SolverError("2-factor search exceeded {} nodes on {} vertices".format(self.budget, g.n))
            m = max_matching(g, forced=node.must_avoid, forbidden=node.must_use)
            if not m.perfect:
                continue
            x = two_factor_from_matching(g, m)
            short = [c for c in x.cycles() if len(c.edges) < target]
            if not short:
                return x
            cycle = min(short, key=lambda c: (len(c.edges), min(c.edges)))
            edges = sorted(cycle.edges)
            children = []
            for i, e in enumerate(edges):
                child = propagate(g, Constraints(node.must_use | set(edges[:i]), node.must_avoid | {e}))
                if child is not None:
                    children.append(child)
            stack.extend(reversed(children))
        return None


class ReductionStrategy(TwoFactorStrategy):
    """Essential cut decomposition, K4 base case, 4-cycle reduction and matching on girth >= 5."""
    name = 'reduction'

    def __init__(self, stats=None, budget=globals.search_budget, exhaustive_cap=globals.exhaustive_cap):
        super().__init__(stats=stats, budget=budget, exhaustive_cap=exhaustive_cap)
        self._search = SearchStrategy(stats=self.stats, budget=budget, exhaustive_cap=exhaustive_cap)

    def solve(self, g, cons):
        cons = propagate(g, cons)
        if cons is None:
            return None
        if g.n <= 4:
            return self.exhaustive(g, cons)
        cut = find_essential_3cut(g, validate=False)
        if cut is not None:
            return self._split(g, cut, cons)

        girth = g.girth()
        x = None
        if girth == 4:
            x = self._reduce(g, cons)
        elif girth >= 5:
            x = self._match(g, cons)
        if x is None:
            self.stats['search_fallbacks'] += 1
            _logger.debug("Falling back to the search on {} vertices (girth {})".format(g.n, girth))
            x = self._search.solve(g, cons)
        return x

    def _split(self, g, cut, cons):
        g1, g2, rule = decompose_at_3cut(g, cut)
        self.stats['decompositions'] += 1
        sides = [(g1, cons.restricted(g1.edge_ids())), (g2, cons.restricted(g2.edge_ids()))]
        swap = sides[1][1].size > sides[0][1].size
        if swap:
            sides.reverse()
        (first, first_cons), (second, second_cons) = sides

        x_first = self.solve(first, first_cons)
        if x_first is None:
            return None
        pair = rule.used_crossing(x_first)
        for candidate in [pair] + [p for p in combinations(rule.crossing, 2) if p != pair]:
            imposed = rule.pair_constraints(candidate)
            if candidate != pair:
                x_first = self.solve(first, first_cons.merged(imposed))
                if x_first is None:
                    continue
            x_second = self.solve(second, second_cons.merged(imposed))
            if x_second is None:
                continue
            x1, x2 = (x_second, x_first) if swap else (x_first, x_second)
            return combine_solutions(x1, x2, rule)
        return None

    def _reduce(self, g, cons):
        reduced, reduced_cons, ledger = eliminate_4cycles(g, cons)
        if not len(ledger):
            return None
        self.stats['reductions'] += len(ledger)
        x = self.solve(reduced, reduced_cons)
        if x is None:
            return None
        for rec in reversed(ledger.records):
            x = undo_reduction(rec, x)
        return x if self.accepts(g, x, cons) else None

    def _match(self, g, cons):
        m = max_matching(g, forced=cons.must_avoid, forbidden=cons.must_use)
        if not m.perfect:
            return None
        x = two_factor_from_matching(g, m)
        return x if self.accepts(g, x, cons) else None


_STRATEGIES = {cls.name: cls for cls in (ReductionStrategy, SearchStrategy)}


def make_strategy(name=globals.two_factor_strategy, **kwargs) -> TwoFactorStrategy:
    try:
        return _STRATEGIES[name](**kwargs)
    except KeyError:
        raise RejectedInputError("Unknown 2-factor strategy '{}', use one of {}".format(
            name, globals.two_factor_strategies))


def find_girth5_two_factor(g, req=None, strategy=globals.two_factor_strategy, stats=None, validate=True):
    """
    2-factor of g that contains the required edges and whose cycles have length >= min(n, 5).

    Parameters
    ----------
    g : Multigraph
        Cubic, 3-edge-connected graph with at least 4 vertices.
    req : RequiredEdges, optional
    strategy : str, optional
        'reduction' (default) or 'search'.
    stats : collections.Counter, optional
        Receives the strategy counters.
    validate : bool, optional (default: True)
        Check that g is cubic and 3-edge-connected.

    Returns
    -------
    x : EvenSubgraph
    """
    if validate:
        validate_cubic_3ec(g)
    if g.n < 4:
        raise RejectedInputError("Graph has {} vertices, at least 4 are needed".format(g.n))
    cons = _as_constraints(g, req)
    solver = make_strategy(strategy, stats=stats)
    x = solver.solve(g, cons)
    if x is None or not solver.accepts(g, x, cons):
        raise SolverError("No 2-factor with cycles of length >= {} found on {} vertices".format(
            solver.target(g), g.n))
    return x
