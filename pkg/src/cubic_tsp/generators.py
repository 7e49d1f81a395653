# -*- coding: utf-8 -*-

"""
Test instances: named graphs and seeded random cubic 3-edge-connected graphs.
"""

import logging

import networkx as nx
import numpy as np
from parse import parse

from cubic_tsp import globals
from cubic_tsp.exceptions import RejectedInputError, SolverError
from cubic_tsp.multigraph import Multigraph, global_min_cut

_logger = logging.getLogger(__name__)

_NAMED = {
    'k4': lambda: nx.complete_graph(4),
    'prism': lambda: nx.circular_ladder_graph(3),
    'petersen': nx.petersen_graph,
    'moebius-kantor': nx.moebius_kantor_graph,
    'k33': lambda: nx.complete_bipartite_graph(3, 3),
    'cube': lambda: nx.hypercube_graph(3),
    'k34': lambda: nx.complete_bipartite_graph(3, 4),  # not cubic, an oracle instance
}


def _bridge(g, e1, e2):
    """Subdivide e1 and e2 and join the two new vertices."""
    h = g.copy()
    x, y = h.add_vertex(), h.add_vertex()
    for eid, mid in ((e1, x), (e2, y)):
        a, b = h.remove_edge(eid)
        h.add_edge(a, mid)
        h.add_edge(mid, b)
    h.add_edge(x, y)
    return h


def random_cubic_3ec(n, seed=0) -> Multigraph:
    """
    Grow a cubic 3-edge-connected graph on n vertices from K4 by repeated edge-edge bridging.
    Two distinct edges are drawn per step; a step whose result is not 3-edge-connected is
    dropped and a new pair is drawn.

    Parameters
    ----------
    n : int
        Even number of vertices, at least 4.
    seed : int, optional (default: 0)
        Seed of the numpy random generator; equal seeds give equal graphs.

    Returns
    -------
    g : Multigraph
        Vertices 0..n-1, EdgeIds 0..3n/2-1.
    """
    if n < 4 or n % 2:
        raise RejectedInputError("Random cubic graphs need an even n >= 4, got {}".format(n))
    rng = np.random.default_rng(seed)
    g = Multigraph.from_networkx(_NAMED['k4']())
    while g.n < n:
        edges = g.edge_ids()
        for _ in range(globals.random_attempts):
            i, j = rng.choice(len(edges), size=2, replace=False)
            h = _bridge(g, edges[i], edges[j])
            if global_min_cut(h, limit=3)[0] >= 3:
                g = h
                break
        else:
            raise SolverError("No 3-edge-connected bridging found after {} attempts at n={}".format(
                globals.random_attempts, g.n))
    index = {v: i for i, v in enumerate(g.vertices())}
    return Multigraph.from_edge_list(n, [tuple(index[x] for x in g.endpoints(e)) for e in g.edge_ids()])


def generate(name, seed=None) -> Multigraph:
    """
    Build a named graph or follow a random recipe.

    Parameters
    ----------
    name : str
        One of globals.named_graphs, 'random:n=<even>,seed=<s>' or 'random:n=<even>'.
    seed : int, optional
        Seed for a recipe without one; defaults to 0.

    Returns
    -------
    g : Multigraph
    """
    if name in _NAMED:
        return Multigraph.from_networkx(_NAMED[name]())
    recipe = parse(globals.random_recipe, name)
    if recipe is not None:
        return random_cubic_3ec(recipe['n'], recipe['seed'])
    recipe = parse(globals.random_recipe_noseed, name)
    if recipe is not None:
        return random_cubic_3ec(recipe['n'], seed if seed is not None else 0)
    raise RejectedInputError("Unknown graph '{}', use one of {} or '{}'".format(
        name, globals.named_graphs, globals.random_recipe))
