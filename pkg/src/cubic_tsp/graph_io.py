# -*- coding: utf-8 -*-

"""
Reading and writing graphs (whitespace edge list or JSON), solution files and DOT drawings.
"""

import json
import logging

from parse import parse

from cubic_tsp import globals
from cubic_tsp.exceptions import RejectedInputError
from cubic_tsp.multigraph import Multigraph, validate_cubic_3ec
from cubic_tsp.subgraph import EvenSubgraph

_logger = logging.getLogger(__name__)


def _check_edge(n, u, v, where):
    for x in (u, v):
        if not 0 <= x < n:
            raise RejectedInputError("{}: vertex {} out of range 0..{}".format(where, x, n - 1), certificate=where)
    if u == v:
        raise RejectedInputError("{}: self-loop at vertex {}".format(where, u), certificate=where)


def _parse_json(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise RejectedInputError("line {}, column {}: {}".format(e.lineno, e.colno, e.msg),
                                 certificate=(e.lineno, e.colno))
    if not isinstance(doc, dict) or 'n' not in doc or 'edges' not in doc:
        raise RejectedInputError("JSON graph needs the keys 'n' and 'edges'")
    n = doc['n']
    if not isinstance(n, int) or n < 0:
        raise RejectedInputError("'n' must be a non-negative integer, got {!r}".format(n))
    pairs = []
    for i, edge in enumerate(doc['edges']):
        where = "edge {}".format(i)
        if not (isinstance(edge, list) and len(edge) >= 2 and all(isinstance(x, int) for x in edge[:2])):
            raise RejectedInputError("{}: expected [u, v], got {!r}".format(where, edge), certificate=where)
        _check_edge(n, edge[0], edge[1], where)
        pairs.append((edge[0], edge[1]))
    return n, pairs


def _parse_edgelist(text):
    rows = [(i + 1, ' '.join(line.split())) for i, line in enumerate(text.splitlines())]
    rows = [(lineno, line) for lineno, line in rows if line and not line.startswith('#')]
    if not rows:
        raise RejectedInputError("Empty graph file")

    lineno, line = rows[0]
    header = parse(globals.edgelist_header, line)
    if header is None:
        raise RejectedInputError("line {}: expected the header 'n m', got '{}'".format(lineno, line),
                                 certificate=(lineno, 1))
    n, m = header['n'], header['m']
    pairs = []
    for lineno, line in rows[1:]:
        row = parse(globals.edgelist_row, line)
        if row is None:
            raise RejectedInputError("line {}: expected an edge 'u v', got '{}'".format(lineno, line),
                                     certificate=(lineno, 1))
        _check_edge(n, row['u'], row['v'], "line {}".format(lineno))
        pairs.append((row['u'], row['v']))
    if len(pairs) != m:
        raise RejectedInputError("line {}: header announces {} edges, found {}".format(rows[0][0], m, len(pairs)),
                                 certificate=(rows[0][0], 1))
    return n, pairs


def parse_graph(text, require_cubic_3ec=False) -> Multigraph:
    """
    Parse a graph in the JSON format {"n": .., "edges": [[u, v], ...]} or the edge list format
    (a line 'n m' followed by m lines 'u v'; '#' starts a comment line).

    Parameters
    ----------
    text : str
    require_cubic_3ec : bool, optional (default: False)
        Also check that the graph is cubic and 3-edge-connected.

    Returns
    -------
    g : Multigraph
        Vertices 0..n-1, EdgeIds in input order.
    """
    if text.lstrip().startswith('{'):
        n, pairs = _parse_json(text)
    else:
        n, pairs = _parse_edgelist(text)
    g = Multigraph.from_edge_list(n, pairs)
    if require_cubic_3ec:
        validate_cubic_3ec(g)
    return g


def read_graph(path, require_cubic_3ec=False) -> Multigraph:
    with open(path) as f:
        return parse_graph(f.read(), require_cubic_3ec=require_cubic_3ec)


def _index(g) -> dict:
    return {v: i for i, v in enumerate(g.vertices())}


def emit_graph(g, fmt='edgelist') -> str:
    """Write g in one of the input formats; vertices renumbered 0..n-1, edges in id order."""
    index = _index(g)
    pairs = [tuple(index[x] for x in g.endpoints(e)) for e in g.edge_ids()]
    if fmt == 'edgelist':
        lines = [globals.edgelist_header.format(n=g.n, m=g.m)]
        lines += [globals.edgelist_row.format(u=u, v=v) for u, v in pairs]
        return '\n'.join(lines) + '\n'
    if fmt == 'json':
        return json.dumps({'n': g.n, 'edges': [list(p) for p in pairs]}) + '\n'
    raise RejectedInputError("Unknown graph format '{}', use one of {}".format(fmt, globals.graph_formats))


def write_solution(h, certificate=None) -> str:
    """
    Solution JSON: {"n": .., "edges": [[u, v, multiplicity], ...], "certificate": {..}}
    with edges in id order and the certificate fields in their documented order.
    """
    g = h.host
    index = _index(g)
    edges = [[index[g.endpoints(e)[0]], index[g.endpoints(e)[1]], h.mult[e]] for e in h.support()]
    doc = {'n': g.n, 'edges': edges}
    if certificate is not None:
        doc['certificate'] = certificate.to_dict()
    return json.dumps(doc, indent=globals.json_indent, sort_keys=False) + '\n'


def read_solution(text, g) -> EvenSubgraph:
    """
    Map the [u, v, multiplicity] triples of a solution file onto the EdgeIds of g. Triples over
    the same vertex pair take the parallel edges between them in ascending id order.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise RejectedInputError("line {}, column {}: {}".format(e.lineno, e.colno, e.msg),
                                 certificate=(e.lineno, e.colno))
    vertices = g.vertices()
    taken = set()
    mult = {}
    for i, triple in enumerate(doc.get('edges', []) if isinstance(doc, dict) else []):
        where = "edge {}".format(i)
        if not (isinstance(triple, list) and len(triple) == 3 and all(isinstance(x, int) for x in triple)):
            raise RejectedInputError("{}: expected [u, v, multiplicity], got {!r}".format(where, triple),
                                     certificate=where)
        u, v, k = triple
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise RejectedInputError("{}: vertex out of range 0..{}".format(where, g.n - 1), certificate=where)
        free = [e for e in g.edges_between(vertices[u], vertices[v]) if e not in taken]
        if not free:
            raise RejectedInputError("{}: no edge {}-{} left in the graph".format(where, u, v), certificate=where)
        taken.add(free[0])
        mult[free[0]] = k
    return EvenSubgraph(g, mult)


def to_dot(g, h=None) -> str:
    """DOT drawing of g; edges styled by their multiplicity in h."""
    lines = ['graph G {']
    lines += ['  {};'.format(v) for v in g.vertices()]
    for e in g.edge_ids():
        u, v = g.endpoints(e)
        k = h.multiplicity(e) if h is not None else 1
        style = globals.dot_styles[min(k, globals.max_multiplicity)]
        lines.append('  {} -- {} [label="{}", {}];'.format(u, v, e, style))
    lines.append('}')
    return '\n'.join(lines) + '\n'
