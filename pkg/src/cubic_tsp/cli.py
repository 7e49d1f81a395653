# -*- coding: utf-8 -*-
"""
Command line interface of cubic_tsp.

    cubic-tsp solve --gen petersen
    cubic-tsp verify graph.txt solution.json
    cubic-tsp oracle --gen k4
    cubic-tsp bench --family random --sizes 10..200 --seeds 1..20 --csv out.csv
    cubic-tsp generate random:n=20,seed=7 --format json
"""

import argparse
import logging
import sys
import warnings
from pathlib import Path

from parse import parse

from cubic_tsp import __version__, globals
from cubic_tsp.assemble import solve
from cubic_tsp.bench import bench, summary_table
from cubic_tsp.exceptions import RejectedInputError, SolverError
from cubic_tsp.generators import generate
from cubic_tsp.graph_io import emit_graph, parse_graph, read_solution, to_dot, write_solution
from cubic_tsp.multigraph import validate_cubic_3ec
from cubic_tsp.oracle import opt_eulerian, verify
from cubic_tsp.plot_utils import plot_ratios

_logger = logging.getLogger(__name__)


def parse_range(text) -> list:
    """'a..b' (inclusive), 'a..b:step' or a comma separated list of integers."""
    for templ in (globals.range_step_templ, globals.range_templ):
        r = parse(templ, text)
        if r is not None:
            step = r.named.get('step', 1)
            if step < 1:
                raise argparse.ArgumentTypeError("Step must be positive in '{}'".format(text))
            return list(range(r['start'], r['stop'] + 1, step))
    try:
        return [int(x) for x in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError("Expected 'a..b', 'a..b:step' or 'a,b,...', got '{}'".format(text))


def _read_text(path) -> str:
    if path == '-':
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as e:
        raise RejectedInputError("Cannot read {}: {}".format(path, e.strerror))


def _write_text(path, text):
    path = Path(path)
    if path.exists():
        warnings.warn('Overwriting file {}'.format(path.name))
    path.write_text(text)


def _load_graph(args):
    if args.gen:
        g = generate(args.gen, seed=args.seed)
        if args.require_cubic_3ec:
            validate_cubic_3ec(g)
    elif args.graph:
        g = parse_graph(_read_text(args.graph), require_cubic_3ec=args.require_cubic_3ec)
    else:
        raise RejectedInputError("Give a graph file or --gen NAME")
    return g


def _add_require_flag(p):
    p.add_argument('--require-cubic-3ec', dest='require_cubic_3ec', action='store_true',
                   help="reject the graph unless it is cubic and 3-edge-connected")


def _add_graph_source(p):
    p.add_argument('graph', nargs='?', help="graph file (edge list or JSON), '-' for stdin")
    p.add_argument('--gen', metavar='NAME', help="generated graph: {} or '{}'".format(
        ', '.join(globals.named_graphs), globals.random_recipe_noseed))
    p.add_argument('--seed', type=int, default=None, help="seed for a random recipe without one")
    _add_require_flag(p)


def parse_args(args):
    """
    Parse command line parameters

    Parameters
    ----------
    args : list of str
        command line parameters as list of strings

    Returns
    -------
    args : argparse.Namespace
        command line parameters namespace
    """
    parser = argparse.ArgumentParser(
        description="4/3-approximate graphic TSP tours on cubic 3-edge-connected graphs")
    parser.add_argument('--version', action='version', version='cubic_tsp {}'.format(__version__))
    parser.add_argument('-v', '--verbose', dest='loglevel', action='store_const', const=logging.INFO,
                        help="set loglevel to INFO")
    parser.add_argument('-vv', '--very-verbose', dest='loglevel', action='store_const', const=logging.DEBUG,
                        help="set loglevel to DEBUG")
    commands = parser.add_subparsers(dest='command', required=True)

    p = commands.add_parser('solve', help="solve and certify one instance")
    _add_graph_source(p)
    p.add_argument('--strategy', choices=globals.two_factor_strategies, default=globals.two_factor_strategy)
    p.add_argument('--json', metavar='FILE', help="write the solution and its certificate")
    p.add_argument('--dot', metavar='FILE', help="write a DOT drawing of the solution")

    p = commands.add_parser('verify', help="check a solution file against a graph")
    p.add_argument('graph', help="graph file")
    p.add_argument('solution', help="solution JSON")
    _add_require_flag(p)

    p = commands.add_parser('oracle', help="exact optimum of a small instance")
    _add_graph_source(p)
    p.add_argument('--cap', type=int, default=globals.oracle_cap, help="largest accepted vertex count")
    p.add_argument('--solution', metavar='FILE', help="solution JSON to compare with the optimum")

    p = commands.add_parser('bench', help="solve a family of instances and tabulate the results")
    p.add_argument('--family', default='random', help="'random' or a named graph")
    p.add_argument('--sizes', type=parse_range, default=[10], help="vertex counts, e.g. 10..200:10")
    p.add_argument('--seeds', type=parse_range, default=[1], help="seeds, e.g. 1..20")
    p.add_argument('--jobs', type=int, default=1, help="worker processes")
    p.add_argument('--strategy', choices=globals.two_factor_strategies, default=globals.two_factor_strategy)
    p.add_argument('--csv', metavar='FILE', help="write the per-instance rows")
    p.add_argument('--plot', metavar='FILE', help="write a boxplot of tour/n per size")

    p = commands.add_parser('generate', help="write a generated instance")
    p.add_argument('name', help="{} or '{}'".format(', '.join(globals.named_graphs), globals.random_recipe))
    p.add_argument('--seed', type=int, default=None)
    p.add_argument('--format', choices=globals.graph_formats, default=globals.graph_formats[0])
    p.add_argument('--out', metavar='FILE', help="output file, stdout if not given")

    return parser.parse_args(args)


def setup_logging(loglevel):
    """
    Setup basic logging

    Parameters
    ----------
    loglevel : int
        minimum loglevel for emitting messages
    """
    logging.basicConfig(level=loglevel or logging.WARNING, stream=sys.stderr,
                        format=globals.log_format, datefmt=globals.log_datefmt)


def cmd_solve(args) -> int:
    g = _load_graph(args)
    tour, cert = solve(g, strategy=args.strategy)
    if args.json:
        _write_text(args.json, write_solution(tour.subgraph, cert))
    if args.dot:
        _write_text(args.dot, to_dot(g, tour.subgraph))
    status = 'PASS' if cert.passed else 'FAIL'
    print(globals.solve_summary.format(n=g.n, tour=cert.tour_length, bound=cert.bound, status=status))
    return globals.exit_ok if cert.passed else globals.exit_fail


def cmd_verify(args) -> int:
    g = parse_graph(_read_text(args.graph), require_cubic_3ec=args.require_cubic_3ec)
    h = read_solution(_read_text(args.solution), g)
    verdict = verify(g, h)
    print('{} {}'.format(verdict, 'PASS' if verdict.passed else 'FAIL'))
    return globals.exit_ok if verdict.passed else globals.exit_fail


def cmd_oracle(args) -> int:
    g = _load_graph(args)
    result = opt_eulerian(g, limit=args.cap)
    line = globals.oracle_summary.format(opt=result.opt)
    tour = None
    if args.solution:
        tour = read_solution(_read_text(args.solution), g).edge_count
    elif g.is_cubic() and g.n >= 4:
        try:
            tour = solve(g)[1].tour_length
        except RejectedInputError as e:
            _logger.info("No solver tour to compare with: {}".format(e))
    if tour is not None:
        line += ' ' + globals.oracle_ratio.format(tour=tour, ratio=tour / result.opt)
    print(line)
    return globals.exit_ok


def cmd_bench(args) -> int:
    df = bench(args.family, sizes=args.sizes, seeds=args.seeds, jobs=args.jobs, strategy=args.strategy)
    if args.csv:
        _write_text(args.csv, df.to_csv(index=False))
    if args.plot:
        plot_ratios(df, out_file=args.plot)
    print(summary_table(df).to_string())
    failed = int((~df['passed'].astype(bool)).sum())
    if failed:
        _logger.error("{} of {} instances failed verification".format(failed, len(df)))
    return globals.exit_ok if not failed else globals.exit_fail


def cmd_generate(args) -> int:
    text = emit_graph(generate(args.name, seed=args.seed), fmt=args.format)
    if args.out:
        _write_text(args.out, text)
    else:
        sys.stdout.write(text)
    return globals.exit_ok


_COMMANDS = {
    'solve': cmd_solve,
    'verify': cmd_verify,
    'oracle': cmd_oracle,
    'bench': cmd_bench,
    'generate': cmd_generate,
}


def main(args) -> int:
    """
    Main entry point allowing external calls

    Parameters
    ----------
    args : list of str
        command line parameter list

    Returns
    -------
    code : int
        0 on success, 1 if a check failed, 2 if the input was rejected.
    """
    args = parse_args(args)
    setup_logging(args.loglevel)
    try:
        return _COMMANDS[args.command](args)
    except RejectedInputError as e:
        _logger.error("Rejected input: {}".format(e))
        return globals.exit_invalid
    except SolverError as e:
        _logger.error("Solver failed: {}".format(e))
        return globals.exit_fail


def run():
    """Entry point for console_scripts"""
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    run()
