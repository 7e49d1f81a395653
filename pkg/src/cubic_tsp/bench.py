# -*- coding: utf-8 -*-

"""
Batch runs of the solver over families of instances, collected in a pandas DataFrame.
"""

import logging
import multiprocessing
import time

import pandas as pd

from cubic_tsp import globals
from cubic_tsp.assemble import solve
from cubic_tsp.exceptions import RejectedInputError
from cubic_tsp.generators import generate
from cubic_tsp.plot_utils import _format_floats

_logger = logging.getLogger(__name__)


def instances(family, sizes=(), seeds=()) -> list:
    """
    The (recipe, n, seed) triples of a bench run. The random family takes every even size
    with every seed; a named family is a single instance without a seed.
    """
    if family == 'random':
        odd = [n for n in sizes if n % 2]
        if odd:
            _logger.info("Skipping odd sizes {}".format(odd))
        return [(globals.random_recipe.format(n=n, seed=seed), n, seed)
                for n in sizes if n % 2 == 0 for seed in seeds]
    if family in globals.named_graphs:
        return [(family, None, None)]
    raise RejectedInputError("Unknown bench family '{}', use 'random' or one of {}".format(
        family, globals.named_graphs))


def run_instance(job) -> dict:
    """Solve one bench instance and return its result row."""
    (recipe, _, seed), family, strategy = job
    g = generate(recipe)
    start = time.perf_counter()
    tour, cert = solve(g, strategy=strategy)
    wall_time = time.perf_counter() - start

    row = dict(family=family, n=g.n, seed=seed, tour=cert.tour_length, bound=cert.bound,
               ratio_to_n=cert.tour_length / g.n, compressions=cert.compressions,
               split_offs=cert.split_offs, passed=cert.passed, wall_time=wall_time)
    row.update(cert.gadget_cases)
    _logger.debug("Bench {}: tour {} in {:.3f}s".format(recipe, cert.tour_length, wall_time))
    return row


def bench(family='random', sizes=(), seeds=(), jobs=1, strategy=globals.two_factor_strategy) -> pd.DataFrame:
    """
    Solve every instance of a family and collect one row per instance.

    Parameters
    ----------
    family : str
        'random' or a named graph.
    sizes : iterable of int
        Vertex counts of the random family.
    seeds : iterable of int
        Seeds of the random family.
    jobs : int, optional (default: 1)
        Worker processes; 1 runs in this process.
    strategy : str, optional
        2-factor strategy.

    Returns
    -------
    df : pandas.DataFrame
        Columns as in globals.bench_columns, in instance order.
    """
    work = [(inst, family, strategy) for inst in instances(family, sizes, seeds)]
    _logger.info("Bench of {} instances on {} worker(s)".format(len(work), jobs))
    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            rows = pool.map(run_instance, work)
    else:
        rows = [run_instance(job) for job in work]
    return pd.DataFrame(rows, columns=globals.bench_columns)


def summary_table(df) -> pd.DataFrame:
    """Count, mean, median and max of tour length, tour/n and wall time per size, formatted."""
    stats = df.groupby('n')[['tour', 'ratio_to_n', 'wall_time']].agg(globals.summary_stats)
    stats.columns = ['{} {}'.format(col, stat) for col, stat in stats.columns]
    return stats.apply(lambda col: col.map(_format_floats))
