# -*- coding: utf-8 -*-

"""
Settings and global variables used by the solver, the oracle, the file formats and the plots
"""

# === solver defaults ===
min_cycle_length = 5  # shortest 2-factor cycle accepted (smaller graphs: n)
two_factor_strategies = ['reduction', 'search']  # the first one is the default
two_factor_strategy = two_factor_strategies[0]
search_budget = 20000  # branch nodes visited by the 2-factor search before it gives up
exhaustive_cap = 16  # the search falls back to perfect matching enumeration up to this many vertices
essential_cut_cutoff = 4  # flow value that proves a vertex pair lies on the same side of every 3-cut

# === expansion gadgets ===
# maximum number of internal edge copies when a super-vertex of degree 2 (4) is expanded
gadget_budget = {2: 5, 4: 4}
gadget_cases = ['deg2-adjacent', 'deg2-distance2', 'deg4-default', 'deg4-cut']
max_multiplicity = 2  # an edge of the input graph is used at most twice

# === oracle ===
oracle_cap = 12  # largest vertex count the brute force oracle accepts

# === generator recipes ===
named_graphs = ['k4', 'prism', 'petersen', 'moebius-kantor', 'k33', 'cube', 'k34']
random_recipe = 'random:n={n:d},seed={seed:d}'
random_recipe_noseed = 'random:n={n:d}'
random_attempts = 1000  # edge pairs drawn per growth step before giving up

# === command line ranges ===
range_templ = '{start:d}..{stop:d}'
range_step_templ = '{start:d}..{stop:d}:{step:d}'

# === file formats ===
edgelist_header = '{n:d} {m:d}'
edgelist_row = '{u:d} {v:d}'
graph_formats = ['edgelist', 'json']
solution_fields = ['n', 'edges', 'certificate']
certificate_fields = ['n', 'tour_length', 'bound', 'four_thirds_cap', 'held_karp', 'components',
                      'compressions', 'split_offs', 'reductions', 'gadget_cases', 'verdict']
json_indent = 2

# === verdict checks, in report order ===
verdict_checks = ['known-edges', 'spanning', 'connected', 'all-even', 'multiplicity',
                  'four-thirds', 'refined-bound', 'tour']  # 'tour' only when solve produced a walk
refined_bound_min_n = 6  # the -2 refinement holds from this vertex count on

# === bench ===
bench_columns = ['family', 'n', 'seed', 'tour', 'bound', 'ratio_to_n', 'compressions', 'split_offs'] \
                + gadget_cases + ['passed', 'wall_time']
summary_stats = ['count', 'mean', 'median', 'max']

# === DOT export ===
dot_styles = {
    2: 'color="red", style="bold,dashed", penwidth=2',  # doubled edges
    1: 'style="solid"',  # single edges
    0: 'color="gray", style="dotted"',  # edges outside the solution
}

# === plot defaults ===
matplotlib_ppi = 72  # Don't change this, it's a matplotlib convention.
dpi = 100  # Resolution in which plots are going to be rendered.
title_pad = 12.0  # Padding below the title in points.
boxplot_height = 6
boxplot_width = 0.6  # times the number of boxes
boxplot_min_width = 6
ratio_limit = 4 / 3  # reference line drawn in the bench plot

# === watermark defaults ===
watermark = u'made with cubic_tsp'  # Watermark string
watermark_pos = 'bottom'  # Default position ('top' or 'bottom' or None)
watermark_fontsize = 8  # fontsize in points (matplotlib uses 72ppi)
watermark_pad = 5  # padding above/below watermark in points (matplotlib uses 72ppi)

# === command line ===
exit_ok = 0
exit_fail = 1
exit_invalid = 2  # rejected input
solve_summary = 'n={n} tour={tour} ≤ {bound} {status}'
oracle_summary = 'opt={opt}'
oracle_ratio = 'tour={tour} ratio={ratio:.4f}'
log_format = '[%(asctime)s] %(levelname)s:%(name)s:%(message)s'
log_datefmt = '%Y-%m-%d %H:%M:%S'
