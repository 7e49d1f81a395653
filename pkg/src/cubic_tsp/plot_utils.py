# -*- coding: utf-8 -*-
"""
Contains helper functions for plotting and tabulating bench results.
"""
import warnings
from pathlib import Path

import matplotlib.pyplot as plt
import numpy as np
import seaborn as sns

from cubic_tsp import globals


def _format_floats(x):
    """Format floats in the statistics table"""
    if isinstance(x, (float, np.floating)):
        if abs(x) < 0.000001:
            return "~ 0"
        elif abs(x) > 0.09:
            return np.format_float_positional(x, precision=3)
        else:
            return np.format_float_scientific(x, precision=2)
    else:
        return x


def make_watermark(fig, placement=globals.watermark_pos, offset=0.02):
    """
    Adds a watermark to fig and adjusts the current axis to make sure there
    is enough padding around the watermarks.
    Padding can be adjusted in globals.watermark_pad.
    Fontsize can be adjusted in globals.watermark_fontsize.
    plt.tight_layout needs to be called prior to make_watermark,
    because tight_layout does not take into account annotations.

    Parameters
    ----------
    fig : matplotlib.figure.Figure
    placement : str
        'top' : places watermark in top right corner
        'bottom' : places watermark in bottom left corner
    """
    fontsize = globals.watermark_fontsize
    pad = globals.watermark_pad
    height = fig.get_size_inches()[1]
    offset = offset + (((fontsize + pad) / globals.matplotlib_ppi) / height) * 2.2
    if placement == 'top':
        fig.axes[0].annotate(globals.watermark, xy=[0.5, 1], xytext=[-pad, -pad],
                             fontsize=fontsize, color='grey',
                             horizontalalignment='center', verticalalignment='top',
                             xycoords='figure fraction', textcoords='offset points')
        top = fig.subplotpars.top
        fig.subplots_adjust(top=top - offset)
    elif placement == 'bottom':
        fig.axes[0].annotate(globals.watermark, xy=[0.5, 0], xytext=[pad, pad],
                             fontsize=fontsize, color='grey',
                             horizontalalignment='center', verticalalignment='bottom',
                             xycoords='figure fraction', textcoords='offset points')
        bottom = fig.subplotpars.bottom
        fig.subplots_adjust(bottom=bottom + offset)
    else:
        raise NotImplementedError


def plot_ratios(df, out_file=None, watermark_pos=globals.watermark_pos, dpi=globals.dpi):
    """
    Boxplot of tour length / n per instance size, with a reference line at 4/3.

    Parameters
    ----------
    df : pandas.DataFrame
        Bench results with the columns 'n' and 'ratio_to_n'.
    out_file : str or Path, optional (default: None)
        Where to save the figure. Nothing is saved if None.
    watermark_pos : str or None, optional
        'top', 'bottom' or None for no watermark.
    dpi : int, optional

    Returns
    -------
    fig : matplotlib.figure.Figure
    ax : matplotlib.axes.Axes
    """
    sizes = sorted(df['n'].unique())
    width = max(globals.boxplot_min_width, globals.boxplot_width * len(sizes))
    fig, ax = plt.subplots(figsize=(width, globals.boxplot_height), dpi=dpi)
    sns.boxplot(data=df, x='n', y='ratio_to_n', order=sizes, color='white', ax=ax)
    ax.axhline(globals.ratio_limit, color='red', linestyle='--', linewidth=1, label='4/3')
    ax.set_xlabel('n')
    ax.set_ylabel('tour length / n')
    ax.set_title('Tour length per vertex ({} instances)'.format(len(df)), pad=globals.title_pad)
    ax.legend(loc='lower right')
    plt.tight_layout()
    if watermark_pos:
        make_watermark(fig, placement=watermark_pos)

    if out_file is not None:
        out_file = Path(out_file)
        if out_file.exists():
            warnings.warn('Overwriting file {}'.format(out_file.name))
        fig.savefig(out_file, dpi='figure', bbox_inches='tight')

    return fig, ax
