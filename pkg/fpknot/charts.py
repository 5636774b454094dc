# -*- coding: utf-8 -*-
"""
charts.py

Charting functions for fpknot.
"""
from __future__ import absolute_import, print_function
import logging

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt
import networkx as nx

from .cayley import articulation_points

logger = logging.getLogger(__name__)

LAYOUTS = ('spring', 'circular', 'shell')


def draw_cayley(graph, highlight=None, layout='spring', seed=0,
                title=None):
    """Draws a Cayley graph, marking its cut vertices.

    Args:
        graph (SimpleGraph): the graph, usually from ``build_cayley``.

        highlight (list of int): vertices drawn in red. Default is the
            articulation points of the graph, so a graph with no cut vertex
            is drawn in a single colour.

        layout ('spring' | 'circular' | 'shell'): the networkx layout.
            'spring' is seeded with ``seed`` so the picture is reproducible.

        title (str): the chart title. Default lists the vertex and cut
            vertex counts.

    Returns:
        fig (matplotlib.figure.Figure):
            a matplotlib figure. The figure may be altered or saved after it
            is returned.

        ax (matplotlib.axes.Axes):
            a matplotlib chart.
    """
    if layout not in LAYOUTS:
        print("The layout '", layout, "' is not recognized as an option. "
              "Using layout='spring' instead.")
        layout = 'spring'
    if highlight is None:
        highlight = articulation_points(graph)
    g = graph.to_networkx()
    if layout == 'circular':
        pos = nx.circular_layout(g)
    elif layout == 'shell':
        pos = nx.shell_layout(g)
    else:
        pos = nx.spring_layout(g, seed=seed)
    marked = set(highlight)
    colours = ['tab:red' if v in marked else 'tab:blue' for v in g.nodes()]
    fig, ax = plt.subplots(1, 1, figsize=(7, 7))
    nx.draw_networkx_edges(g, pos, ax=ax, alpha=0.5)
    nx.draw_networkx_nodes(g, pos, ax=ax, node_color=colours, node_size=60)
    if title is None:
        title = '{} vertices, {} cut vertices'.format(graph.n, len(marked))
    ax.set_title(title)
    ax.set_axis_off()
    logger.debug("drew Cayley graph with %d vertices", graph.n)
    return fig, ax


def element_order_histogram(profile, title=None):
    """Bar chart of how many group elements have each order.

    Args:
        profile (pandas.Series): counts indexed by order, as returned by
            ``perms.order_profile``.

    Returns:
        fig (matplotlib.figure.Figure), ax (matplotlib.axes.Axes)
    """
    fig, ax = plt.subplots(1, 1)
    ax.bar([str(order) for order in profile.index], profile.values)
    ax.set_xlabel('Element order')
    ax.set_ylabel('Number of elements')
    if title is not None:
        ax.set_title(title)
    return fig, ax
