# -*- coding: utf-8 -*-
"""
cayley.py

Cayley graphs of finite groups, read off regular permutation
representations, and their articulation points (cut vertices).

Edge directions and multiplicities do not matter for cut vertices, so a
Cayley graph is kept as a simple undirected graph: loops from involutions
that fix a vertex are dropped and parallel edges are merged.

Example::

    >>> from fpknot import dyck_group, enumerate_cosets
    >>> from fpknot.perms import perm_rep
    >>> rep = perm_rep(enumerate_cosets(dyck_group((2, 3, 3))))
    >>> articulation_points(build_cayley(rep, ['u', 'v']))
    []
"""
from __future__ import absolute_import, print_function
import json
import logging

import networkx as nx

from .exceptions import AlphabetMismatchError, NotRegularError, ParameterError

logger = logging.getLogger(__name__)


class SimpleGraph(object):
    """An undirected graph without loops or multiple edges.

    Args:
        n (int): number of vertices, labelled 0 .. n-1.
        edges (iterable of pairs): edges in any order or orientation;
            loops and repeated edges are dropped.

    Raises:
        ValueError: when an edge mentions a vertex out of range.
    """

    def __init__(self, n, edges=()):
        self.n = int(n)
        pairs = set()
        for i, j in edges:
            i, j = int(i), int(j)
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError("edge ({}, {}) is outside the {} vertices"
                                 .format(i, j, self.n))
            if i != j:
                pairs.add((min(i, j), max(i, j)))
        self.edges = sorted(pairs)
        self.adjacency = [[] for _ in range(self.n)]
        for i, j in self.edges:
            self.adjacency[i].append(j)
            self.adjacency[j].append(i)
        for neighbours in self.adjacency:
            neighbours.sort()

    def degree(self, v):
        return len(self.adjacency[v])

    def neighbours(self, v):
        return list(self.adjacency[v])

    def components(self, removed=None):
        """Number of connected components, optionally without one vertex."""
        seen = [False] * self.n
        if removed is not None:
            seen[removed] = True
        count = 0
        for start in range(self.n):
            if seen[start]:
                continue
            count += 1
            seen[start] = True
            stack = [start]
            while stack:
                v = stack.pop()
                for w in self.adjacency[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
        return count

    def is_connected(self):
        return self.components() <= 1

    def to_dict(self):
        return {'n': self.n, 'edges': [list(e) for e in self.edges]}

    def to_json(self):
        return json.dumps(self.to_dict())

    def to_networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    def __eq__(self, other):
        return (isinstance(other, SimpleGraph) and other.n == self.n and
                other.edges == self.edges)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'SimpleGraph(n={}, edges={})'.format(self.n, len(self.edges))


def build_cayley(r, gens=None):
    """The Cayley graph of a group on a set of generators.

    Args:
        r (PermRep): a regular representation; its cosets are the vertices.
        gens (iterable of str): generator names; None means all of them.

    Returns:
        SimpleGraph: an edge {i, i.g} for each vertex i and generator g.

    Raises:
        NotRegularError: when r is not regular.
        ParameterError: when gens is empty.
        AlphabetMismatchError: for an unknown generator name.
    """
    if not r.is_regular:
        raise NotRegularError("Cayley graphs need a regular representation")
    if gens is None:
        gens = list(r.alphabet)
    gens = list(gens)
    if not gens:
        raise ParameterError("a Cayley graph needs at least one generator")
    edges = []
    for name in gens:
        if name not in r.alphabet:
            raise AlphabetMismatchError("unknown generator {!r}; the alphabet "
                                        "is {}".format(name, list(r.alphabet)))
        perm = r.images[r.alphabet.index(name)]
        edges.extend((i, int(perm[i])) for i in range(r.degree))
    graph = SimpleGraph(r.degree, edges)
    logger.debug("Cayley graph on %s: %d vertices, %d edges", gens, graph.n,
                 len(graph.edges))
    return graph


def articulation_points(g):
    """The cut vertices of a graph, in increasing order.

    A depth-first search with low-links, run with an explicit stack so that
    large graphs do not hit the recursion limit. A vertex is a cut vertex
    when its removal increases the number of connected components.

    Args:
        g (SimpleGraph): the graph.

    Returns:
        list of int: sorted cut vertices.
    """
    discovery = {}
    low = {}
    points = set()
    for start in range(g.n):
        if start in discovery:
            continue
        discovery[start] = low[start] = len(discovery)
        root_children = 0
        stack = [(start, start, iter(g.adjacency[start]))]
        while stack:
            grandparent, parent, children = stack[-1]
            child = next(children, None)
            if child is not None:
                if child == grandparent:
                    continue
                if child in discovery:
                    low[parent] = min(low[parent], discovery[child])
                else:
                    discovery[child] = low[child] = len(discovery)
                    stack.append((parent, child, iter(g.adjacency[child])))
                continue
            stack.pop()
            if len(stack) > 1:
                if low[parent] >= discovery[grandparent]:
                    points.add(grandparent)
                low[grandparent] = min(low[parent], low[grandparent])
            elif stack:
                root_children += 1
        if root_children > 1:
            points.add(start)
    return sorted(points)
