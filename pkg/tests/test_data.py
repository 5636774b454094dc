# -*- coding: utf-8 -*-
"""
test_data.py

Shared fixtures: presentations as text, small graphs, and group orders that
are known without coset enumeration.
"""
from __future__ import absolute_import, print_function
import itertools
import random

from fpknot.words import Word


KLEIN_233_TEXT = ("< a, b, c | a^4, b^4, c^4, (b*c)^3, (c*a)^3, "
                  "(a*b)^2*a^-2, a^2*b^-2, a^2*c^-2 >")

DYCK_235_TEXT = "< u, v | u^2, v^3, (u*v)^5 >"

CYCLIC4_TEXT = "< a | a^4 >"

# < a | a^4 > enumerated and standardized, 1-based.
CYCLIC4_JSON = ('{"alphabet": ["a"], "index": 4, '
                '"table": [[2, 3], [4, 1], [1, 4], [3, 2]]}')

PRESENTATION_FILE = """\
# the binary tetrahedral group, as a Klein bottle group
< a, b, c | a^4, b^4, c^4,
            (b*c)^3, (c*a)^3,
            (a*b)^2 = a^2 = b^2 = c^2 >
"""

# Orders of the spherical von Dyck groups <u, v | u^l, v^m, (uv)^n>.
DYCK_ORDERS = {
    (2, 2, 2): 4,
    (2, 2, 3): 6,
    (2, 2, 4): 8,
    (2, 2, 5): 10,
    (2, 3, 2): 6,
    (2, 3, 3): 12,
    (2, 3, 4): 24,
    (2, 3, 5): 60,
}

# Number of elements of each order in A4 and A5.
A4_PROFILE = {1: 1, 2: 3, 3: 8}
A5_PROFILE = {1: 1, 2: 15, 3: 20, 5: 24}

# name: (vertex count, edges, cut vertices)
GRAPHS = {
    'path': (3, [(0, 1), (1, 2)], [1]),
    'cycle': (4, [(0, 1), (1, 2), (2, 3), (3, 0)], []),
    'star': (5, [(0, 1), (0, 2), (0, 3), (0, 4)], [0]),
    'bowtie': (5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)], [2]),
    'two paths': (6, [(0, 1), (1, 2), (3, 4), (4, 5)], [1, 4]),
    'single vertex': (1, [], []),
    'edge': (2, [(0, 1)], []),
}


def random_word(rng, ngens, max_length=8):
    """A random freely reduced word on ngens generators."""
    length = rng.randint(0, max_length)
    return Word([(rng.randrange(ngens), rng.choice((1, -1)))
                 for _ in range(length)])


def random_edges(rng, n, p=0.3):
    return [(i, j) for i, j in itertools.combinations(range(n), 2)
            if rng.random() < p]


def seeded(seed=1234):
    return random.Random(seed)
