# -*- coding: utf-8 -*-
"""
cosets.py

Todd-Coxeter coset enumeration of a finitely presented group relative to a
finitely generated subgroup.

The enumerator uses the relator-based (HLT) strategy: every live coset, in
order, has every relator scanned and filled from it, and then any entry of
its row that is still undefined gets a new coset. Coincidences are processed
at once with a union-find structure whose survivor is always the smaller
coset number. A lookahead pass (scanning without new definitions) runs when
the live cosets pass three quarters of the limit, and again whenever the
limit is reached.

Running out of room is not an error: infinite groups are ordinary inputs,
so ``enumerate_cosets`` returns an ``Overflow`` value instead of a table.

Columns of a table are ordered generators first, then inverses::

    a, b, c, a^-1, b^-1, c^-1

Cosets are numbered 0 .. index-1 in Python and 1 .. index in JSON; coset 0
(JSON 1) is the subgroup itself.

Example::

    >>> from fpknot import parse_presentation, enumerate_cosets
    >>> table = enumerate_cosets(parse_presentation("< a | a^4 >"))
    >>> table.index
    4
"""
from __future__ import absolute_import, print_function
import json
import logging
import os

import numpy as np

from . import typing
from .exceptions import (AlphabetMismatchError, IncompleteTableError,
                         ParameterError)
from .words import Presentation, Word, alphabet_names, parse_word

logger = logging.getLogger(__name__)

DEFAULT_MAX_COSETS = 65536
ENV_MAX_COSETS = 'FPKNOT_MAX_COSETS'
# Without an explicit cap, an enumeration may define at most this many
# cosets per allowed live coset before it gives up.
DEFINITIONS_PER_COSET = 64
STRATEGIES = ('hlt', 'hlt-reversed')


class EnumLimits(object):
    """Resource limits for one enumeration.

    Args:
        max_cosets (int): most live cosets allowed at any time.
        max_definitions (int or None): most cosets defined in total; None
            means ``DEFINITIONS_PER_COSET * max_cosets``.
    """

    def __init__(self, max_cosets=DEFAULT_MAX_COSETS, max_definitions=None):
        if max_cosets is None:
            max_cosets = DEFAULT_MAX_COSETS
        self.max_cosets = typing.check_max_cosets(max_cosets)
        if max_definitions is not None:
            max_definitions = typing.check_max_cosets(max_definitions)
        self.max_definitions = max_definitions

    @property
    def definition_cap(self):
        if self.max_definitions is not None:
            return self.max_definitions
        return DEFINITIONS_PER_COSET * self.max_cosets

    def __repr__(self):
        return 'EnumLimits(max_cosets={}, max_definitions={})'.format(
            self.max_cosets, self.max_definitions)


def default_limits(max_cosets=None):
    """EnumLimits from an explicit value, FPKNOT_MAX_COSETS, or the default."""
    if max_cosets is None:
        max_cosets = os.environ.get(ENV_MAX_COSETS) or DEFAULT_MAX_COSETS
    return EnumLimits(typing.check_max_cosets(max_cosets))


class Overflow(object):
    """The result of an enumeration that ran out of room.

    An Overflow is falsy, so ``if table:`` separates finished tables from
    exhausted enumerations.
    """

    def __init__(self, limit, stats):
        self.limit = limit
        self.stats = dict(stats)

    def __bool__(self):
        return False

    __nonzero__ = __bool__

    def to_dict(self):
        return {'overflow': True, 'limit': self.limit}

    def __repr__(self):
        return 'Overflow(limit={}, defined={})'.format(
            self.limit, self.stats.get('defined'))


class CosetTable(object):
    """A complete, standardized coset table.

    ``table[i, x]`` is the coset reached from coset i by column x, where
    columns are the generators followed by their inverses. The array is
    read-only.

    Args:
        alphabet: generator names (or a Presentation).
        rows: array-like of shape (index, 2 * ngens), 0-based entries.
        presentation (Presentation): the enumerated group, if known.
        subgroup (sequence of Word): the subgroup generators, if known.
        stats (dict): enumeration statistics.
    """

    def __init__(self, alphabet, rows, presentation=None, subgroup=(),
                 stats=None):
        self.alphabet = alphabet_names(alphabet)
        ncols = 2 * len(self.alphabet)
        table = np.array(rows, dtype=np.int64)
        if ncols:
            table = table.reshape(-1, ncols)
        else:
            # the trivial group has no columns, so -1 cannot be inferred
            table = table.reshape(len(rows), 0)
        table.setflags(write=False)
        self.table = table
        self.presentation = presentation
        self.subgroup = tuple(subgroup)
        self.stats = dict(stats or {})

    @property
    def index(self):
        return int(self.table.shape[0])

    @property
    def ngens(self):
        return len(self.alphabet)

    def column(self, letter):
        """Column of a letter ``(index, sign)``."""
        index, sign = letter
        return index if sign > 0 else index + self.ngens

    def image(self, coset, word):
        """The coset reached from ``coset`` by reading ``word``."""
        table = self.table
        ngens = self.ngens
        for index, sign in word.letters:
            coset = table[coset, index if sign > 0 else index + ngens]
        return int(coset)

    def is_closed_under(self, word):
        """True when ``word`` traces a closed loop at every coset."""
        return all(self.image(i, word) == i for i in range(self.index))

    def is_consistent(self):
        ngens = self.ngens
        for i in range(self.index):
            for x in range(2 * ngens):
                j = self.table[i, x]
                if self.table[j, (x + ngens) % (2 * ngens)] != i:
                    return False
        return True

    def is_standard(self):
        return standardize(self) == self

    def to_dict(self):
        return {'alphabet': list(self.alphabet),
                'index': self.index,
                'table': (self.table + 1).tolist()}

    def to_json(self):
        """Table JSON with 1-based cosets; byte-identical across runs."""
        return json.dumps(self.to_dict(), separators=(', ', ': '))

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        rows = np.array(data['table'], dtype=np.int64) - 1
        table = cls(data['alphabet'], rows)
        if table.index != data['index']:
            raise IncompleteTableError("table has {} rows but index {}"
                                       .format(table.index, data['index']))
        return table

    def __eq__(self, other):
        return (isinstance(other, CosetTable) and
                other.alphabet == self.alphabet and
                other.table.shape == self.table.shape and
                bool(np.array_equal(other.table, self.table)))

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'CosetTable(alphabet={}, index={})'.format(
            list(self.alphabet), self.index)


class _NoSpace(Exception):
    pass


class _Enumerator(object):
    """HLT enumeration state for one presentation and subgroup."""

    def __init__(self, ngens, relators, subgroup, limits):
        self.ngens = ngens
        self.ncols = 2 * ngens
        self.relators = [self._columns(r) for r in relators]
        self.subgroup = [self._columns(w) for w in subgroup]
        self.limits = limits
        self.table = [[None] * self.ncols]
        self.p = [0]
        self.live = 1
        self.stats = {'defined': 1, 'merges': 0, 'max_live': 1,
                      'lookaheads': 0}
        self._looked_ahead = False
        self.min_recovery = max(1, limits.max_cosets // 16)

    def _columns(self, word):
        ngens = self.ngens
        return [i if s > 0 else i + ngens for i, s in word.letters]

    def inv(self, x):
        return (x + self.ngens) % self.ncols

    def define(self, alpha, x):
        if self.live >= self.limits.max_cosets:
            raise _NoSpace()
        if len(self.table) >= self.limits.definition_cap:
            raise _NoSpace()
        beta = len(self.table)
        self.table.append([None] * self.ncols)
        self.p.append(beta)
        self.table[alpha][x] = beta
        self.table[beta][self.inv(x)] = alpha
        self.live += 1
        self.stats['defined'] += 1
        if self.live > self.stats['max_live']:
            self.stats['max_live'] = self.live

    def rep(self, k):
        p = self.p
        root = k
        while p[root] != root:
            root = p[root]
        while p[k] != root:
            p[k], k = root, p[k]
        return root

    def merge(self, k, lam, queue):
        phi = self.rep(k)
        psi = self.rep(lam)
        if phi != psi:
            mu, v = min(phi, psi), max(phi, psi)
            self.p[v] = mu
            queue.append(v)
            self.live -= 1
            self.stats['merges'] += 1

    def coincidence(self, alpha, beta):
        table = self.table
        queue = []
        self.merge(alpha, beta, queue)
        head = 0
        while head < len(queue):
            gamma = queue[head]
            head += 1
            for x in range(self.ncols):
                delta = table[gamma][x]
                if delta is None:
                    continue
                xi = self.inv(x)
                table[delta][xi] = None
                mu = self.rep(gamma)
                nu = self.rep(delta)
                if table[mu][x] is not None:
                    self.merge(nu, table[mu][x], queue)
                elif table[nu][xi] is not None:
                    self.merge(mu, table[nu][xi], queue)
                else:
                    table[mu][x] = nu
                    table[nu][xi] = mu

    def scan(self, alpha, word, fill):
        table = self.table
        f = b = alpha
        i = 0
        j = len(word) - 1
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][self.inv(word[j])] is not None:
                b = table[b][self.inv(word[j])]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if j == i:
                table[f][word[i]] = b
                table[b][self.inv(word[i])] = f
                return
            if not fill:
                return
            self.define(f, word[i])

    def lookahead(self):
        self.stats['lookaheads'] += 1
        before = self.live
        p = self.p
        for beta in range(len(self.table)):
            if p[beta] != beta:
                continue
            for w in self.relators:
                self.scan(beta, w, fill=False)
                if p[beta] != beta:
                    break
        logger.debug("lookahead: %d -> %d live cosets", before, self.live)
        return before - self.live

    def process(self, alpha):
        p = self.p
        if alpha == 0:
            for w in self.subgroup:
                self.scan(0, w, fill=True)
        for w in self.relators:
            if p[alpha] != alpha:
                return
            self.scan(alpha, w, fill=True)
        for x in range(self.ncols):
            if p[alpha] != alpha:
                return
            if self.table[alpha][x] is None:
                self.define(alpha, x)

    def run(self):
        alpha = 0
        threshold = 3 * self.limits.max_cosets
        while True:
            while alpha < len(self.table):
                if self.p[alpha] == alpha:
                    if not self._looked_ahead and 4 * self.live > threshold:
                        self._looked_ahead = True
                        self.lookahead()
                        if self.p[alpha] != alpha:
                            alpha += 1
                            continue
                    try:
                        self.process(alpha)
                    except _NoSpace:
                        if (len(self.table) >= self.limits.definition_cap or
                                self.lookahead() < self.min_recovery):
                            return False
                        continue
                alpha += 1
            # coincidences can reopen entries of rows already processed
            alpha = self.first_open_row()
            if alpha is None:
                return True

    def first_open_row(self):
        for alpha, row in enumerate(self.table):
            if self.p[alpha] == alpha and None in row:
                return alpha
        return None

    def live_rows(self):
        """The complete table restricted to live cosets, renumbered."""
        live = [i for i in range(len(self.table)) if self.p[i] == i]
        new_of = dict((old, new) for new, old in enumerate(live))
        return [[new_of[self.rep(self.table[old][x])]
                 for x in range(self.ncols)] for old in live]


def _as_word(w, g):
    if isinstance(w, Word):
        return g.check_word(w)
    return parse_word(w, g)


def enumerate_cosets(g, h=(), limits=None, strategy='hlt'):
    """Enumerates the cosets of the subgroup generated by ``h`` in ``g``.

    Args:
        g (Presentation): the group.
        h (sequence of Word or str): subgroup generators over g's alphabet;
            empty for the trivial subgroup.
        limits (EnumLimits): resource limits; None uses ``default_limits()``.
        strategy (str): 'hlt' scans relators in presentation order,
            'hlt-reversed' in reverse order. Standardized results agree.

    Returns:
        CosetTable: complete and standardized, with ``index`` = [G : H], or
        Overflow: when the limits were reached first.

    Raises:
        AlphabetMismatchError: when a subgroup generator uses letters outside
            g's alphabet.
        ParameterError: for invalid limits or an unknown strategy.

    Example::

        >>> from fpknot.builders import klein_group
        >>> enumerate_cosets(klein_group((2, 3, 3))).index
        48
    """
    if not isinstance(g, Presentation):
        raise ParameterError("expected a Presentation, got {!r}".format(g))
    if limits is None:
        limits = default_limits()
    if not isinstance(limits, EnumLimits):
        raise ParameterError("limits should be an EnumLimits. Actual value: "
                             "{!r}".format(limits))
    if strategy not in STRATEGIES:
        raise ParameterError("strategy should be one of {}. Actual value: {!r}"
                             .format(STRATEGIES, strategy))
    subgroup = [_as_word(w, g) for w in h]
    relators = list(g.relators)
    if strategy == 'hlt-reversed':
        relators.reverse()
        scan_subgroup = list(reversed(subgroup))
    else:
        scan_subgroup = subgroup
    worker = _Enumerator(g.ngens, relators, scan_subgroup, limits)
    finished = worker.run()
    stats = dict(worker.stats)
    if not finished:
        logger.info("enumeration over %s stopped at the limit of %d cosets",
                    list(g.names), limits.max_cosets)
        return Overflow(limits.max_cosets, stats)
    table = standardize(worker.live_rows(), alphabet=g.names)
    logger.debug("enumeration over %s finished: index %d, stats %s",
                 list(g.names), table.index, stats)
    return CosetTable(g.names, table.table, presentation=g,
                      subgroup=subgroup, stats=stats)


def standardize(t, alphabet=None):
    """Renumbers cosets in first-appearance order.

    Rows are visited in increasing new number and columns in the fixed
    generators-then-inverses order; each coset gets the next number the
    first time it is seen. Coset 0 stays 0. Standardizing twice changes
    nothing.

    Args:
        t (CosetTable or list of rows): a complete, consistent table.
        alphabet: generator names, needed when ``t`` is a list of rows.

    Returns:
        CosetTable: the standardized table.

    Raises:
        IncompleteTableError: when an entry is undefined or some coset cannot
            be reached from coset 0.
    """
    if isinstance(t, CosetTable):
        rows = t.table.tolist()
        names = t.alphabet
        extra = dict(presentation=t.presentation, subgroup=t.subgroup,
                     stats=t.stats)
    else:
        rows = [list(r) for r in t]
        if alphabet is None:
            raise AlphabetMismatchError("a list of rows needs an alphabet")
        names = alphabet_names(alphabet)
        extra = {}
    ncols = 2 * len(names)
    if not rows:
        raise IncompleteTableError("a coset table has at least one coset")
    new_of = {0: 0}
    order = [0]
    head = 0
    while head < len(order):
        row = rows[order[head]]
        head += 1
        if len(row) != ncols:
            raise IncompleteTableError("row has {} entries, expected {}"
                                       .format(len(row), ncols))
        for target in row:
            if target is None:
                raise IncompleteTableError("coset table has undefined "
                                           "entries")
            if target not in new_of:
                new_of[target] = len(order)
                order.append(target)
    if len(order) != len(rows):
        raise IncompleteTableError("{} of {} cosets are unreachable from the "
                                   "subgroup coset"
                                   .format(len(rows) - len(order), len(rows)))
    new_rows = [[new_of[target] for target in rows[old]] for old in order]
    return CosetTable(names, new_rows, **extra)
