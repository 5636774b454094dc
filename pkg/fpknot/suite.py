# -*- coding: utf-8 -*-
"""
suite.py

The acceptance battery: every group-theoretic claim about the Klein bottles
that a finite computation can certify, each compared with a value computed
independently (brute-force counts of matrices and permutations, exact
rational arithmetic, or a plain statement of the expected outcome).

Each check returns rows of ``(item, expected, computed)``; a check passes
when every row agrees. ``run_suite`` runs the checks, optionally on a thread
pool, and collects the rows in a pandas DataFrame in registration order.

A fault can be injected into any check that builds presentations: the first
relator of each presentation it builds is replaced with that relator's first
generator, which changes the group.

Example::

    >>> report = run_suite()
    >>> report.passed
    True
"""
from __future__ import absolute_import, print_function
import itertools
import logging
import random
import time
from collections import OrderedDict
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pandas as pd
import sympy

from . import abelian, builders, cayley, perms, rewrite
from .cosets import EnumLimits, enumerate_cosets
from .exceptions import FPKnotException, ParameterError
from .words import Presentation, Word, cyclic_normal_form, substitute

logger = logging.getLogger(__name__)

# Small enough to stop quickly on the infinite von Dyck group.
HYPERBOLIC_LIMIT = EnumLimits(1024, max_definitions=16384)
SNF_SAMPLES = 100
SNF_SEED = 20170


def sl2_order(q):
    """Brute-force count of 2x2 matrices over Z/q with determinant 1."""
    values = np.arange(q)
    a, b, c, d = np.meshgrid(values, values, values, values, indexing='ij')
    return int(np.count_nonzero((a * d - b * c) % q == 1))


def alternating_order(k):
    """Brute-force count of the even permutations of k letters."""
    count = 0
    for perm in itertools.permutations(range(k)):
        inversions = sum(1 for i in range(k) for j in range(i + 1, k)
                         if perm[i] > perm[j])
        count += inversions % 2 == 0
    return count


def minor_gcds(rows):
    """Products d1...dk from the gcd of the k x k minors, k = 1, 2, ..."""
    matrix = sympy.Matrix(rows)
    r, c = matrix.shape
    products = []
    for k in range(1, min(r, c) + 1):
        g = 0
        for rs in itertools.combinations(range(r), k):
            for cs in itertools.combinations(range(c), k):
                g = sympy.gcd(g, matrix.extract(list(rs), list(cs)).det())
        products.append(abs(int(g)))
    return products


class _Inputs(object):
    """Builders for one check, corrupting every presentation when faulty."""

    def __init__(self, fault=False):
        self.fault = fault

    def _maybe_fault(self, pres):
        if not self.fault or not pres.relators:
            return pres
        first = pres.relators[0]
        wrong = Word([first.letters[0]])
        return Presentation(pres.generators, (wrong,) + pres.relators[1:])

    def __getattr__(self, name):
        build = getattr(builders, name)

        def faulty(*args, **kwargs):
            return self._maybe_fault(build(*args, **kwargs))
        return faulty


def _regular(pres):
    table = enumerate_cosets(pres)
    if not table:
        return table, None
    return table, perms.perm_rep(table)


def check_orders(inputs):
    rows = []
    for delta in (3, 5):
        table, _ = _regular(inputs.klein_group((2, 3, delta)))
        expected = 2 * sl2_order(delta)
        rows.append(('|klein(2,3,{})|'.format(delta), expected,
                     table.index if table else 'overflow'))
        if table:
            report = perms.sign_map_report(table, delta)
            rows.append(('kernel order, delta={}'.format(delta),
                         sl2_order(delta), report.kernel_order))
    return rows


def check_meridians(inputs):
    rows = []
    for delta in (3, 5):
        table, rep = _regular(inputs.klein_group((2, 3, delta)))
        if rep is None:
            rows.append(('klein(2,3,{}) enumerates'.format(delta), True,
                         False))
            continue
        orders = [perms.element_order(g, rep) for g in 'abc']
        rows.append(('orders of a, b, c, delta={}'.format(delta), [4, 4, 4],
                     orders))
        squares = [rep.word_permutation(w) for w in ('a^2', 'b^2', 'c^2')]
        equal = bool(np.array_equal(squares[0], squares[1]) and
                     np.array_equal(squares[1], squares[2]))
        rows.append(('a^2 = b^2 = c^2, delta={}'.format(delta), True, equal))
    return rows


def check_splitting(inputs):
    rows = []
    for delta, split in ((3, False), (5, True)):
        table, _ = _regular(inputs.klein_group((2, 3, delta)))
        if not table:
            rows.append(('klein(2,3,{}) enumerates'.format(delta), True,
                         False))
            continue
        report = perms.sign_map_report(table, delta)
        rows.append(('quotient Z/2, delta={}'.format(delta), True,
                     report.quotient_ok))
        rows.append(('split, delta={}'.format(delta), split, report.split))
    return rows


def check_double_cover(inputs):
    rows = []
    for delta, factors in ((3, [3]), (5, [])):
        params = (2, 3, delta)
        order = alternating_order(4 if delta == 3 else 5)
        group = inputs.klein_group(params)
        cover = rewrite.double_cover(params, group=group).presentation
        certificate = rewrite.dyck_certificate(params, group=group)
        rows.append(('|dbc(2,3,{})|'.format(delta), order,
                     certificate.cover_order))
        rows.append(('H1 of dbc(2,3,{})'.format(delta), factors,
                     abelian.abelianization(cover).factors))
        rows.append(('dbc(2,3,{}) = dyck(2,3,{})'.format(delta, delta), True,
                     bool(certificate)))
    return rows


def check_paper_double_cover(inputs):
    rows = []
    for delta in (3, 5):
        params = (2, 3, delta)
        fillings = builders.branch_fillings()
        filled = inputs.paper_double_cover(
            params, basepoint=True).add_relators(fillings)
        table = enumerate_cosets(filled)
        rows.append(('|paper dbc(2,3,{}) filled|'.format(delta),
                     alternating_order(4 if delta == 3 else 5),
                     table.index if table else 'overflow'))
        literal = inputs.paper_double_cover(params).add_relators(fillings)
        rows.append(('free rank without basepoint, delta={}'.format(delta),
                     1, abelian.abelianization(literal).free_rank))
    return rows


def check_wirtinger(inputs):
    rows = []
    to_klein, from_klein = builders.wirtinger_images()
    for delta in (3, 5):
        params = (2, 3, delta)
        klein = inputs.klein_group(params)
        wirtinger = inputs.klein_group_from_wirtinger(params)
        klein_table, klein_rep = _regular(klein)
        wirt_table, wirt_rep = _regular(wirtinger)
        if klein_rep is None or wirt_rep is None:
            rows.append(('both enumerate, delta={}'.format(delta), True,
                         False))
            continue
        rows.append(('orders, delta={}'.format(delta),
                     [2 * sl2_order(delta)] * 2,
                     [klein_table.index, wirt_table.index]))
        forward = bool(perms.hom_check(wirtinger, to_klein, klein_rep)) and \
            perms.is_surjective(to_klein, klein_rep)
        backward = bool(perms.hom_check(klein, from_klein, wirt_rep)) and \
            perms.is_surjective(from_klein, wirt_rep)
        rows.append(('mutual surjections, delta={}'.format(delta),
                     [True, True], [forward, backward]))
    return rows


ABELIAN_PARAMS = ((2, 3, 3), (2, 3, 5), (4, 3, 5), (2, 5, 7), (-2, 3, 3))


def check_abelianization(inputs):
    return [('H1 of klein{}'.format(p), [2],
             abelian.abelianization(inputs.klein_group(p)).factors)
            for p in ABELIAN_PARAMS]


def check_triangles(inputs):
    rows = []
    for triple, expected in (((2, 3, 3), ('spherical', 24)),
                             ((2, 3, 5), ('spherical', 120)),
                             ((2, 3, 6), ('euclidean', None)),
                             ((2, 3, 7), ('hyperbolic', None))):
        tc = abelian.classify_triangle(*triple)
        rows.append(('classify{}'.format(triple), list(expected),
                     [tc.kind, tc.coxeter_order]))
    table = enumerate_cosets(inputs.dyck_group((2, 3, 7)),
                             limits=HYPERBOLIC_LIMIT)
    rows.append(('dyck(2,3,7) overflows', True, not table))
    return rows


def check_howlett(inputs):
    rows = []
    for triple, expected in (((2, 3, 3), 1), ((4, 5, 7), 1),
                             ((2, 4, 6), 'error'), ((3, 3, 3), 'error')):
        try:
            computed = abelian.howlett_rank(triple)
        except ParameterError:
            computed = 'error'
        rows.append(('howlett_rank{}'.format(triple), expected, computed))
    return rows


def _graph_fixtures():
    yield 'path P3', cayley.SimpleGraph(3, [(0, 1), (1, 2)])
    yield 'cycle C4', cayley.SimpleGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    yield 'star K1,4', cayley.SimpleGraph(5, [(0, i) for i in range(1, 5)])
    yield 'bowtie', cayley.SimpleGraph(5, [(0, 1), (1, 2), (2, 0), (2, 3),
                                           (3, 4), (4, 2)])
    yield 'two components', cayley.SimpleGraph(6, [(0, 1), (1, 2), (3, 4),
                                                   (4, 5)])


def brute_force_cut_vertices(graph):
    base = graph.components()
    return [v for v in range(graph.n) if graph.components(removed=v) > base]


def check_cut_vertices(inputs):
    rows = []
    for delta in (3, 5):
        table, rep = _regular(inputs.dyck_group((2, 3, delta)))
        if rep is None:
            rows.append(('dyck(2,3,{}) enumerates'.format(delta), True,
                         False))
            continue
        graph = cayley.build_cayley(rep, ['u', 'v'])
        rows.append(('Cayley graph of dyck(2,3,{})'.format(delta),
                     [alternating_order(4 if delta == 3 else 5), []],
                     [graph.n, cayley.articulation_points(graph)]))
    for name, graph in _graph_fixtures():
        rows.append(('cut vertices of {}'.format(name),
                     brute_force_cut_vertices(graph),
                     cayley.articulation_points(graph)))
    return rows


def check_properties(inputs):
    rows = []
    sound = True
    for pres in (builders.klein_group((2, 3, 3)),
                 builders.klein_group((2, 3, 5)),
                 builders.dyck_group((2, 3, 5)),
                 builders.coxeter_quotient((2, 3, 5))):
        table = enumerate_cosets(pres)
        sound = sound and bool(table) and all(
            table.is_closed_under(r) for r in pres.relators)
    rows.append(('relators close at every coset', True, sound))
    first = enumerate_cosets(builders.klein_group((2, 3, 3))).to_json()
    second = enumerate_cosets(builders.klein_group((2, 3, 3)),
                              strategy='hlt-reversed').to_json()
    rows.append(('identical table JSON across runs', True, first == second))
    rng = random.Random(SNF_SEED)
    agree = True
    for _ in range(SNF_SAMPLES):
        matrix = [[rng.randint(-9, 9) for _ in range(3)] for _ in range(3)]
        d = abelian.smith_normal_form(matrix)
        products = []
        running = 1
        for entry in d:
            running *= entry
            products.append(running)
        chain = all(b % a == 0 for a, b in zip(d, d[1:]) if a)
        agree = agree and chain and products == minor_gcds(matrix)
    rows.append(('Smith normal form vs minor gcds ({} samples)'
                 .format(SNF_SAMPLES), True, agree))
    swap = builders.klein_swap_images()
    source = builders.klein_group((2, 3, 5))
    target = builders.klein_group((2, 5, 3))
    _, source_rep = _regular(source)
    _, target_rep = _regular(target)
    both = bool(perms.hom_check(source, swap, target_rep)) and \
        bool(perms.hom_check(target, swap, source_rep))
    rows.append(('a <-> b maps klein(2,3,5) and klein(2,5,3) onto each '
                 'other', True, both))
    mapped = set(cyclic_normal_form(substitute(r, [target.word(swap[name])
                                                   for name in source.names]))
                 for r in source.relators)
    powers = set(cyclic_normal_form(r) for r in target.relators[:5])
    rows.append(('a <-> b carries the power relators across', True,
                 powers <= mapped))
    return rows


def check_signs(inputs):
    rows = []
    for signs in itertools.product((1, -1), repeat=3):
        params = tuple(s * v for s, v in zip(signs, (2, 3, 3)))
        table = enumerate_cosets(inputs.klein_group(params))
        rows.append(('|klein{}|'.format(params), 48,
                     table.index if table else 'overflow'))
    return rows


CHECKS = OrderedDict([
    ('orders', (check_orders, True)),
    ('meridians', (check_meridians, True)),
    ('splitting', (check_splitting, True)),
    ('double_cover', (check_double_cover, True)),
    ('paper_double_cover', (check_paper_double_cover, True)),
    ('wirtinger', (check_wirtinger, True)),
    ('abelianization', (check_abelianization, True)),
    ('triangles', (check_triangles, True)),
    ('howlett', (check_howlett, False)),
    ('cut_vertices', (check_cut_vertices, True)),
    ('properties', (check_properties, False)),
    ('signs', (check_signs, True)),
])


def fault_targets():
    """Names of the checks that accept an injected fault."""
    return [name for name, (_, faultable) in CHECKS.items() if faultable]


class SuiteReport(object):
    """Rows of the acceptance battery.

    Attributes:
        frame (pandas.DataFrame): columns check, item, expected, computed,
            passed; one row per compared value.
        wall_time (float): seconds spent.
    """

    def __init__(self, frame, wall_time):
        self.frame = frame
        self.wall_time = wall_time

    @property
    def passed(self):
        return bool(self.frame['passed'].all())

    @property
    def failures(self):
        failed = self.frame.loc[~self.frame['passed'], 'check']
        return list(OrderedDict.fromkeys(failed))

    def to_dict(self):
        checks = []
        for row in self.frame.itertuples(index=False):
            checks.append(OrderedDict([
                ('check', row.check), ('item', row.item),
                ('expected', row.expected), ('computed', row.computed),
                ('passed', bool(row.passed))]))
        return OrderedDict([('passed', self.passed),
                            ('failures', self.failures),
                            ('checks', checks)])

    def to_text(self):
        with pd.option_context('display.max_rows', None,
                               'display.max_colwidth', 60,
                               'display.width', 160):
            return self.frame.to_string(index=False)


def _run_check(name, fault):
    check, _ = CHECKS[name]
    started = time.time()
    try:
        rows = check(_Inputs(fault))
    except FPKnotException as err:
        logger.warning("check %s raised %s", name, err)
        rows = [('raised', 'no error', '{}: {}'.format(
            type(err).__name__, err))]
    logger.info("check %s: %d rows in %.2fs", name, len(rows),
                time.time() - started)
    return [(name, item, expected, computed, expected == computed)
            for item, expected, computed in rows]


def run_suite(workers=1, inject_fault=None, names=None):
    """Runs the acceptance battery.

    Args:
        workers (int): threads; results are merged by check name, so the
            report does not depend on this.
        inject_fault (str): name of a check whose presentations are
            corrupted.
        names (list of str): run only these checks.

    Returns:
        SuiteReport

    Raises:
        ParameterError: for an unknown check name, or a fault aimed at a
            check that builds no presentations.
    """
    selected = list(CHECKS) if names is None else list(names)
    for name in selected + ([inject_fault] if inject_fault else []):
        if name not in CHECKS:
            raise ParameterError("unknown check {!r}. Known checks: {}"
                                 .format(name, ', '.join(CHECKS)))
    if inject_fault and inject_fault not in fault_targets():
        raise ParameterError("check {!r} builds no presentations to corrupt"
                             .format(inject_fault))
    started = time.time()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = dict((name, pool.submit(_run_check, name,
                                              name == inject_fault))
                           for name in selected)
            results = dict((name, f.result()) for name, f in futures.items())
    else:
        results = dict((name, _run_check(name, name == inject_fault))
                       for name in selected)
    rows = [row for name in selected for row in results[name]]
    frame = pd.DataFrame(rows, columns=['check', 'item', 'expected',
                                        'computed', 'passed'], dtype=object)
    frame['passed'] = frame['passed'].astype(bool)
    return SuiteReport(frame, time.time() - started)
