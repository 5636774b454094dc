# -*- coding: utf-8 -*-
"""
abelian.py

Abelian invariants through the integer Smith normal form, the triangle group
trichotomy, and the two invariants used to tell the Klein bottles apart.

Smith normal forms come from ``sympy``'s exact integer normal forms over
``ZZ``; Python integers never overflow. The diagonal is then put into the
canonical order d1 | d2 | ... with zeros last.

Basic Usage::

    >>> from fpknot import klein_group
    >>> abelianization(klein_group((2, 3, 3))).factors
    [2]
    >>> classify_triangle(2, 3, 5).coxeter_order
    120
"""
from __future__ import absolute_import, print_function
import logging
import numbers
from collections import OrderedDict
from fractions import Fraction
from math import gcd

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from . import typing
from .builders import PretzelParams

logger = logging.getLogger(__name__)

SPHERICAL = 'spherical'
EUCLIDEAN = 'euclidean'
HYPERBOLIC = 'hyperbolic'
INFINITE = 'infinite'


def _lcm(a, b):
    if a == 0 or b == 0:
        return 0
    return a * b // gcd(a, b)


def _canonical_diagonal(entries):
    """Rewrites a diagonal as a divisibility chain with the zeros last."""
    d = [abs(int(x)) for x in entries]
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            if d[i] == 0 and d[j] != 0:
                d[i], d[j] = d[j], 0
            elif d[i] != 0 and d[j] != 0:
                d[i], d[j] = gcd(d[i], d[j]), _lcm(d[i], d[j])
    return d


def _integer_rows(mat):
    rows = [list(row) for row in mat]
    for row in rows:
        for entry in row:
            if isinstance(entry, bool) or not isinstance(entry,
                                                         numbers.Integral):
                raise TypeError("Smith normal form needs integer entries. "
                                "Actual value: {!r}".format(entry))
    if rows and len(set(len(row) for row in rows)) > 1:
        raise ValueError("matrix rows have different lengths")
    return [[int(x) for x in row] for row in rows]


def smith_normal_form(mat):
    """Diagonal of the Smith normal form of an integer matrix.

    Args:
        mat: a rectangular integer matrix (list of rows or numpy array).

    Returns:
        list of int: ``min(rows, cols)`` nonnegative entries
        d1 | d2 | ..., zeros last.

    Raises:
        TypeError: when an entry is not an integer.

    Example::

        >>> smith_normal_form([[2, 4], [6, 8]])
        [2, 4]
    """
    rows = _integer_rows(mat)
    if not rows or not rows[0]:
        return []
    shape = (len(rows), len(rows[0]))
    matrix = DomainMatrix([[ZZ(x) for x in row] for row in rows], shape, ZZ)
    diagonal = list(invariant_factors(matrix))
    diagonal += [0] * (min(shape) - len(diagonal))
    return _canonical_diagonal(diagonal)


class AbelianInvariants(object):
    """Invariant factors d1 | d2 | ... of a finitely generated abelian group.

    Factors of 1 are omitted; each 0 is an infinite cyclic factor and zeros
    come last. The empty list is the trivial group.
    """

    def __init__(self, factors):
        factors = [int(f) for f in factors if int(f) != 1]
        torsion = [f for f in factors if f != 0]
        if factors != torsion + [0] * (len(factors) - len(torsion)):
            raise ValueError("zero factors must come last: {}"
                             .format(factors))
        for a, b in zip(torsion, torsion[1:]):
            if a < 0 or b % a:
                raise ValueError("factors must form a divisibility chain: "
                                 "{}".format(factors))
        self.factors = factors

    @property
    def free_rank(self):
        return self.factors.count(0)

    @property
    def torsion(self):
        return [f for f in self.factors if f != 0]

    @property
    def is_trivial(self):
        return not self.factors

    @property
    def order(self):
        """The group order, or None when the group is infinite."""
        if self.free_rank:
            return None
        order = 1
        for f in self.factors:
            order *= f
        return order

    def to_dict(self):
        return {'invariant_factors': list(self.factors)}

    def __eq__(self, other):
        if isinstance(other, AbelianInvariants):
            return other.factors == self.factors
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(tuple(self.factors))

    def __repr__(self):
        return 'AbelianInvariants({})'.format(self.factors)


def relation_matrix(p):
    """Exponent sums: one row per relator, one column per generator."""
    return [r.exponent_sums(p.ngens) for r in p.relators]


def abelianization(p):
    """The abelian invariants of a presented group.

    Works for infinite groups as well; generators beyond the rank of the
    relation matrix contribute infinite cyclic factors.

    Args:
        p (Presentation): the group.

    Returns:
        AbelianInvariants

    Example::

        >>> from fpknot.words import parse_presentation
        >>> abelianization(parse_presentation("< a, b | >")).factors
        [0, 0]
    """
    diagonal = smith_normal_form(relation_matrix(p))
    diagonal += [0] * (p.ngens - len(diagonal))
    invariants = AbelianInvariants(_canonical_diagonal(diagonal))
    logger.debug("abelianization of %d generators, %d relators: %s",
                 p.ngens, len(p.relators), invariants.factors)
    return invariants


class TriangleClass(object):
    """Curvature kind and orders of a triangle group triple.

    ``dyck_order`` and ``coxeter_order`` are None for infinite groups.
    """

    def __init__(self, triple, kind, dyck_order=None):
        self.triple = tuple(triple)
        self.kind = kind
        self.dyck_order = dyck_order
        self.coxeter_order = None if dyck_order is None else 2 * dyck_order

    @property
    def is_finite(self):
        return self.kind == SPHERICAL

    def to_dict(self):
        def order(value):
            return INFINITE if value is None else value
        return OrderedDict([('kind', self.kind),
                            ('dyck_order', order(self.dyck_order)),
                            ('coxeter_order', order(self.coxeter_order))])

    def __repr__(self):
        return 'TriangleClass({}, {})'.format(self.triple, self.to_dict())


def classify_triangle(l, m, n):
    """Classifies the triangle groups of a triple, in exact arithmetic.

    The kind follows the sign of 1/|l| + 1/|m| + 1/|n| - 1; in the spherical
    case the von Dyck group has order 2 / (1/|l| + 1/|m| + 1/|n| - 1) and the
    Coxeter group twice that.

    Raises:
        ParameterError: when some magnitude is below 2.
    """
    triple = typing.check_triangle_params(l, m, n)
    excess = sum(Fraction(1, abs(x)) for x in triple) - 1
    if excess > 0:
        order = Fraction(2) / excess
        return TriangleClass(triple, SPHERICAL, int(order))
    if excess == 0:
        return TriangleClass(triple, EUCLIDEAN)
    return TriangleClass(triple, HYPERBOLIC)


def howlett_rank(p):
    """Rank of H2 of the triangle Coxeter group, as an elementary 2-group.

    Only the pattern of one even and two odd weights (l even, m and n odd)
    is implemented; the rank is then one.

    Raises:
        ParameterError: for any other parity pattern.
    """
    if isinstance(p, PretzelParams):
        p = p.as_tuple()
    typing.check_howlett_parity(*p)
    return 1


class Distinctness(object):
    """Outcome of ``distinctness_report``; truthy when certified distinct."""

    DISTINCT = 'distinct'
    INCONCLUSIVE = 'inconclusive'

    def __init__(self, verdict, reason):
        self.verdict = verdict
        self.reason = reason

    def __bool__(self):
        return self.verdict == self.DISTINCT

    __nonzero__ = __bool__

    def to_dict(self):
        return {'verdict': self.verdict, 'reason': self.reason}

    def __repr__(self):
        return 'Distinctness({!r}, {!r})'.format(self.verdict, self.reason)


def distinctness_report(p1, p2):
    """Decides whether two Klein bottles are certified different.

    They are distinct when their twist magnitudes differ as multisets and
    their Coxeter quotients differ: different finite orders, or different
    kinds. Anything else is inconclusive; nothing here ever certifies that
    two bottles are the same.
    """
    p1 = PretzelParams.coerce(p1)
    p2 = PretzelParams.coerce(p2)
    if sorted(p1.magnitudes) == sorted(p2.magnitudes):
        return Distinctness(Distinctness.INCONCLUSIVE,
                            'equal twist magnitudes {}'.format(
                                sorted(p1.magnitudes)))
    c1 = classify_triangle(*p1.magnitudes)
    c2 = classify_triangle(*p2.magnitudes)
    if c1.kind != c2.kind:
        return Distinctness(Distinctness.DISTINCT,
                            'Coxeter quotients are {} and {}'.format(
                                c1.kind, c2.kind))
    if c1.is_finite and c1.coxeter_order != c2.coxeter_order:
        return Distinctness(Distinctness.DISTINCT,
                            'Coxeter quotients have orders {} and {}'.format(
                                c1.coxeter_order, c2.coxeter_order))
    return Distinctness(Distinctness.INCONCLUSIVE,
                        'both Coxeter quotients are {}; no finite invariant '
                        'separates them'.format(c1.kind))
