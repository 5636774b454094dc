# -*- coding: utf-8 -*-
"""
bottle.py

This module contains the KleinBottle class, which is used for organizing and
managing the groups and computations for a single Klein bottle K(l, m, n).
"""
from __future__ import absolute_import, print_function
import logging
from collections import OrderedDict

from . import abelian, builders, perms, rewrite
from .cosets import default_limits, enumerate_cosets

logger = logging.getLogger(__name__)


class MeridianOrder(object):
    """The order of the meridian a, and how it was obtained.

    ``method`` is 'direct' when the whole group enumerated, 'quotient' when
    a finite-quotient certificate gave the order, and None when neither
    worked; ``order`` is then None.
    """

    def __init__(self, order, method, group_order=None, certificate=None):
        self.order = order
        self.method = method
        self.group_order = group_order
        self.certificate = certificate

    def to_dict(self):
        result = OrderedDict([('order', self.order),
                              ('method', self.method),
                              ('group_order', self.group_order)])
        if self.certificate is not None:
            result['certificate'] = self.certificate.to_dict()
        return result

    def describe(self):
        if self.method == 'direct':
            return '{} (direct, group order {})'.format(self.order,
                                                        self.group_order)
        if self.method == 'quotient':
            return 'order {} certified via finite quotient {}'.format(
                self.order, self.certificate.target)
        return self.certificate.reason


class KleinBottle(object):
    """A class for organizing the groups of a single Klein bottle.

    Builders are cheap and rebuilt on every call; enumerations are run once
    by ``.enumerate()`` and kept on the instance.

    Args:
        l (int): even, |l| >= 2.

        m (int): odd, |m| >= 3.

        n (int): odd, |n| >= 3.

        max_cosets (int):
            coset limit for every enumeration of this bottle. Default is
            FPKNOT_MAX_COSETS if set, else 65536.

    Example::

        >>> bottle = KleinBottle(2, 3, 3).enumerate()
        >>> bottle.order
        48
        >>> bottle.meridian_order().order
        4
    """

    def __init__(self, l, m, n, max_cosets=None):
        self.params = builders.PretzelParams(l, m, n)
        self.limits = default_limits(max_cosets)
        self.table = None
        self.rep = None
        self.ok = False
        self._cover = None

    @property
    def l(self):
        return self.params.l

    @property
    def m(self):
        return self.params.m

    @property
    def n(self):
        return self.params.n

    def group(self):
        return builders.klein_group(self.params)

    def wirtinger(self):
        return builders.klein_group_from_wirtinger(self.params)

    def coxeter(self):
        return builders.coxeter_quotient(self.params)

    def dyck(self):
        return builders.dyck_group(self.params)

    def paper_double_cover(self, basepoint=False):
        return builders.paper_double_cover(self.params, basepoint=basepoint)

    def mirror(self):
        """The bottle with every parameter negated."""
        return KleinBottle(-self.l, -self.m, -self.n,
                           max_cosets=self.limits.max_cosets)

    def enumerate(self):
        """Enumerates the group over the trivial subgroup.

        Sets ``.table`` (a CosetTable or an Overflow), ``.ok`` and, on
        success, ``.rep``. Returns self.
        """
        self.table = enumerate_cosets(self.group(), limits=self.limits)
        self.ok = bool(self.table)
        self.rep = perms.perm_rep(self.table) if self.ok else None
        return self

    @property
    def order(self):
        """The group order, or None when the enumeration overflowed."""
        if self.table is None:
            self.enumerate()
        return self.table.index if self.ok else None

    def meridian_order(self):
        """The order of the meridian a.

        Enumerates the group first; when that overflows, tries the
        finite-quotient certificate instead.

        Returns:
            MeridianOrder
        """
        if self.table is None:
            self.enumerate()
        if self.ok:
            return MeridianOrder(perms.element_order('a', self.rep), 'direct',
                                 group_order=self.table.index)
        certificate = perms.quotient_certificate(self.params,
                                                 limits=self.limits)
        if certificate:
            return MeridianOrder(certificate.order, 'quotient',
                                 certificate=certificate)
        return MeridianOrder(None, None, certificate=certificate)

    def abelianization(self):
        return abelian.abelianization(self.group())

    def classify(self):
        """TriangleClass of the twist magnitudes."""
        return abelian.classify_triangle(*self.params.magnitudes)

    def howlett_rank(self):
        return abelian.howlett_rank(self.params)

    def double_cover(self):
        """The branched double cover pipeline, run once and kept."""
        if self._cover is None:
            self._cover = rewrite.double_cover(self.params, limits=self.limits)
        return self._cover

    def dyck_certificate(self):
        return rewrite.dyck_certificate(self.params, limits=self.limits)

    def __repr__(self):
        return 'KleinBottle({}, {}, {})'.format(self.l, self.m, self.n)
