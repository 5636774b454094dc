# -*- coding: utf-8 -*-
"""
perms.py

Permutation representations read off finished coset tables, and the checks
built on them: element orders, homomorphism checks, surjectivity, the sign
map sequence of the order-4 meridian argument, and the finite-quotient
certificate for meridian orders.

A permutation is a numpy index array ``p`` with ``p[i]`` the image of coset
i. Cosets act on the right, so the permutation of a word ``x1 x2 ... xk`` is
obtained by applying the permutation of x1 first.

Basic Usage::

    >>> from fpknot import klein_group, enumerate_cosets
    >>> from fpknot.perms import perm_rep, element_order
    >>> rep = perm_rep(enumerate_cosets(klein_group((2, 3, 3))))
    >>> rep.degree
    48
    >>> element_order("a", rep)
    4
"""
from __future__ import absolute_import, print_function
import logging

import numpy as np
import pandas as pd

from . import typing
from .builders import PretzelParams, klein_group
from .cosets import CosetTable, Overflow, enumerate_cosets
from .exceptions import (AlphabetMismatchError, EnumerationOverflow,
                         IncompleteTableError, MissingImageError,
                         NotRegularError, ParameterError)
from .words import Word, alphabet_names, format_word, parse_word

logger = logging.getLogger(__name__)


def cycle_lengths(perm):
    """Lengths of the cycles of a permutation, in order of least element."""
    perm = np.asarray(perm)
    seen = np.zeros(len(perm), dtype=bool)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        lengths.append(length)
    return lengths


def permutation_order(perm):
    lengths = cycle_lengths(perm)
    if not lengths:
        return 1
    return int(np.lcm.reduce(np.array(lengths, dtype=np.int64)))


class PermRep(object):
    """Generator permutations on the cosets of one table.

    Args:
        alphabet: generator names.
        images (sequence of arrays): ``images[i]`` is the permutation of
            generator i, 0-based.
        source (Presentation): the presentation the table was enumerated
            from, if known.
        regular (bool): True when the table was taken over the trivial
            subgroup, so that cosets are group elements.
    """

    def __init__(self, alphabet, images, source=None, regular=False):
        self.alphabet = alphabet_names(alphabet)
        perms = []
        for image in images:
            perm = np.array(image, dtype=np.int64)
            perm.setflags(write=False)
            perms.append(perm)
        self.images = tuple(perms)
        inverses = []
        for perm in self.images:
            inverse = np.argsort(perm)
            inverse.setflags(write=False)
            inverses.append(inverse)
        self.inverse_images = tuple(inverses)
        self.source = source
        self.regular = regular

    @property
    def degree(self):
        if self.images:
            return len(self.images[0])
        return 1

    @property
    def is_regular(self):
        return self.regular

    def identity(self):
        return np.arange(self.degree, dtype=np.int64)

    def word(self, w):
        """A Word over this representation's alphabet, parsing text."""
        if isinstance(w, Word):
            if w.max_index() >= len(self.alphabet):
                raise AlphabetMismatchError(
                    "word uses generator index {} outside {}"
                    .format(w.max_index(), list(self.alphabet)))
            return w
        return parse_word(w, self.alphabet)

    def word_permutation(self, w):
        """The permutation induced by a word (a Word or its text)."""
        perm = self.identity()
        for index, sign in self.word(w).letters:
            image = self.images[index] if sign > 0 else \
                self.inverse_images[index]
            perm = image[perm]
        return perm

    def is_identity(self, w):
        return bool(np.array_equal(self.word_permutation(w), self.identity()))

    def __repr__(self):
        return 'PermRep(alphabet={}, degree={}, regular={})'.format(
            list(self.alphabet), self.degree, self.regular)


def perm_rep(t):
    """The permutation representation of a finished coset table.

    Every relator of the enumerated presentation is checked to act as the
    identity.

    Args:
        t (CosetTable): a complete table.

    Returns:
        PermRep: regular when the table's subgroup is trivial.

    Raises:
        IncompleteTableError: when ``t`` is not a finished table, or a relator
            does not act trivially on it.
    """
    if isinstance(t, Overflow) or not isinstance(t, CosetTable):
        raise IncompleteTableError("a finished CosetTable is required, got "
                                   "{!r}".format(t))
    images = [t.table[:, i] for i in range(t.ngens)]
    regular = all(w.is_identity() for w in t.subgroup)
    rep = PermRep(t.alphabet, images, source=t.presentation, regular=regular)
    if t.presentation is not None:
        for number, relator in enumerate(t.presentation.relators):
            if not rep.is_identity(relator):
                raise IncompleteTableError(
                    "relator {} ({}) does not act trivially on the table"
                    .format(number, format_word(relator, t.alphabet)))
    return rep


def element_order(w, r):
    """The order of the permutation of ``w`` in ``r``.

    In a regular representation this is the order of the group element w.

    Args:
        w (Word or str): a word over r's alphabet.
        r (PermRep): the representation.

    Returns:
        int: the least common multiple of the cycle lengths.

    Raises:
        AlphabetMismatchError: when w uses letters outside r's alphabet.
    """
    return permutation_order(r.word_permutation(w))


class HomCheck(object):
    """Outcome of ``hom_check``: truthy when every relator holds.

    Attributes:
        holds (bool): the assignment defines a homomorphism.
        failed_relator (int or None): index of the first failing relator.
        relator (Word or None): the failing relator itself.
    """

    def __init__(self, holds, failed_relator=None, relator=None):
        self.holds = holds
        self.failed_relator = failed_relator
        self.relator = relator

    def __bool__(self):
        return self.holds

    __nonzero__ = __bool__

    def to_dict(self):
        return {'holds': self.holds, 'failed_relator': self.failed_relator}

    def __repr__(self):
        if self.holds:
            return 'HomCheck(holds)'
        return 'HomCheck(fails at relator {})'.format(self.failed_relator)


def _image_words(images, target, names=None):
    """Image Words over the target alphabet, in source generator order."""
    if isinstance(images, dict):
        if names is None:
            names = list(images)
        missing = [name for name in names if name not in images]
        if missing:
            raise MissingImageError("no image given for generator {}"
                                    .format(', '.join(missing)))
        extra = [name for name in images if name not in names]
        if extra:
            raise AlphabetMismatchError("images given for unknown generators "
                                        "{}".format(', '.join(extra)))
        values = [images[name] for name in names]
    else:
        values = list(images)
        if names is not None and len(values) != len(names):
            raise MissingImageError("expected {} images, got {}"
                                    .format(len(names), len(values)))
    return [target.word(v) for v in values]


def hom_check(src, images, target):
    """Checks that a generator assignment defines a homomorphism.

    Args:
        src (Presentation): the source group.
        images (dict or sequence): image of each source generator, as a Word
            or text over the target's alphabet; a dict is keyed by generator
            name.
        target (PermRep): the target group, usually a regular
            representation.

    Returns:
        HomCheck: truthy iff every relator of src maps to the identity.

    Raises:
        MissingImageError: when a source generator has no image.

    Example::

        >>> from fpknot import dyck_group, enumerate_cosets
        >>> rep = perm_rep(enumerate_cosets(dyck_group((2, 3, 3))))
        >>> bool(hom_check(dyck_group((2, 3, 3)), {'u': 'u', 'v': 'v'}, rep))
        True
    """
    words = _image_words(images, target, names=list(src.names))
    perms = [target.word_permutation(w) for w in words]
    inverses = [np.argsort(p) for p in perms]
    identity = target.identity()
    for number, relator in enumerate(src.relators):
        perm = identity
        for index, sign in relator.letters:
            perm = (perms[index] if sign > 0 else inverses[index])[perm]
        if not np.array_equal(perm, identity):
            logger.debug("hom_check: relator %d fails", number)
            return HomCheck(False, number, relator)
    return HomCheck(True)


def is_surjective(images, target):
    """True when the image words generate the whole target group.

    Args:
        images (dict or sequence): image words over the target alphabet.
        target (PermRep): a regular representation.

    Raises:
        NotRegularError: when the target is not regular; orbit size only
            equals subgroup order in a regular action.
    """
    if not target.is_regular:
        raise NotRegularError("is_surjective needs a regular representation")
    words = _image_words(images, target)
    perms = [target.word_permutation(w) for w in words]
    perms.extend(np.argsort(p) for p in list(perms))
    seen = np.zeros(target.degree, dtype=bool)
    seen[0] = True
    orbit = [0]
    for point in orbit:
        for perm in perms:
            image = int(perm[point])
            if not seen[image]:
                seen[image] = True
                orbit.append(image)
    return len(orbit) == target.degree


def coset_representatives(t):
    """One word per coset: breadth-first, least in the column order.

    Coset 0 gets the empty word. The set of words is prefix-closed, and each
    word is a shortest word reaching its coset; ties go to the word found
    first when columns are scanned generators first, then inverses.

    Args:
        t (CosetTable): a complete table.

    Returns:
        list of Word: ``words[i]`` reaches coset i from coset 0.
    """
    if not isinstance(t, CosetTable):
        raise IncompleteTableError("a finished CosetTable is required")
    ngens = t.ngens
    letters = [Word.generator(i) for i in range(ngens)]
    letters += [Word.generator(i, -1) for i in range(ngens)]
    words = [None] * t.index
    words[0] = Word()
    queue = [0]
    for coset in queue:
        row = t.table[coset]
        for x in range(2 * ngens):
            target = int(row[x])
            if words[target] is None:
                words[target] = words[coset] * letters[x]
                queue.append(target)
    return words


def order_profile(rep, t):
    """Number of group elements of each order.

    Args:
        rep (PermRep): a regular representation.
        t (CosetTable): the table it was built from.

    Returns:
        pandas.Series: counts indexed by element order, ascending.
    """
    if not rep.is_regular:
        raise NotRegularError("order_profile needs a regular representation")
    orders = [element_order(w, rep) for w in coset_representatives(t)]
    profile = pd.Series(orders).value_counts().sort_index()
    profile.index.name = 'order'
    profile.name = 'elements'
    return profile


class SesReport(object):
    """The sign map sequence for klein_group(2, 3, delta).

    Attributes:
        delta (int): 3 or 5.
        group_order (int): order of the whole group.
        kernel_order (int): order of the kernel of the sign map.
        quotient_ok (bool): the kernel has index exactly 2.
        split (bool): some element of order 2 lies outside the kernel.
        witness (Word or None): such an element, when split.
        stats (dict): statistics of the enumeration.
    """

    def __init__(self, delta, group_order, kernel_order, quotient_ok, split,
                 witness=None, stats=None):
        self.delta = delta
        self.group_order = group_order
        self.kernel_order = kernel_order
        self.quotient_ok = quotient_ok
        self.split = split
        self.witness = witness
        self.stats = dict(stats or {})

    def to_dict(self):
        return {'delta': self.delta,
                'group_order': self.group_order,
                'kernel_order': self.kernel_order,
                'quotient_ok': self.quotient_ok,
                'split': self.split}

    def __repr__(self):
        return 'SesReport({})'.format(self.to_dict())


def sign_map_report(table, delta=None):
    """The sign map sequence of a regular table of a klein group.

    The sign map sends every generator to the generator of Z/2. When every
    relator has even length, a coset's sign is the parity of the length of
    its representative word. The sequence splits iff an element of order 2
    has odd sign; all elements are scanned.

    Args:
        table (CosetTable): a table over the trivial subgroup.
        delta (int or None): recorded in the report.

    Returns:
        SesReport

    Raises:
        NotRegularError: when the table's subgroup is not trivial.
        ParameterError: when some relator has odd length, so that the sign
            map is not defined.
    """
    if not isinstance(table, CosetTable):
        raise IncompleteTableError("a finished CosetTable is required, got "
                                   "{!r}".format(table))
    if not all(w.is_identity() for w in table.subgroup):
        raise NotRegularError("the sign map report needs a regular table")
    if table.presentation is not None:
        for number, relator in enumerate(table.presentation.relators):
            if len(relator) % 2:
                raise ParameterError("relator {} has odd length; the sign "
                                     "map is not defined".format(number))
    words = coset_representatives(table)
    odd = [i for i, w in enumerate(words) if len(w) % 2]
    kernel_order = table.index - len(odd)
    quotient_ok = bool(odd) and 2 * kernel_order == table.index
    # in a regular table, g_i has order 2 iff i * g_i returns to coset 0
    witness = None
    for i in odd:
        if table.image(i, words[i]) == 0:
            witness = words[i]
            break
    return SesReport(delta, table.index, kernel_order, quotient_ok,
                     witness is not None, witness, table.stats)


def ses_check(delta, limits=None):
    """Checks the sequence kernel -> klein_group(2, 3, delta) -> Z/2.

    Args:
        delta (int): 3 or 5.
        limits (EnumLimits): enumeration limits.

    Returns:
        SesReport: see ``sign_map_report``.

    Raises:
        ParameterError: when delta is not 3 or 5.
        EnumerationOverflow: when the enumeration does not finish.

    Example::

        >>> report = ses_check(5)
        >>> report.kernel_order, report.split
        (120, True)
    """
    delta = typing.check_delta(delta)
    g = klein_group((2, 3, delta))
    table = enumerate_cosets(g, limits=limits)
    if not table:
        raise EnumerationOverflow("klein_group(2, 3, {}) did not enumerate"
                                  .format(delta), overflow=table)
    report = sign_map_report(table, delta)
    logger.info("ses_check(%d): %s", delta, report.to_dict())
    return report


class QuotientCertificate(object):
    """A finite-quotient certificate for the order of the meridian a.

    Truthy when the generator-fixing map into the target klein group is a
    surjective homomorphism; ``order`` is then the order of a in the target,
    which divides the order of a in the source and is bounded by a^4 = 1.
    """

    def __init__(self, params, target=None, holds=False, order=None,
                 reason=''):
        self.params = params
        self.target = target
        self.holds = holds
        self.order = order
        self.reason = reason

    def __bool__(self):
        return self.holds

    __nonzero__ = __bool__

    def to_dict(self):
        target = None if self.target is None else list(self.target)
        return {'params': list(self.params), 'target': target,
                'certified': self.holds, 'order': self.order,
                'reason': self.reason}

    def __repr__(self):
        return 'QuotientCertificate({})'.format(self.to_dict())


def _candidate_targets(p, delta):
    l, m, n = p.as_tuple()
    deltas = (3, 5) if delta is None else (typing.check_delta(delta),)
    targets = [(2, 3, d) for d in deltas if m % 3 == 0 and n % d == 0]
    targets += [(2, d, 3) for d in deltas if n % 3 == 0 and m % d == 0]
    seen = set()
    for target in targets:
        if target not in seen:
            seen.add(target)
            yield target


def quotient_certificate(params, delta=None, limits=None):
    """Tries the generator-fixing map klein_group(l,m,n) -> a finite quotient.

    The targets are klein_group(2, 3, delta) when 3 divides m and delta
    divides n, and klein_group(2, delta, 3) when the roles are swapped,
    for delta in {3, 5}. The map a -> a, b -> b, c -> c is tested relator by
    relator; its (ab)^l relator holds exactly when l = 2 mod 4.

    Args:
        params (PretzelParams or tuple): the source parameters.
        delta (int or None): restrict to one target; None tries 3 then 5.
        limits (EnumLimits): enumeration limits for the target.

    Returns:
        QuotientCertificate: truthy on success; otherwise ``reason`` says
        whether the divisibility hypotheses failed or the map did.
    """
    p = PretzelParams.coerce(params)
    source = klein_group(p)
    identity_map = {'a': 'a', 'b': 'b', 'c': 'c'}
    tried = []
    for target_params in _candidate_targets(p, delta):
        table = enumerate_cosets(klein_group(target_params), limits=limits)
        if not table:
            tried.append('{} did not enumerate'.format(target_params))
            continue
        rep = perm_rep(table)
        check = hom_check(source, identity_map, rep)
        if not check:
            tried.append('relator {} fails in {}'.format(
                check.failed_relator, target_params))
            continue
        if not is_surjective(identity_map, rep):
            tried.append('map into {} is not onto'.format(target_params))
            continue
        order = element_order('a', rep)
        logger.info("meridian order of %s certified via %s: %d",
                    p.as_tuple(), target_params, order)
        return QuotientCertificate(p.as_tuple(), target_params, True, order,
                                   'certified via finite quotient')
    if not tried:
        reason = 'no certificate: divisibility hypotheses not met'
    else:
        reason = 'no certificate: ' + '; '.join(tried)
    return QuotientCertificate(p.as_tuple(), None, False, None, reason)
