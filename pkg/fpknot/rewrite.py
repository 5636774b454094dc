# -*- coding: utf-8 -*-
"""
rewrite.py

Presentations of finite-index subgroups by Reidemeister-Schreier rewriting,
filling of branch meridians, and Tietze simplification. Together these
compute the group of the double cover of a Klein bottle branched along it.

The pipeline for ``double_cover((l, m, n))``:

1. enumerate klein_group(l, m, n) over the sign-map kernel, the index-2
   subgroup generated by a^2, a*b and a*c;
2. take the breadth-first Schreier transversal {1, a};
3. rewrite the relators at both cosets into Schreier generators;
4. append the lifts of the meridians a, b, c raised to their cycle lengths;
5. simplify with Tietze moves.

Schreier generators are labelled ``s<coset>_<generator>`` with 1-based
cosets: ``s2_b`` stands for ``t_2 * b * t_(2.b)^-1``.

Example::

    >>> cover = double_cover((2, 3, 3))
    >>> cover.presentation.ngens
    2
"""
from __future__ import absolute_import, print_function
import logging
import warnings
from collections import OrderedDict

from . import perms
from .builders import (KLEIN_NAMES, PretzelParams, dyck_group,
                       dyck_images_for_even_word, klein_group)
from .cosets import CosetTable, enumerate_cosets
from .exceptions import (AlphabetMismatchError, EnumerationOverflow,
                         IncompleteTableError, ParameterError)
from .words import (Presentation, Word, cyclic_normal_form, cyclic_reduce,
                    format_word, free_reduce, parse_word, substitute)

logger = logging.getLogger(__name__)

TIETZE_PASS_LIMIT = 100
# Generators of the kernel of the sign map a, b, c -> 1 in Z/2.
SIGN_KERNEL = ('a^2', 'a*b', 'a*c')


class SchreierData(object):
    """A Schreier transversal and the Schreier generators of one table.

    Attributes:
        table (CosetTable): the table the data was read from.
        transversal (list of Word): ``transversal[i]`` reaches coset i.
        generators (list of tuple): ``(coset, generator)`` pairs, 0-based,
            of the nontrivial Schreier generators, in (coset, generator)
            order.
        names (tuple of str): their labels.
    """

    def __init__(self, table, transversal):
        self.table = table
        self.transversal = list(transversal)
        self._letter = {}
        self.generators = []
        names = []
        for coset in range(table.index):
            for gen in range(table.ngens):
                word = self.schreier_word(coset, gen)
                if word.is_identity():
                    continue
                self._letter[(coset, gen)] = len(self.generators)
                self.generators.append((coset, gen))
                names.append('s{}_{}'.format(coset + 1, table.alphabet[gen]))
        self.names = tuple(names)

    def schreier_word(self, coset, gen):
        """``t_i * g * t_(i.g)^-1`` as an ambient word."""
        target = int(self.table.table[coset, gen])
        return (self.transversal[coset] * Word.generator(gen) *
                self.transversal[target].inverse())

    def letter(self, coset, gen):
        """Index of the Schreier generator for (coset, gen), or None."""
        return self._letter.get((coset, gen))

    def ambient_word(self, label):
        """The ambient word of a Schreier generator, by label or index."""
        if not isinstance(label, int):
            try:
                label = self.names.index(label)
            except ValueError:
                raise AlphabetMismatchError("unknown Schreier generator {!r}"
                                            .format(label))
        coset, gen = self.generators[label]
        return self.schreier_word(coset, gen)

    @property
    def pair_count(self):
        """All (coset, generator) pairs, trivial ones included."""
        return self.table.index * self.table.ngens

    def __repr__(self):
        return 'SchreierData(index={}, generators={})'.format(
            self.table.index, len(self.generators))


def schreier_transversal(t):
    """Breadth-first Schreier transversal of a finished table.

    Representatives are shortest words, ties broken by the column order
    (generators, then inverses); coset 0 gets the empty word. Such a
    transversal is prefix-closed, so exactly ``index - 1`` of the
    ``index * ngens`` Schreier generators are trivial.

    Raises:
        IncompleteTableError: when ``t`` is not a finished table.
    """
    if not isinstance(t, CosetTable):
        raise IncompleteTableError("a finished CosetTable is required, got "
                                   "{!r}".format(t))
    return SchreierData(t, perms.coset_representatives(t))


def _rewrite_from(s, word, coset):
    table = s.table.table
    ngens = s.table.ngens
    letters = []
    for gen, sign in word.letters:
        if sign > 0:
            letter = s.letter(coset, gen)
            if letter is not None:
                letters.append((letter, 1))
            coset = int(table[coset, gen])
        else:
            coset = int(table[coset, gen + ngens])
            letter = s.letter(coset, gen)
            if letter is not None:
                letters.append((letter, -1))
    return free_reduce(letters), coset


def rewrite_word(s, word, start=0):
    """Rewrites an ambient word lying in the subgroup into Schreier letters.

    Args:
        s (SchreierData): the transversal data.
        word (Word or str): a word over the ambient alphabet.
        start (int): the coset to read from; for start i the result
            presents ``t_i * word * t_i^-1``.

    Returns:
        Word: over ``s.names``.

    Raises:
        ParameterError: when the word does not return to its start coset.
    """
    if not isinstance(word, Word):
        word = parse_word(word, s.table.alphabet)
    if word.max_index() >= s.table.ngens:
        raise AlphabetMismatchError("word is not over {}"
                                    .format(list(s.table.alphabet)))
    result, end = _rewrite_from(s, word, start)
    if end != start:
        raise ParameterError("word {} does not lie in the subgroup: it moves "
                             "coset {} to coset {}"
                             .format(format_word(word, s.table.alphabet),
                                     start + 1, end + 1))
    return result


def _check_same(t, s):
    if s.table is t:
        return
    if (s.table != t or s.table.presentation != t.presentation or
            s.table.subgroup != t.subgroup):
        raise ParameterError("the Schreier data was read from a different "
                             "coset table")


def rewrite_subgroup_presentation(t, s):
    """The Reidemeister-Schreier presentation of the subgroup.

    One relator for each (coset, relator) pair, in coset-major order: the
    relator read from the coset, rewritten into Schreier letters and
    cyclically reduced. Empty results are dropped.

    Args:
        t (CosetTable): a table with a known presentation.
        s (SchreierData): the transversal data of the same table.

    Returns:
        Presentation: on the nontrivial Schreier generators.

    Raises:
        ParameterError: when ``s`` was read from a table with other rows,
            another presentation or other subgroup generators.
    """
    _check_same(t, s)
    if t.presentation is None:
        raise ParameterError("the coset table does not record its "
                             "presentation")
    relators = []
    for coset in range(t.index):
        for relator in t.presentation.relators:
            word, end = _rewrite_from(s, relator, coset)
            relators.append(cyclic_reduce(word))
    pres = Presentation(s.names, relators)
    logger.debug("rewrote %d relators at %d cosets into %d generators",
                 len(t.presentation.relators), t.index, pres.ngens)
    return pres


def add_branch_relators(p, t, s, w):
    """Appends the relators killing every lift of the loop ``w``.

    For each cycle of the permutation of w on the cosets, the rewriting of
    ``w^length`` read from the least coset of the cycle is appended.

    Args:
        p (Presentation): the subgroup presentation, on ``s.names``.
        t (CosetTable): the ambient table.
        s (SchreierData): its transversal data.
        w (Word or str): the loop, over the ambient alphabet.

    Raises:
        AlphabetMismatchError: when w or p use the wrong alphabet.
    """
    _check_same(t, s)
    if p.names != s.names:
        raise AlphabetMismatchError("presentation generators {} are not the "
                                    "Schreier generators of the table"
                                    .format(list(p.names)))
    if not isinstance(w, Word):
        w = parse_word(w, t.alphabet)
    if w.max_index() >= t.ngens:
        raise AlphabetMismatchError("word is not over {}"
                                    .format(list(t.alphabet)))
    seen = set()
    relators = []
    for start in range(t.index):
        if start in seen:
            continue
        length = 0
        coset = start
        while True:
            seen.add(coset)
            coset = t.image(coset, w)
            length += 1
            if coset == start:
                break
        word, _ = _rewrite_from(s, w ** length, start)
        relators.append(cyclic_reduce(word))
    return p.add_relators(relators)


def _occurrences(word, gen):
    return sum(1 for index, _ in word.letters if index == gen)


def _normalize(relators):
    """Cyclically reduced relators, empties and duplicates dropped."""
    kept = []
    seen = set()
    for r in relators:
        r = cyclic_reduce(r)
        if r.is_identity():
            continue
        key = cyclic_normal_form(r)
        if key in seen:
            continue
        seen.add(key)
        kept.append(r)
    return kept


def _find_elimination(relators, alive):
    """(relator position, generator) of the cheapest elimination, or None."""
    order = sorted(range(len(relators)), key=lambda i: (len(relators[i]), i))
    for position in order:
        relator = relators[position]
        for gen, _ in relator.letters:
            if gen in alive and _occurrences(relator, gen) == 1:
                return position, gen
    return None


def _solve(relator, gen):
    """Solves relator = 1 for the single occurrence of gen."""
    letters = relator.letters
    at = [i for i, (index, _) in enumerate(letters) if index == gen][0]
    sign = letters[at][1]
    rest = Word(letters[at + 1:] + letters[:at])
    # gen^sign * rest = 1 up to conjugation
    return rest.inverse() if sign > 0 else rest


def tietze_reduce(p, pass_limit=None):
    """Simplifies a presentation and reports where the generators went.

    Each pass cyclically reduces the relators, drops empty and duplicate
    ones (up to rotation and inversion), then eliminates generators one at
    a time: a generator occurring exactly once in some relator is solved
    for, substituted into the other relators, and removed with that
    relator. The shortest such relator goes first. Passes repeat until
    nothing changes, at most ``pass_limit`` times.

    Args:
        p (Presentation): the presentation.
        pass_limit (int): defaults to TIETZE_PASS_LIMIT.

    Returns:
        tuple: ``(presentation, images)``. The presentation keeps the names
        of the surviving generators; ``images`` maps every generator name
        of ``p`` to a Word over the new alphabet, defining the isomorphism.

    Warns:
        RuntimeWarning: when the pass limit stops a still-changing loop.
    """
    if pass_limit is None:
        pass_limit = TIETZE_PASS_LIMIT
    relators = list(p.relators)
    alive = set(range(p.ngens))
    eliminated = []
    passes = 0
    changed = True
    while changed and passes < pass_limit:
        passes += 1
        before = (len(relators), sum(len(r) for r in relators), len(alive))
        relators = _normalize(relators)
        while True:
            found = _find_elimination(relators, alive)
            if found is None:
                break
            position, gen = found
            expression = _solve(relators[position], gen)
            eliminated.append((gen, expression))
            alive.discard(gen)
            images = [Word.generator(i) for i in range(p.ngens)]
            images[gen] = expression
            relators = _normalize(substitute(r, images) for i, r in
                                  enumerate(relators) if i != position)
        after = (len(relators), sum(len(r) for r in relators), len(alive))
        changed = after != before
    if changed:
        warnings.warn("Tietze simplification stopped after {} passes"
                      .format(pass_limit), RuntimeWarning)
    survivors = sorted(alive)
    new_index = dict((old, new) for new, old in enumerate(survivors))
    images = [None] * p.ngens
    for old in survivors:
        images[old] = Word.generator(new_index[old])
    for gen, expression in reversed(eliminated):
        images[gen] = substitute(expression, images)
    names = [p.names[i] for i in survivors]
    simplified = Presentation(names,
                              [substitute(r, images) for r in relators])
    logger.debug("tietze: %d -> %d generators, %d -> %d relators in %d "
                 "passes", p.ngens, len(names), len(p.relators),
                 len(simplified.relators), passes)
    return simplified, OrderedDict(zip(p.names, images))


def tietze_simplify(p):
    """The simplified presentation of ``tietze_reduce``.

    Example::

        >>> from fpknot.words import parse_presentation
        >>> print(tietze_simplify(parse_presentation("< x, y | x, (x*y)^3 >")))
        < y | y^3 >
    """
    return tietze_reduce(p)[0]


class DoubleCover(object):
    """Every stage of the branched double cover pipeline.

    Attributes:
        params (PretzelParams)
        table (CosetTable): klein_group over the sign-map kernel.
        schreier (SchreierData)
        rewritten (Presentation): the Reidemeister-Schreier presentation.
        filled (Presentation): with the meridian lifts killed.
        presentation (Presentation): after Tietze simplification.
        images (dict): Schreier label -> Word over ``presentation``.
    """

    def __init__(self, params, table, schreier, rewritten, filled,
                 presentation, images):
        self.params = params
        self.table = table
        self.schreier = schreier
        self.rewritten = rewritten
        self.filled = filled
        self.presentation = presentation
        self.images = images

    def reduce(self, word):
        """A word in a, b, c of even length as a word in the final alphabet."""
        label_word = rewrite_word(self.schreier, word)
        images = [self.images[name] for name in self.schreier.names]
        return substitute(label_word, images)

    def ambient_words(self):
        """Final generator name -> its word in a, b, c."""
        return OrderedDict((name, self.schreier.ambient_word(name))
                           for name in self.presentation.names)

    def trace(self):
        alphabet = self.table.alphabet
        return OrderedDict([
            ('transversal', [format_word(w, alphabet)
                             for w in self.schreier.transversal]),
            ('generators', [[coset + 1, alphabet[gen]] for coset, gen in
                            self.schreier.generators]),
            ('labels', list(self.schreier.names)),
            ('relator_counts', OrderedDict([
                ('rewritten', len(self.rewritten.relators)),
                ('filled', len(self.filled.relators)),
                ('simplified', len(self.presentation.relators))])),
            ('presentation', str(self.presentation)),
        ])

    def __repr__(self):
        return 'DoubleCover({!r}, {})'.format(self.params, self.presentation)


def double_cover(p, limits=None, group=None):
    """Runs the branched double cover pipeline and keeps every stage.

    Args:
        p (PretzelParams or tuple): the parameters.
        limits (EnumLimits): enumeration limits.
        group (Presentation): the ambient group on a, b, c; defaults to
            ``klein_group(p)``.

    Raises:
        EnumerationOverflow: when the index-2 enumeration does not finish.
    """
    p = PretzelParams.coerce(p)
    g = klein_group(p) if group is None else group
    table = enumerate_cosets(g, [parse_word(w, g) for w in SIGN_KERNEL],
                             limits=limits)
    if not table:
        raise EnumerationOverflow("the sign-map kernel of {} did not "
                                  "enumerate".format(p), overflow=table)
    if table.index != 2:
        raise ParameterError("the sign-map kernel of {} has index {}, not 2"
                             .format(p, table.index))
    schreier = schreier_transversal(table)
    rewritten = rewrite_subgroup_presentation(table, schreier)
    filled = rewritten
    for meridian in KLEIN_NAMES:
        filled = add_branch_relators(filled, table, schreier, meridian)
    presentation, images = tietze_reduce(filled)
    logger.info("double cover of %s: %d generators, %d relators",
                p.as_tuple(), presentation.ngens, len(presentation.relators))
    return DoubleCover(p, table, schreier, rewritten, filled, presentation,
                       images)


def branched_double_cover(p, limits=None):
    """A presentation of the group of the branched double cover.

    Example::

        >>> from fpknot import enumerate_cosets
        >>> enumerate_cosets(branched_double_cover((2, 3, 5))).index
        60
    """
    return double_cover(p, limits=limits).presentation


class DyckCertificate(object):
    """Mutual surjective homomorphisms between a cover and a von Dyck group.

    Truthy when both maps are homomorphisms, both are onto and the two
    enumerated orders agree.
    """

    def __init__(self, params, cover_order, dyck_order, to_cover, to_dyck,
                 to_cover_onto, to_dyck_onto, cover_images, dyck_images):
        self.params = params
        self.cover_order = cover_order
        self.dyck_order = dyck_order
        self.to_cover = to_cover
        self.to_dyck = to_dyck
        self.to_cover_onto = to_cover_onto
        self.to_dyck_onto = to_dyck_onto
        self.cover_images = cover_images
        self.dyck_images = dyck_images

    def __bool__(self):
        return bool(self.cover_order == self.dyck_order and self.to_cover and
                    self.to_dyck and self.to_cover_onto and self.to_dyck_onto)

    __nonzero__ = __bool__

    def to_dict(self):
        return OrderedDict([
            ('cover_order', self.cover_order),
            ('dyck_order', self.dyck_order),
            ('dyck_to_cover', bool(self.to_cover) and self.to_cover_onto),
            ('cover_to_dyck', bool(self.to_dyck) and self.to_dyck_onto),
            ('certified', bool(self)),
        ])


def dyck_certificate(p, limits=None, group=None):
    """Certifies that the branched double cover is the von Dyck group.

    Forward map: u -> a*b and v -> b*c, read in the cover. Backward map: each
    cover generator's word in a, b, c, read two letters at a time with
    a*b -> u, b*c -> v, a*c -> u*v. Both groups are enumerated, so this only
    finishes for the spherical cases.

    Raises:
        EnumerationOverflow: when either group does not enumerate.
    """
    p = PretzelParams.coerce(p)
    cover = double_cover(p, limits=limits, group=group)
    dyck = dyck_group(p)
    cover_table = enumerate_cosets(cover.presentation, limits=limits)
    dyck_table = enumerate_cosets(dyck, limits=limits)
    for name, table in (('branched double cover', cover_table),
                        ('von Dyck group', dyck_table)):
        if not table:
            raise EnumerationOverflow("the {} of {} did not enumerate"
                                      .format(name, p), overflow=table)
    cover_rep = perms.perm_rep(cover_table)
    dyck_rep = perms.perm_rep(dyck_table)
    g = cover.table.presentation
    cover_images = OrderedDict([('u', cover.reduce(parse_word('a*b', g))),
                                ('v', cover.reduce(parse_word('b*c', g)))])
    dyck_images = OrderedDict(
        (name, dyck_images_for_even_word(word))
        for name, word in cover.ambient_words().items())
    to_cover = perms.hom_check(dyck, cover_images, cover_rep)
    to_dyck = perms.hom_check(cover.presentation, dyck_images, dyck_rep)
    certificate = DyckCertificate(
        p, cover_table.index, dyck_table.index, to_cover, to_dyck,
        perms.is_surjective(cover_images, cover_rep),
        perms.is_surjective(dyck_images, dyck_rep),
        cover_images, dyck_images)
    logger.info("von Dyck certificate for %s: %s", p.as_tuple(),
                certificate.to_dict())
    return certificate
