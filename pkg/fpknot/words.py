# -*- coding: utf-8 -*-
"""
words.py

Words over a generator alphabet, free and cyclic reduction, and the text
grammar for words and presentations.

A letter is a pair ``(index, sign)`` where ``index`` points into the
alphabet and ``sign`` is +1 or -1. Words are always stored freely reduced and
flattened, so ``(b*c)^3`` is kept as the six letters ``b c b c b c``. The
printer compresses runs again for display.

Grammar::

    word         := factor (('*' | whitespace) factor)*
    factor       := atom ('^' integer)?
    atom         := name | '(' word ')' | '1'
    presentation := '<' [name (',' name)*] '|' [relation (',' relation)*] '>'
    relation     := word ('=' word)*

``#`` starts a comment that runs to the end of the line. A relation
``w1 = w2`` is stored as the relator ``w1*w2^-1``; a chain
``w1 = w2 = w3`` gives one relator per ``=`` sign.

Basic Usage::

    >>> from fpknot import words
    >>> pres = words.parse_presentation("< u, v | u^2, v^3, (u*v)^5 >")
    >>> len(pres.relators)
    3
    >>> print(pres)
    < u, v | u^2, v^3, (u*v)^5 >
"""
from __future__ import absolute_import, print_function
import re

from . import typing
from .exceptions import AlphabetMismatchError, WordParseError

# Largest exponent accepted by the parser, and the longest flattened word.
MAX_EXPONENT = 10 ** 6
MAX_WORD_LENGTH = 10 ** 7

_TOKEN = re.compile(r"(?P<ws>\s+)|(?P<comment>#[^\n]*)"
                    r"|(?P<name>[a-z][A-Za-z0-9_]*)|(?P<int>[+-]?\d+)"
                    r"|(?P<op>[*()^<>|,=])")


class Generator(object):
    """A named generator. Names are unique within one alphabet."""
    __slots__ = ('name',)

    def __init__(self, name):
        self.name = typing.check_generator_name(name)

    def __eq__(self, other):
        return isinstance(other, Generator) and other.name == self.name

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(('Generator', self.name))

    def __str__(self):
        return self.name

    def __repr__(self):
        return 'Generator({!r})'.format(self.name)


def free_reduce(letters):
    """Returns the freely reduced Word spelled by a raw letter list.

    Args:
        letters (iterable): pairs ``(index, sign)`` with sign +1 or -1.

    Returns:
        Word: the unique freely reduced form. Reducing twice changes nothing.

    Example::

        >>> free_reduce([(1, 1), (0, 1), (0, -1), (1, 1)]).letters
        ((1, 1), (1, 1))
    """
    stack = []
    for index, sign in letters:
        if sign not in (1, -1):
            raise ValueError("letter signs are +1 or -1, got {}".format(sign))
        if stack and stack[-1][0] == index and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((int(index), int(sign)))
    return Word._from_reduced(tuple(stack))


class Word(object):
    """A freely reduced word; the empty word is the identity.

    Words are immutable and hashable. They multiply with ``*``, invert with
    ``.inverse()`` and take integer powers with ``**``.
    """
    __slots__ = ('letters',)

    def __init__(self, letters=()):
        self.letters = free_reduce(letters).letters

    @classmethod
    def _from_reduced(cls, letters):
        word = cls.__new__(cls)
        word.letters = letters
        return word

    @classmethod
    def generator(cls, index, sign=1):
        return cls._from_reduced(((index, sign),))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word._from_reduced(self.letters[item])
        return self.letters[item]

    def __eq__(self, other):
        return isinstance(other, Word) and other.letters == self.letters

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return (len(self), self.letters) < (len(other), other.letters)

    def __hash__(self):
        return hash(self.letters)

    def __mul__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return free_reduce(self.letters + other.letters)

    def __pow__(self, exponent):
        exponent = int(exponent)
        base = self if exponent >= 0 else self.inverse()
        if abs(exponent) * len(base) > MAX_WORD_LENGTH:
            raise OverflowError("word power too long: {} letters"
                                .format(abs(exponent) * len(base)))
        return free_reduce(base.letters * abs(exponent))

    def inverse(self):
        return Word._from_reduced(tuple((i, -s) for i, s in
                                        reversed(self.letters)))

    def is_identity(self):
        return not self.letters

    def max_index(self):
        """Largest generator index used, or -1 for the empty word."""
        return max((i for i, _ in self.letters), default=-1)

    def exponent_sums(self, ngens):
        """Signed letter counts per generator, a list of length ngens."""
        sums = [0] * ngens
        for index, sign in self.letters:
            sums[index] += sign
        return sums

    def __repr__(self):
        return 'Word({!r})'.format(self.letters)


def cyclic_reduce(w):
    """Strips matching first/last letters until the word is cyclically reduced.

    The result is conjugate to ``w``: ``a*b*a^-1`` becomes ``b``.
    """
    letters = w.letters
    start, stop = 0, len(letters)
    while stop - start >= 2:
        first, last = letters[start], letters[stop - 1]
        if first[0] == last[0] and first[1] == -last[1]:
            start += 1
            stop -= 1
        else:
            break
    return Word._from_reduced(letters[start:stop])


def cyclic_normal_form(w):
    """Least rotation of the cyclic reduction of ``w`` or of its inverse.

    Two relators define the same normal closure element up to conjugation
    and inversion exactly when their normal forms agree.
    """
    w = cyclic_reduce(w)
    if not w.letters:
        return w
    candidates = []
    for word in (w, w.inverse()):
        letters = word.letters
        for i in range(len(letters)):
            candidates.append(letters[i:] + letters[:i])
    return Word._from_reduced(min(candidates))


def cyclic_words_equal(u, v):
    """True when u and v agree up to cyclic permutation and inversion."""
    return cyclic_normal_form(u) == cyclic_normal_form(v)


def alphabet_names(alphabet):
    """Names of an alphabet given as a Presentation, Generators or strings."""
    if isinstance(alphabet, Presentation):
        return alphabet.names
    return tuple(g.name if isinstance(g, Generator) else g for g in alphabet)


def substitute(word, images):
    """Applies a generator map to a word.

    Args:
        word (Word): a word over the source alphabet.
        images (sequence of Word): ``images[i]`` is the image of generator i.

    Returns:
        Word: the product of the images, freely reduced.
    """
    letters = []
    for index, sign in word.letters:
        image = images[index]
        letters.extend(image.letters if sign > 0 else
                       image.inverse().letters)
    return free_reduce(letters)


class Presentation(object):
    """A generator alphabet and a list of relators.

    Relators are stored freely reduced and empty relators are dropped. Every
    letter of every relator must index into the alphabet.

    Args:
        generators (sequence of str or Generator): the alphabet.
        relators (iterable of Word): the relators, in a fixed order.

    Raises:
        WordParseError: for duplicate generator names.
        AlphabetMismatchError: when a relator uses an unknown generator.
    """

    def __init__(self, generators, relators=()):
        gens = tuple(g if isinstance(g, Generator) else Generator(g)
                     for g in generators)
        seen = set()
        for g in gens:
            if g.name in seen:
                raise WordParseError("duplicate generator name {!r}"
                                     .format(g.name))
            seen.add(g.name)
        rels = []
        for r in relators:
            if not isinstance(r, Word):
                r = Word(r)
            if r.max_index() >= len(gens):
                raise AlphabetMismatchError(
                    "relator uses generator index {} but the alphabet has "
                    "{} generators".format(r.max_index(), len(gens)))
            if r.letters:
                rels.append(r)
        self.generators = gens
        self.relators = tuple(rels)

    @classmethod
    def from_text(cls, text):
        return parse_presentation(text)

    @property
    def names(self):
        return tuple(g.name for g in self.generators)

    @property
    def ngens(self):
        return len(self.generators)

    def index(self, name):
        try:
            return self.names.index(name)
        except ValueError:
            raise AlphabetMismatchError("unknown generator {!r}".format(name))

    def gen(self, name):
        """The one-letter Word for a generator name."""
        return Word.generator(self.index(name))

    def word(self, text):
        return parse_word(text, self)

    def add_relators(self, words):
        return Presentation(self.generators, self.relators + tuple(words))

    def rename(self, names):
        """Same relators over a new list of generator names."""
        if len(names) != self.ngens:
            raise AlphabetMismatchError("expected {} names, got {}"
                                        .format(self.ngens, len(names)))
        return Presentation(names, self.relators)

    def check_word(self, word):
        if word.max_index() >= self.ngens:
            raise AlphabetMismatchError(
                "word uses generator index {} outside the alphabet {}"
                .format(word.max_index(), self.names))
        return word

    def __eq__(self, other):
        return (isinstance(other, Presentation) and
                other.names == self.names and other.relators == self.relators)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.names, self.relators))

    def __str__(self):
        return format_presentation(self)

    def __repr__(self):
        return 'Presentation({!r})'.format(format_presentation(self))


class _Parser(object):
    """Recursive descent over the token list of one text."""

    def __init__(self, text):
        self.text = text
        self.tokens = []
        pos = 0
        while pos < len(text):
            match = _TOKEN.match(text, pos)
            if match is None:
                raise WordParseError("unexpected character {!r}"
                                     .format(text[pos]), position=pos)
            kind = match.lastgroup
            if kind not in ('ws', 'comment'):
                value = match.group(kind)
                self.tokens.append((kind if kind != 'op' else value,
                                    value, pos))
            pos = match.end()
        self.i = 0
        self.alphabet = None

    def peek(self):
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return ('end', None, len(self.text))

    def take(self, kind=None):
        token = self.peek()
        if kind is not None and token[0] != kind:
            found = 'end of input' if token[0] == 'end' else repr(token[1])
            raise WordParseError("expected {!r}, found {}".format(kind, found),
                                 position=token[2])
        self.i += 1
        return token

    def starts_atom(self):
        kind, value, _ = self.peek()
        return kind in ('name', '(') or (kind == 'int' and value == '1')

    def word(self):
        letters = list(self.factor())
        while True:
            if self.peek()[0] == '*':
                self.take('*')
                letters.extend(self.factor())
            elif self.starts_atom():
                letters.extend(self.factor())
            else:
                break
            if len(letters) > MAX_WORD_LENGTH:
                raise WordParseError("word is longer than {} letters"
                                     .format(MAX_WORD_LENGTH),
                                     position=self.peek()[2])
        return free_reduce(letters).letters

    def factor(self):
        base = self.atom()
        if self.peek()[0] != '^':
            return base
        self.take('^')
        kind, value, pos = self.take('int')
        exponent = int(value)
        if abs(exponent) > MAX_EXPONENT:
            raise WordParseError("exponent {} exceeds the limit of {}"
                                 .format(exponent, MAX_EXPONENT),
                                 position=pos)
        if len(base) * abs(exponent) > MAX_WORD_LENGTH:
            raise WordParseError("power expands to more than {} letters"
                                 .format(MAX_WORD_LENGTH), position=pos)
        if exponent < 0:
            base = tuple((i, -s) for i, s in reversed(base))
        return free_reduce(base * abs(exponent)).letters

    def atom(self):
        kind, value, pos = self.peek()
        if kind == 'name':
            self.take()
            if value not in self.alphabet:
                raise WordParseError("unknown generator {!r}".format(value),
                                     position=pos)
            return ((self.alphabet[value], 1),)
        if kind == '(':
            self.take()
            inner = self.word()
            self.take(')')
            return inner
        if kind == 'int' and value == '1':
            self.take()
            return ()
        found = 'end of input' if kind == 'end' else repr(value)
        raise WordParseError("expected a generator, '(' or '1', found {}"
                             .format(found), position=pos)

    def relation(self):
        sides = [self.word()]
        while self.peek()[0] == '=':
            self.take('=')
            sides.append(self.word())
        if len(sides) == 1:
            return [Word._from_reduced(sides[0])]
        relators = []
        for left, right in zip(sides, sides[1:]):
            inverse = tuple((i, -s) for i, s in reversed(right))
            relators.append(free_reduce(left + inverse))
        return relators

    def presentation(self):
        self.take('<')
        names = []
        if self.peek()[0] == 'name':
            names.append(self.take('name')[1])
            while self.peek()[0] == ',':
                self.take(',')
                kind, value, pos = self.take('name')
                if value in names:
                    raise WordParseError("duplicate generator name {!r}"
                                         .format(value), position=pos)
                names.append(value)
        self.take('|')
        self.alphabet = dict((name, i) for i, name in enumerate(names))
        relators = []
        if self.peek()[0] != '>':
            relators.extend(self.relation())
            while self.peek()[0] == ',':
                self.take(',')
                relators.extend(self.relation())
        self.take('>')
        self.take('end')
        return Presentation(names, relators)


def parse_word(text, alphabet):
    """Parses a word over a fixed alphabet.

    Args:
        text (str): the word, e.g. ``"(b*c)^3"`` or ``"a^-2"``.
        alphabet: a Presentation, or a sequence of names or Generators.

    Returns:
        Word: the freely reduced word.

    Raises:
        WordParseError: for syntax errors (with position), unknown
            generator names and exponents beyond MAX_EXPONENT.

    Example::

        >>> parse_word("a*a^-1", ['a']).letters
        ()
    """
    parser = _Parser(text)
    parser.alphabet = dict((name, i) for i, name in
                           enumerate(alphabet_names(alphabet)))
    letters = parser.word()
    parser.take('end')
    return Word._from_reduced(letters)


def parse_presentation(text):
    """Parses ``< gens | relations >`` into a Presentation.

    Raises:
        WordParseError: as parse_word, and for duplicate generator names.
    """
    return _Parser(text).presentation()


def _format_letter(name, sign, count):
    if sign > 0:
        return name if count == 1 else '{}^{}'.format(name, count)
    return '{}^-{}'.format(name, count)


def _longest_power_prefix(letters):
    """``(period, reps)`` of the longest prefix that is a proper power.

    Uses the prefix function: a prefix of length L has smallest period
    ``L - pi[L - 1]``, and it is a power exactly when that period divides L.
    Returns ``(1, 1)`` when no prefix repeats.
    """
    pi = [0] * len(letters)
    best = (1, 1)
    for k in range(1, len(letters)):
        j = pi[k - 1]
        while j and letters[k] != letters[j]:
            j = pi[j - 1]
        if letters[k] == letters[j]:
            j += 1
        pi[k] = j
        length = k + 1
        period = length - j
        if j and length % period == 0:
            best = (period, length // period)
    return best


def _format_letters(letters, names):
    factors = []
    i = 0
    size = len(letters)
    while i < size:
        period, reps = _longest_power_prefix(letters[i:])
        if period == 1:
            index, sign = letters[i]
            factors.append(_format_letter(names[index], sign, reps))
        else:
            block = letters[i:i + period]
            negative = sum(1 for _, sign in block if sign < 0)
            if 2 * negative > period:
                block = tuple((index, -sign) for index, sign in
                              reversed(block))
                reps = -reps
            inner = _format_letters(block, names)
            factors.append('({})^{}'.format(inner, reps))
        i += period * abs(reps)
    return '*'.join(factors)


def format_word(w, alphabet):
    """Prints a word in the grammar, compressing repeated letters and blocks.

    The empty word prints as ``1``.

    Example::

        >>> format_word(parse_word("a*b*a*b*a^-2", "ab"), "ab")
        '(a*b)^2*a^-2'
    """
    names = alphabet_names(alphabet)
    if w.max_index() >= len(names):
        raise AlphabetMismatchError("word uses generator index {} outside {}"
                                    .format(w.max_index(), names))
    if not w.letters:
        return '1'
    return _format_letters(w.letters, names)


def format_presentation(p):
    """Prints ``< gens | relators >``; parse_presentation reads it back."""
    rels = ', '.join(format_word(r, p) for r in p.relators)
    body = '< {} | {} >'.format(', '.join(p.names), rels)
    return body.replace('|  >', '| >').replace('<  |', '< |')
