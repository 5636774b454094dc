# -*- coding: utf-8 -*-
"""
exceptions.py

This module contains all of the custom exceptions defined in this package. The
base class is FPKnotException, and all custom exceptions are subclasses of
FPKnotException.

Use the errors like this::

    try:
        pres = fpknot.parse_presentation(text)
        table = fpknot.enumerate_cosets(pres)
    except fpknot.WordParseError as err:
        # the text was malformed; err.position points at the problem.
    except fpknot.FPKnotException:
        # anything else this package complains about.

An enumeration that runs out of room is *not* an exception: the coset
enumerator returns an ``Overflow`` value, because infinite groups are
expected inputs. Only the pipelines that cannot go on without a finished
table raise ``EnumerationOverflow``.

Example::

    raise ParameterError("l must be even. Actual value: 3")
"""
from __future__ import absolute_import, print_function


class FPKnotException(Exception):
    """
        This is the base class for all exceptions created for the
        fpknot package. This class is not meant to be raised.
    """
    pass


class WordParseError(FPKnotException, ValueError):
    """Raised when a word or presentation cannot be parsed.

        The ``position`` attribute holds the 0-based character offset of the
        problem in the parsed text, or None when the problem is not tied to
        a single place (for example, a duplicate generator name).

        Usage::

            raise WordParseError("unexpected ')'", position=7)
    """

    def __init__(self, msg, position=None):
        if position is not None:
            msg = "{} (at position {})".format(msg, position)
        super(WordParseError, self).__init__(msg)
        self.position = position


class AlphabetMismatchError(FPKnotException, ValueError):
    """A word refers to generators outside the alphabet it is used with."""
    pass


class ParameterError(FPKnotException, ValueError):
    """Raised when group parameters break a builder's preconditions.

        Do not catch this error for interactive sessions: the message says
        which parameter is wrong and what was entered.
    """
    pass


class IncompleteTableError(FPKnotException, ValueError):
    """A coset table has undefined entries where a complete one is needed."""
    pass


class EnumerationOverflow(FPKnotException):
    """A coset enumeration had to finish but hit its resource limit.

        The ``overflow`` attribute holds the ``Overflow`` value returned by
        the enumerator, with its statistics.
    """

    def __init__(self, msg, overflow=None):
        super(EnumerationOverflow, self).__init__(msg)
        self.overflow = overflow


class MissingImageError(FPKnotException, KeyError):
    """A generator assignment has no image for some source generator."""

    def __str__(self):
        return str(self.args[0]) if self.args else ''


class NotRegularError(FPKnotException, ValueError):
    """A regular representation (cosets of the trivial subgroup) is needed."""
    pass
