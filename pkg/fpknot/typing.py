# -*- coding: utf-8 -*-
"""
typing.py

Functions for testing that user input is valid. These functions check a
user's parameters before a presentation is built or an enumeration starts.
Otherwise a bad parameter shows up much later, as a puzzling group order or
an enumeration that never finishes, and the user has no idea why. These
functions raise an exception first, with a message that says what was
expected and what was actually entered.

Suggested format for these functions:

* first check that the input has the right type,
* then check the value, with a regular expression for strings,
* raise exceptions when user input breaks format; return the cleaned value.
"""
from __future__ import absolute_import, print_function
import numbers
import re

from .exceptions import ParameterError, WordParseError

GENERATOR_PATTERN = re.compile(r"[a-z][A-Za-z0-9_]*\Z")


def _check_int(input, name):
    # bool is an int subclass; True is not a twist count.
    if isinstance(input, bool) or not isinstance(input, numbers.Integral):
        raise TypeError("{} should be an integer. Actual value: {!r}"
                        .format(name, input))
    return int(input)


def check_generator_name(input):
    """Checks that a generator name is a lowercase ASCII identifier.

    Greek letters are spelled out: 'alpha', 'beta', 'gamma'.
    """
    if not isinstance(input, str):
        raise TypeError("Generator names should be strings. Actual value: "
                        "{!r}".format(input))
    if not GENERATOR_PATTERN.match(input):
        raise WordParseError("Generator names start with a lowercase letter "
                             "followed by letters, digits or underscores. "
                             "Actual value: {!r}".format(input))
    return input


def check_pretzel_params(l, m, n):
    """Checks the parameters of a Klein bottle K(l, m, n).

    l must be even with |l| >= 2; m and n must be odd with |m|, |n| >= 3.
    """
    l = _check_int(l, 'l')
    m = _check_int(m, 'm')
    n = _check_int(n, 'n')
    if l % 2 != 0 or abs(l) < 2:
        raise ParameterError("l should be an even integer with |l| >= 2. "
                             "Actual value: {}".format(l))
    for name, value in (('m', m), ('n', n)):
        if value % 2 == 0 or abs(value) < 3:
            raise ParameterError("{} should be an odd integer with |{}| >= 3."
                                 " Actual value: {}".format(name, name, value))
    return l, m, n


def check_positive_params(l, m, n):
    """Checks that every twist parameter is positive.

    The half-twist formulas of the Wirtinger presentation are only written
    down for positive parameters.
    """
    l = _check_int(l, 'l')
    m = _check_int(m, 'm')
    n = _check_int(n, 'n')
    for name, value in (('l', l), ('m', m), ('n', n)):
        if value <= 0:
            raise ParameterError("The Wirtinger presentation is only built "
                                 "for positive parameters. {} = {}"
                                 .format(name, value))
    return l, m, n


def check_triangle_params(l, m, n):
    """Checks that a triangle triple has every magnitude at least 2."""
    values = tuple(_check_int(v, name) for v, name in
                   ((l, 'l'), (m, 'm'), (n, 'n')))
    for value in values:
        if abs(value) < 2:
            raise ParameterError("Triangle group parameters need absolute "
                                 "value >= 2. Actual values: {}"
                                 .format(values))
    return values


def check_howlett_parity(l, m, n):
    """Checks for the (even, odd, odd) parity pattern of the Klein bottles."""
    l, m, n = check_triangle_params(l, m, n)
    if not (l % 2 == 0 and m % 2 == 1 and n % 2 == 1):
        raise ParameterError("The H2 rank rule is implemented only for l even "
                             "and m, n odd. Actual values: ({}, {}, {})"
                             .format(l, m, n))
    return l, m, n


def check_delta(input):
    """Checks that delta is 3 or 5, the two finite meridian quotients."""
    input = _check_int(input, 'delta')
    if input not in (3, 5):
        raise ParameterError("delta should be 3 or 5. Actual value: {}"
                             .format(input))
    return input


def check_max_cosets(input):
    """Checks a coset limit; accepts integers or decimal strings.

    Strings come from the FPKNOT_MAX_COSETS environment variable.
    """
    if input is None:
        return None
    if isinstance(input, str):
        if not re.match(r"^\s*\d+\s*$", input):
            raise ParameterError("The coset limit should be a positive "
                                 "integer. Actual value: {!r}".format(input))
        input = int(input)
    input = _check_int(input, 'max_cosets')
    if input < 1:
        raise ParameterError("The coset limit should be at least 1. "
                             "Actual value: {}".format(input))
    return input
