#
# Copyright (c), 2020, facseries developers.
# All rights reserved.
# This file is distributed under the terms of the MIT License.
# See the file 'LICENSE' in the root directory of the present
# distribution, or http://opensource.org/licenses/MIT.
#
"""
This module contains various helper functions for parsing and converting numbers.
"""
import re
from decimal import Decimal
from fractions import Fraction
from numbers import Rational

import mpmath

from .exceptions import FacSeriesTypeError, FacSeriesValueError

RATIONAL_PATTERN = re.compile(r'^\s*[+-]?\d+(\s*/\s*\d+)?\s*$')
DECIMAL_PATTERN = re.compile(r'^\s*[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?\s*$')


def is_integer(value):
    """Checks if a value is an integer and not a boolean."""
    return isinstance(value, int) and not isinstance(value, bool)


def check_nonnegative_integer(value, name):
    if not is_integer(value):
        raise FacSeriesTypeError("%s must be an integer, not %r." % (name, type(value)))
    elif value < 0:
        raise FacSeriesValueError("%s must be nonnegative: %r" % (name, value))


def check_positive_integer(value, name):
    if not is_integer(value):
        raise FacSeriesTypeError("%s must be an integer, not %r." % (name, type(value)))
    elif value < 1:
        raise FacSeriesValueError("%s must be a positive integer: %r" % (name, value))


def as_rational(value):
    """
    Converts an exact value to a `Fraction`. Strings are parsed with `parse_rational`.

    :param value: an int, a Fraction, another `numbers.Rational` or a string.
    """
    if isinstance(value, Fraction):
        return value
    elif isinstance(value, Rational) and not isinstance(value, bool):
        return Fraction(value.numerator, value.denominator)
    elif isinstance(value, str):
        return parse_rational(value)
    raise FacSeriesTypeError("an exact rational value is required, not %r." % type(value))


def parse_rational(text):
    """
    Parses an integer literal or a fraction literal "p/q". Decimal literals are
    rejected, so that no precision is silently lost by exact computations.
    """
    if RATIONAL_PATTERN.match(text) is None:
        if DECIMAL_PATTERN.match(text) is not None:
            msg = "%r is a decimal literal: write it as a fraction 'p/q' for exact input."
        else:
            msg = "%r is not a rational number."
        raise FacSeriesValueError(msg % text)

    try:
        return Fraction(text.replace(' ', ''))
    except ZeroDivisionError:
        raise FacSeriesValueError("%r has a zero denominator." % text) from None


def parse_number(text):
    """
    Parses a numeric literal for the high-precision paths. Fractions are converted
    exactly to the working precision, decimal literals are taken as they are written.
    """
    if RATIONAL_PATTERN.match(text) is not None:
        return to_mpf(parse_rational(text))
    elif DECIMAL_PATTERN.match(text) is not None:
        return mpmath.mpf(text.strip())
    raise FacSeriesValueError("%r is not a number." % text)


def parse_nodes(text, exact=True):
    """
    Parses a comma separated list of nodes.

    :param text: the string to parse, eg. '1/2,1/3'.
    :param exact: if `True` returns a list of fractions, otherwise a list of \
    `mpmath.mpf` values at the current working precision.
    """
    parse = parse_rational if exact else parse_number
    items = [s for s in text.split(',')]
    if not items or any(not s.strip() for s in items):
        raise FacSeriesValueError("%r is not a comma separated list of nodes." % text)
    return [parse(s) for s in items]


def to_mpf(value):
    """Converts a number to an `mpmath.mpf` at the current working precision."""
    if isinstance(value, Fraction):
        return mpmath.mpf(value.numerator) / value.denominator
    elif isinstance(value, str):
        return parse_number(value)
    elif isinstance(value, Decimal):
        return mpmath.mpf(str(value))
    return mpmath.mpf(value)


def format_rational(value):
    """Renders a rational as 'p/q', omitting the denominator of integers."""
    if value.denominator == 1:
        return str(value.numerator)
    return '%d/%d' % (value.numerator, value.denominator)


def check_range(value, low, high, name):
    if not is_integer(value):
        raise FacSeriesTypeError("%s must be an integer, not %r." % (name, type(value)))
    elif not low <= value <= high:
        raise FacSeriesValueError("%s=%d is out of range [%d, %d]" % (name, value, low, high))
