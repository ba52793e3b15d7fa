#
# Copyright (c), 2020, facseries developers.
# All rights reserved.
# This file is distributed under the terms of the MIT License.
# See the file 'LICENSE' in the root directory of the present
# distribution, or http://opensource.org/licenses/MIT.
#
"""
This module contains the decimal rendering of exact values. Digits of e^x are
computed with scaled integers, `ExpLinear` values are rendered with guard digits
and a cancellation-aware re-run.
"""
import logging
import warnings
from decimal import Decimal
from fractions import Fraction
from functools import lru_cache

import mpmath

from . import limits
from .exceptions import FacSeriesTypeError, FacSeriesValueError, FacSeriesWarning
from .helpers import as_rational, check_positive_integer, format_rational
from .exact import ExpLinear

logger = logging.getLogger('facseries')

LOG10_E = 0.4342944819032518


class DecimalValue(object):
    """
    A decimal number in scientific normal form sign * d.ddd... * 10^exponent, with
    a nonzero leading digit unless the value is zero.

    :param sign: 1 or -1.
    :param digits: the string of the significant digits.
    :param exponent: the decimal exponent of the leading digit.
    """
    __slots__ = ('sign', 'digits', 'exponent')

    def __init__(self, sign, digits, exponent=0):
        if sign not in (1, -1):
            raise FacSeriesValueError("sign must be 1 or -1: %r" % sign)
        elif not isinstance(digits, str) or not digits.isdigit():
            raise FacSeriesValueError("%r is not a string of decimal digits" % digits)
        elif digits[0] == '0' and digits.strip('0'):
            raise FacSeriesValueError("%r has a leading zero" % digits)

        if not digits.strip('0'):
            sign, exponent = 1, 0
        object.__setattr__(self, 'sign', sign)
        object.__setattr__(self, 'digits', digits)
        object.__setattr__(self, 'exponent', exponent)

    def __setattr__(self, name, value):
        raise AttributeError("%r object is immutable" % self.__class__.__name__)

    @classmethod
    def zero(cls, d=1):
        return cls(1, '0' * d)

    @classmethod
    def from_rational(cls, value, d):
        """
        Rounds a rational to d significant digits, half away from zero.

        :param value: an exact rational value.
        :param d: the number of significant digits, a positive integer.
        """
        value = as_rational(value)
        check_positive_integer(d, 'd')
        if not value:
            return cls.zero(d)

        sign = 1 if value > 0 else -1
        value = abs(value)
        exponent = len(str(value.numerator)) - len(str(value.denominator))
        if value < Fraction(10) ** exponent:
            exponent -= 1

        scaled = value * Fraction(10) ** (d - 1 - exponent)
        n = (2 * scaled.numerator + scaled.denominator) // (2 * scaled.denominator)
        if n == 10 ** d:
            n //= 10
            exponent += 1
        return cls(sign, str(n), exponent)

    @classmethod
    def from_number(cls, value, d):
        """
        Rounds a binary floating point number to d significant digits. The
        conversion of the `mpmath.mpf` mantissa is exact.
        """
        if not isinstance(value, mpmath.mpf):
            value = mpmath.mpf(value)
        if not mpmath.isfinite(value):
            raise FacSeriesValueError("cannot render a non finite value %r" % value)
        mantissa, exp2 = value.man_exp
        if not mantissa:
            return cls.zero(d)
        return cls.from_rational(Fraction(mantissa) * Fraction(2) ** exp2, d)

    def __repr__(self):
        return '%s(%d, %r, %d)' % (self.__class__.__name__, self.sign,
                                   self.digits, self.exponent)

    def __str__(self):
        if not self:
            return '0'
        elif abs(self.exponent) >= 6:
            return self.scientific()

        sign = '-' if self.sign < 0 else ''
        if self.exponent < 0:
            return '%s0.%s%s' % (sign, '0' * (-self.exponent - 1), self.digits)

        integer_part = self.digits[:self.exponent + 1].ljust(self.exponent + 1, '0')
        fractional_part = self.digits[self.exponent + 1:]
        if fractional_part:
            return '%s%s.%s' % (sign, integer_part, fractional_part)
        return sign + integer_part

    def __eq__(self, other):
        if not isinstance(other, DecimalValue):
            return NotImplemented
        return (self.sign, self.digits, self.exponent) == \
            (other.sign, other.digits, other.exponent)

    def __hash__(self):
        return hash((self.sign, self.digits, self.exponent))

    def __bool__(self):
        return bool(self.digits.strip('0'))

    def __float__(self):
        return float(self.to_decimal())

    def scientific(self):
        """Returns the scientific notation string 'd.ddde+X'."""
        sign = '-' if self.sign < 0 else ''
        mantissa = self.digits[0]
        if len(self.digits) > 1:
            mantissa += '.' + self.digits[1:]
        return '%s%se%+d' % (sign, mantissa, self.exponent)

    def to_decimal(self):
        """Returns the value as a `decimal.Decimal` with the same significant digits."""
        return Decimal((0 if self.sign > 0 else 1, tuple(int(c) for c in self.digits),
                        self.exponent - len(self.digits) + 1))

    def to_rational(self):
        return Fraction(self.to_decimal())


def _log10_estimate(value):
    # within 1 of floor(log10(|value|)) for nonzero rationals
    value = abs(value)
    return len(str(value.numerator)) - len(str(value.denominator))


@lru_cache(maxsize=256)
def _exp_scaled(x, prec):
    """
    Returns an integer within a few units of e^x * 10^prec, for a rational x and a
    nonnegative precision. Positive arguments are summed as a scaled-integer Taylor
    series, negative arguments are computed from the reciprocal.
    """
    if x < 0:
        extra = prec + 2
        return 10 ** (prec + extra) // _exp_scaled(-x, extra)

    guard = 10
    scale = 10 ** (prec + guard)
    term = total = scale
    p, q = x.numerator, x.denominator
    n = 0
    while term:
        n += 1
        term = term * p // (q * n)
        total += term

    logger.debug("e^(%s) summed with %d terms at %d digits", format_rational(x), n, prec)
    return total // 10 ** guard


def check_exp_argument(x):
    x = as_rational(x)
    if abs(x) > limits.MAX_EXP_ARGUMENT:
        raise FacSeriesValueError(
            "exponent %s is out of range: |x| must be at most %d"
            % (format_rational(x), limits.MAX_EXP_ARGUMENT)
        )
    return x


def exp_digits(x, d):
    """
    Computes e^x to d significant digits.

    :param x: a rational exponent with |x| <= `MAX_EXP_ARGUMENT`.
    :param d: the number of significant digits, a positive integer.
    :rtype: DecimalValue
    """
    check_positive_integer(d, 'd')
    x = check_exp_argument(x)
    magnitude = int(float(x) * LOG10_E)
    prec = d + limits.GUARD_DIGITS + max(0, -magnitude) + 1
    return DecimalValue.from_rational(Fraction(_exp_scaled(x, prec), 10 ** prec), d)


def as_explinear(value):
    if isinstance(value, ExpLinear):
        return value
    try:
        return ExpLinear(value)
    except FacSeriesTypeError:
        raise FacSeriesTypeError(
            "an ExpLinear or a rational value is required, not %r." % type(value)
        ) from None


def _scaled_sum(v, precision):
    total = round(v.constant * 10 ** precision)
    for x, b in v.terms:
        extra = max(0, _log10_estimate(b)) + 2
        value = b * Fraction(_exp_scaled(x, precision + extra), 10 ** extra)
        total += round(value)
    return total


def render(v, d):
    """
    Evaluates an exact value to d significant digits. The working precision is d
    plus `GUARD_DIGITS` plus an allowance for the digits cancelled by the sum of
    terms, that is discovered by a first pass and followed by re-runs at higher
    precision while at least `CANCELLATION_THRESHOLD` digits are lost. A
    `FacSeriesWarning` is emitted if `MAX_RENDER_PASSES` passes are not enough.

    :param v: an `ExpLinear` instance or an exact rational.
    :param d: the number of significant digits, a positive integer.
    :rtype: DecimalValue
    """
    v = as_explinear(v)
    check_positive_integer(d, 'd')
    if v.is_rational():
        return DecimalValue.from_rational(v.constant, d)

    for x, _ in v.terms:
        check_exp_argument(x)

    magnitudes = [_log10_estimate(b) + int(float(x) * LOG10_E) for x, b in v.terms]
    if v.constant:
        magnitudes.append(_log10_estimate(v.constant))
    top = max(magnitudes)
    target = d + limits.GUARD_DIGITS

    allowance = 0
    for k in range(limits.MAX_RENDER_PASSES):
        precision = max(0, target + allowance - top)
        total = _scaled_sum(v, precision)
        lost = target + 1 - len(str(abs(total))) if total else target + 1
        logger.debug("render pass %d at %d digits: %d digits cancelled", k + 1, precision,
                     max(allowance + lost, 0))

        if total and lost < limits.CANCELLATION_THRESHOLD:
            break
        allowance += max(lost, limits.CANCELLATION_THRESHOLD) + 1
    else:
        msg = "rendering of %s stopped after %d passes, the last digits may be inaccurate" \
            % (v, limits.MAX_RENDER_PASSES)
        logger.warning(msg)
        warnings.warn(msg, FacSeriesWarning, stacklevel=2)

    return DecimalValue.from_rational(Fraction(total, 10 ** precision), d)


def explinear_to_mpf(v, digits=None):
    """
    Evaluates an exact value with `mpmath`, at the given number of digits or at
    the current working precision.
    """
    v = as_explinear(v)
    if digits is None:
        digits = mpmath.mp.dps

    with mpmath.workdps(digits + limits.GUARD_DIGITS):
        value = mpmath.mpf(v.constant.numerator) / v.constant.denominator
        for x, b in v.terms:
            exponent = mpmath.mpf(x.numerator) / x.denominator
            value += mpmath.mpf(b.numerator) / b.denominator * mpmath.exp(exponent)

    with mpmath.workdps(digits):
        return +value
