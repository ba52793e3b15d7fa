#
# Copyright (c), 2020, facseries developers.
# All rights reserved.
# This file is distributed under the terms of the MIT License.
# See the file 'LICENSE' in the root directory of the present
# distribution, or http://opensource.org/licenses/MIT.
#
"""
This module contains the closed forms of the multiple factorial series:

  S_{k,j} = sum_{n1..nk >= 1} n1*...*nj / (n1+...+nk)!
  S_k(x1, ..., xk) = sum_{n1..nk >= 1} x1^n1*...*xk^nk / (n1+...+nk)!
  G_{k,l}(x1, ..., xk) = sum_{n1..nk >= 0} g_(n1+...+nk+l) * x1^n1*...*xk^nk

All the exact entry points take rational inputs and return exact values, the
decimal rendering is left to :mod:`facseries.numeval`.
"""
import sys
import logging
from fractions import Fraction

import mpmath

from . import limits
from .exceptions import FacSeriesValueError, EvaluationError, NodeError
from .helpers import as_rational, check_nonnegative_integer, check_positive_integer, \
    check_range, format_rational, to_mpf
from .exact import ExpLinear, factorial, binomial
from .exppoly import Poly, ExpPoly, build_zk_expell, build_zpow_expell, \
    nth_derivative, eval_at
from .divdiff import as_nodeset, divdiff_exact, divdiff_numeric, confluent_divdiff
from .numeval import render

logger = logging.getLogger('facseries')
logging_formatter = logging.Formatter('[%(levelname)s] %(message)s')
logging_handler = logging.StreamHandler(sys.stderr)
logging_handler.setFormatter(logging_formatter)
logger.addHandler(logging_handler)

EXPONENT_READINGS = ('k-1', 'ell-1')
"""
The readings of the power of z in the integrand z^p * g_l(z) of G_{k,l}: 'k-1' is
the one that reproduces the series, 'ell-1' is kept for auditing the alternative.
"""


def integrand_power(k, ell, exponent='k-1'):
    if exponent == 'k-1':
        return k - 1
    elif exponent == 'ell-1':
        return ell - 1
    raise FacSeriesValueError(
        "exponent must be in %r, not %r" % (EXPONENT_READINGS, exponent)
    )


###
# The S_{k,j} series
def s_kj_theorem(k, j):
    """
    Computes S_{k,j} as the confluent limit of a divided difference, that is
    (1/(k+j-1)!) * (d/dz)^(k+j-1) [z^(k-1) * exp_(k-j)(z)] at z = 1.

    :param k: the number of summation indices, a positive integer.
    :param j: the number of weighted indices, 0 <= j <= k.
    :rtype: ExpLinear
    """
    check_positive_integer(k, 'k')
    check_range(j, 0, k, 'j')
    return confluent_divdiff(build_zk_expell(k, k - j), k, j, 1)


def s_kj_binomial(k, j):
    """
    Computes S_{k,j} = e * sum_{i<j} C(j-1, i) / (k+j-i-1)! for 1 <= j <= k.

    :rtype: ExpLinear
    """
    check_positive_integer(k, 'k')
    if j == 0:
        raise FacSeriesValueError("j=0 has no binomial form, use s_k0() instead")
    check_range(j, 1, k, 'j')

    coefficient = sum(
        Fraction(binomial(j - 1, i), factorial(k + j - i - 1)) for i in range(j)
    )
    return ExpLinear.exp(1, coefficient)


def s_k0(k):
    """
    Computes S_{k,0} = (-1)^k * (1 - e * sum_{j<k} (-1)^j / j!).

    :rtype: ExpLinear
    """
    check_positive_integer(k, 'k')
    sign = -1 if k % 2 else 1
    partial_sum = sum(Fraction((-1) ** j, factorial(j)) for j in range(k))
    return ExpLinear(sign, [(1, -sign * partial_sum)])


def s_kj_reduced(k, j):
    """
    Computes S_{k,j} for 1 <= j <= k from the derivative of z^(j-1) * e^z, the
    polynomial part of the exp tail being annihilated by the derivative.

    :rtype: ExpLinear
    """
    check_positive_integer(k, 'k')
    check_range(j, 1, k, 'j')
    return confluent_divdiff(ExpPoly(Poly.monomial(j - 1)), k, j, 1)


def a_k(k):
    """
    Returns the rational a_k = S_{k,k} / e = sum_{i<k} C(k-1, i) / (2k-i-1)!.

    :rtype: Fraction
    """
    check_positive_integer(k, 'k')
    return sum(Fraction(binomial(k - 1, i), factorial(2 * k - i - 1)) for i in range(k))


def a_k_derivative(k):
    """
    Returns a_k from (1/(2k-1)!) * (d/dx)^(2k-1) [x^(k-1) * e^x] at x = 1.

    :rtype: Fraction
    """
    check_positive_integer(k, 'k')
    order = 2 * k - 1
    value = eval_at(nth_derivative(ExpPoly(Poly.monomial(k - 1)), order), 1) / factorial(order)
    if not value.is_rational_multiple_of_e():
        raise EvaluationError("%s is not a rational multiple of e" % value)
    return value.e_coefficient


###
# Series at rational nodes
def f_kl(k, ell, nodes, exponent='k-1'):
    """
    Computes f_{k,l}(x1, ..., xk) = [x1, ..., xk; z^(k-1) * exp_l(z)], the exp
    instance of G_{k,l}.

    :param k: the number of nodes.
    :param ell: the shift of the exponential series.
    :param nodes: k pairwise distinct nonzero rationals.
    :param exponent: the power reading of the integrand, see `EXPONENT_READINGS`.
    :rtype: ExpLinear
    """
    check_positive_integer(k, 'k')
    check_nonnegative_integer(ell, 'ell')
    nodes = as_nodeset(nodes)
    if len(nodes) != k:
        raise FacSeriesValueError("%d nodes are required, %d provided" % (k, len(nodes)))

    f = build_zpow_expell(integrand_power(k, ell, exponent), ell)
    return divdiff_exact(f, nodes)


def s_k_of_x(k, nodes):
    """
    Computes S_k(x1, ..., xk) = x1*...*xk * [x1, ..., xk; z^(k-1) * exp_k(z)].

    :rtype: ExpLinear
    """
    nodes = as_nodeset(nodes)
    return f_kl(k, k, nodes) * nodes.product()


def s_k_diagonal(k, x):
    """
    Computes S_k(x, ..., x) as the fully confluent limit of S_k(x1, ..., xk).
    For x = 1 it equals S_{k,0}.

    :param k: a positive integer.
    :param x: a nonzero rational.
    :rtype: ExpLinear
    """
    check_positive_integer(k, 'k')
    x = as_rational(x)
    if not x:
        raise NodeError("node 0 is not admitted: nodes must be nonzero", node=x)
    return confluent_divdiff(build_zk_expell(k, k), k, 0, x) * x ** k


###
# Generic coefficients
def g_kl_numeric(coeffs, k, ell, nodes, digits=30, exponent='k-1'):
    """
    Computes numerically G_{k,l}(x1, ..., xk) = [x1, ..., xk; z^(k-1) * g_l(z)],
    with g_l(z) = sum_n g_(n+l) * z^n summed to the working precision.

    :param coeffs: a `SeriesCoeffs` instance.
    :param k: the number of nodes.
    :param ell: the shift of the coefficients.
    :param nodes: k pairwise distinct numbers inside the disk of convergence.
    :param digits: the number of significant digits required.
    :param exponent: the power reading of the integrand, see `EXPONENT_READINGS`.
    :rtype: mpmath.mpf
    """
    check_positive_integer(k, 'k')
    check_nonnegative_integer(ell, 'ell')
    check_positive_integer(digits, 'digits')
    if len(nodes) != k:
        raise FacSeriesValueError("%d nodes are required, %d provided" % (k, len(nodes)))
    power = integrand_power(k, ell, exponent)

    with mpmath.workdps(digits + limits.NUMERIC_GUARD_DIGITS):
        xs = [to_mpf(x) for x in nodes]
        coeffs.check_radius(xs)
        if power < 0:
            for x in xs:
                if not x:
                    raise NodeError("node 0 is a pole of z^%d" % power, node=x)

        values = [x ** power * coeffs.tail(ell, x, digits) for x in xs]
        logger.debug("G_{%d,%d} integrand evaluated on %d nodes", k, ell, k)
        return divdiff_numeric(values, xs, digits)


def g_kl_confluent(coeffs, k, ell, j, x, digits=30):
    """
    Computes the confluent value (1/(k+j-1)!) * (d/dz)^(k+j-1) [z^(k-1) * g_l(z)]
    at a point, with the numeric differentiation of `mpmath`.

    :param coeffs: a `SeriesCoeffs` instance.
    :param k: the number of coalesced nodes.
    :param ell: the shift of the coefficients.
    :param j: the order of the partial derivative.
    :param x: the point of coalescence, inside the disk of convergence.
    :param digits: the number of significant digits required.
    :rtype: mpmath.mpf
    """
    check_positive_integer(k, 'k')
    check_nonnegative_integer(ell, 'ell')
    check_nonnegative_integer(j, 'j')
    check_positive_integer(digits, 'digits')
    order = k + j - 1

    def integrand(z):
        return z ** (k - 1) * coeffs.tail(ell, z, mpmath.mp.dps)

    with mpmath.workdps(digits + limits.NUMERIC_GUARD_DIGITS):
        x = to_mpf(x)
        coeffs.check_radius([x])
        result = mpmath.diff(integrand, x, order) / factorial(order)

    with mpmath.workdps(digits):
        return +result


###
# Tables
def format_compact(value):
    """
    Formats an exact value a + b*e in the compact way of the tables, eg. 'e-1',
    'e/2-1', '1-e/3' and '3e/8-1'. Other values are formatted with `str()`.
    """
    if value.exponents not in ((), (1,)):
        return str(value)

    constant, c = value.constant, value.e_coefficient
    if not c:
        return format_rational(constant)

    magnitude = abs(c)
    if magnitude.denominator == 1:
        e_term = 'e' if magnitude == 1 else '%de' % magnitude.numerator
    elif magnitude.numerator == 1:
        e_term = 'e/%d' % magnitude.denominator
    else:
        e_term = '%de/%d' % (magnitude.numerator, magnitude.denominator)

    if not constant:
        return e_term if c > 0 else '-' + e_term
    elif c > 0:
        return '%s%s%s' % (e_term, '+' if constant > 0 else '-', format_rational(abs(constant)))
    return '%s-%s' % (format_rational(constant), e_term)


class FactorialSeriesTable(object):
    """
    The table of the values S_{k,j} for 0 <= j <= k <= max_k and the table of the
    rationals a_k = S_{k,k} / e, the last one extended with the rows k=10 and k=100.

    :param max_k: the last row of the tables, from 1 to `MAX_TABLE_K`.
    :param loglevel: for setting a different logging level for the table building, \
    can be an int or a level name. The level is restored to WARNING after building.
    :param check: if `True` every cell j >= 1 is computed also with the confluent \
    divided difference and compared to the binomial form.
    """
    extra_a_rows = (10, 100)

    def __init__(self, max_k, loglevel=None, check=False):
        check_range(max_k, 1, limits.MAX_TABLE_K, 'max_k')
        if loglevel is not None:
            if isinstance(loglevel, str):
                level = loglevel.strip().upper()
                if level in {'DEBUG', 'INFO', 'WARN', 'WARNING', 'ERROR', 'CRITICAL'}:
                    loglevel = getattr(logging, level)
            logger.setLevel(loglevel)

        self.max_k = max_k
        self.rows = []
        for k in range(1, max_k + 1):
            row = [s_k0(k)]
            for j in range(1, k + 1):
                value = s_kj_binomial(k, j)
                if check and value != s_kj_theorem(k, j):
                    raise EvaluationError("the S_{%d,%d} closed forms disagree" % (k, j))
                row.append(value)
            self.rows.append(row)
            logger.debug("row k=%d of the S_{k,j} table built", k)

        self.a_rows = [(k, a_k(k)) for k in range(1, max_k + 1)]
        self.a_rows.extend((k, a_k(k)) for k in self.extra_a_rows if k > max_k)
        logger.info("built the tables of S_{k,j} and a_k up to k=%d", max_k)

        if loglevel is not None:
            logger.setLevel(logging.WARNING)

    def __repr__(self):
        return '%s(max_k=%d)' % (self.__class__.__name__, self.max_k)

    def __getitem__(self, item):
        k, j = item
        check_range(k, 1, self.max_k, 'k')
        check_range(j, 0, k, 'j')
        return self.rows[k - 1][j]

    def format_cell(self, k, j):
        """
        Formats a cell as in the printed tables: the column j=0 shows the full
        value, the other columns show the coefficient of e.
        """
        value = self[k, j]
        return format_compact(value) if not j else format_rational(value.e_coefficient)

    def iter_rows(self):
        """Yields couples (k, list of formatted cells)."""
        for k in range(1, self.max_k + 1):
            yield k, [self.format_cell(k, j) for j in range(k + 1)]

    def iter_a_rows(self, digits=16):
        """Yields triples (k, a_k, decimal rendering of a_k)."""
        for k, value in self.a_rows:
            yield k, value, render(value, digits)

    def to_text(self, digits=6):
        """Returns the tables as plain text."""
        lines = ['k\\j | ' + ' '.join(str(j) for j in range(self.max_k + 1))]
        lines.extend('%3d | %s' % (k, ', '.join(cells)) for k, cells in self.iter_rows())
        lines.append('')
        lines.append('  k | a_k')
        for k, value, decimal in self.iter_a_rows(digits):
            if k <= self.max_k:
                lines.append('%3d | %s ~ %s' % (k, format_rational(value), decimal))
            else:
                lines.append('%3d | %s' % (k, decimal))
        return '\n'.join(lines)
