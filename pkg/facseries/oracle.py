#
# Copyright (c), 2020, facseries developers.
# All rights reserved.
# This file is distributed under the terms of the MIT License.
# See the file 'LICENSE' in the root directory of the present
# distribution, or http://opensource.org/licenses/MIT.
#
"""
This module contains the brute force evaluation of the series by truncated
summation. The k nested sums are grouped by shells of equal total degree, the
shell weights being the coefficients of the product of the generating polynomials
of the single indices.
"""
import logging
from collections import namedtuple
from fractions import Fraction

import mpmath
import numpy

from . import limits
from .exceptions import FacSeriesValueError, ResourceLimitError
from .helpers import as_rational, check_nonnegative_integer, check_positive_integer, \
    check_range, to_mpf
from .exact import factorial

logger = logging.getLogger('facseries')

TRUNCATION_MODES = ('per-index', 'total-degree')


class TruncationSpec(object):
    """
    The truncation of a multiple series.

    :param depth: the cap N, a positive integer.
    :param mode: 'per-index' for capping every index at N, 'total-degree' for \
    capping the sum of the indices at N.
    """
    __slots__ = ('depth', 'mode')

    def __init__(self, depth=None, mode='per-index'):
        if depth is None:
            depth = limits.DEFAULT_DEPTH
        check_positive_integer(depth, 'depth')
        if mode not in TRUNCATION_MODES:
            raise FacSeriesValueError("mode must be in %r, not %r" % (TRUNCATION_MODES, mode))
        object.__setattr__(self, 'depth', depth)
        object.__setattr__(self, 'mode', mode)

    def __setattr__(self, name, value):
        raise AttributeError("%r object is immutable" % self.__class__.__name__)

    def __repr__(self):
        return '%s(depth=%d, mode=%r)' % (self.__class__.__name__, self.depth, self.mode)

    def __eq__(self, other):
        if not isinstance(other, TruncationSpec):
            return NotImplemented
        return self.depth == other.depth and self.mode == other.mode

    def __hash__(self):
        return hash((self.depth, self.mode))

    @property
    def degree_cap(self):
        """The cap of the total degree, `None` in per-index mode."""
        return self.depth if self.mode == 'total-degree' else None

    def first_omitted_degree(self, k):
        """The first total degree whose shell is entirely left out of the sum."""
        return self.depth + 1 if self.mode == 'total-degree' else k * self.depth + 1


OracleResult = namedtuple('OracleResult', ['value', 'depth', 'mode', 'tail', 'loops'])
"""
Namedtuple for the result of a truncated summation. The *value* is the partial sum,
*tail* is a heuristic magnitude of the remainder (twice the first omitted shell, not
a proven bound) and *loops* is the number of inner iterations performed.
"""


def as_truncation(trunc):
    if trunc is None:
        return TruncationSpec()
    elif isinstance(trunc, TruncationSpec):
        return trunc
    return TruncationSpec(trunc)


def count_loops(k, trunc):
    """Counts the inner iterations of the shell convolution of k indices."""
    size = trunc.depth + 1
    cap = trunc.degree_cap
    loops, length = 0, 1
    for _ in range(k):
        loops += length * size
        length += size - 1
        if cap is not None:
            length = min(length, cap + 1)
    return loops


def check_loops(k, trunc):
    loops = count_loops(k, trunc)
    if loops > limits.MAX_ORACLE_LOOPS:
        raise ResourceLimitError(
            "the truncated sum over %d indices at depth %d requires %d loops, the "
            "limit is %d" % (k, trunc.depth, loops, limits.MAX_ORACLE_LOOPS),
            loops=loops, limit=limits.MAX_ORACLE_LOOPS
        )
    return loops


def shell_sums(weights, trunc, zero=0):
    """
    Multiplies the generating polynomials of the indices, truncating the product
    at the degree cap of the truncation.

    :param weights: a list of k lists, the i-th one containing the weights of the \
    values 0, 1, ..., N of the i-th index.
    :param trunc: a `TruncationSpec` instance.
    :param zero: the zero of the arithmetic of the weights.
    :returns: the list of the shell sums, indexed by total degree.
    """
    cap = trunc.degree_cap
    shells = [zero + 1]
    for w in weights:
        size = len(shells) + len(w) - 1
        if cap is not None:
            size = min(size, cap + 1)

        product = [zero] * size
        for a, shell in enumerate(shells):
            if not shell:
                continue
            for b, weight in enumerate(w):
                if a + b >= size:
                    break
                product[a + b] += shell * weight
        shells = product

    logger.debug("%d shells summed for %d indices", len(shells), len(weights))
    return shells


def shell_magnitude(starts, radii, weighted, degree):
    """
    Computes the sum of the absolute values of the weights of the full shell of a
    given total degree, without any per-index cap. Works in floating point with the
    radii scaled by their maximum.
    """
    top = max(radii)
    if not top:
        return mpmath.mpf(0) if degree else mpmath.mpf(1)

    n = numpy.arange(degree + 1, dtype=float)
    product = numpy.ones(1)
    for start, radius, flag in zip(starts, radii, weighted):
        poly = (radius / top) ** n
        if flag:
            poly = poly * n
        poly[:start] = 0.0
        product = numpy.convolve(product, poly)[:degree + 1]

    shell = product[degree] if len(product) > degree else 0.0
    return mpmath.mpf(float(shell)) * mpmath.mpf(top) ** degree


def oracle_skj(k, j, trunc=None):
    """
    Sums S_{k,j} = sum n1*...*nj / (n1+...+nk)! over 1 <= ni <= N, or over the
    indices with total degree up to N, in exact rational arithmetic.

    :param k: the number of indices, a positive integer.
    :param j: the number of weighted indices, 0 <= j <= k.
    :param trunc: a `TruncationSpec` instance or a depth, `DEFAULT_DEPTH` for default.
    :rtype: OracleResult
    """
    check_positive_integer(k, 'k')
    check_range(j, 0, k, 'j')
    trunc = as_truncation(trunc)
    loops = check_loops(k, trunc)

    n = trunc.depth
    weights = [[0] + [m if i < j else 1 for m in range(1, n + 1)] for i in range(k)]
    shells = shell_sums(weights, trunc)
    value = sum(Fraction(s, factorial(m)) for m, s in enumerate(shells) if s)

    degree = trunc.first_omitted_degree(k)
    tail = 2 * shell_magnitude([1] * k, [1] * k, [i < j for i in range(k)], degree) \
        / factorial(degree)
    return OracleResult(value, trunc.depth, trunc.mode, tail, loops)


def oracle_sk_of_x(k, nodes, trunc=None):
    """
    Sums S_k(x1, ..., xk) = sum x1^n1*...*xk^nk / (n1+...+nk)! over the truncated
    indices ni >= 1, in exact rational arithmetic.

    :param k: the number of indices, a positive integer.
    :param nodes: k rational values.
    :param trunc: a `TruncationSpec` instance or a depth, `DEFAULT_DEPTH` for default.
    :rtype: OracleResult
    """
    check_positive_integer(k, 'k')
    nodes = [as_rational(x) for x in nodes]
    if len(nodes) != k:
        raise FacSeriesValueError("%d nodes are required, %d provided" % (k, len(nodes)))
    trunc = as_truncation(trunc)
    loops = check_loops(k, trunc)

    n = trunc.depth
    weights = [[Fraction(0)] + [x ** m for m in range(1, n + 1)] for x in nodes]
    shells = shell_sums(weights, trunc, zero=Fraction(0))
    value = sum(s / factorial(m) for m, s in enumerate(shells) if s)

    degree = trunc.first_omitted_degree(k)
    radii = [float(abs(x)) for x in nodes]
    tail = 2 * shell_magnitude([1] * k, radii, [False] * k, degree) / factorial(degree)
    return OracleResult(value, trunc.depth, trunc.mode, tail, loops)


def oracle_gkl(coeffs, k, ell, nodes, trunc=None, digits=30):
    """
    Sums G_{k,l}(x1, ..., xk) = sum g_(n1+...+nk+l) * x1^n1*...*xk^nk over the
    truncated indices ni >= 0, in the arithmetic of `mpmath`.

    :param coeffs: a `SeriesCoeffs` instance.
    :param k: the number of indices, a positive integer.
    :param ell: the shift of the coefficients.
    :param nodes: k numbers inside the disk of convergence.
    :param trunc: a `TruncationSpec` instance or a depth, `DEFAULT_DEPTH` for default.
    :param digits: the number of significant digits of the working precision.
    :rtype: OracleResult
    """
    check_positive_integer(k, 'k')
    check_nonnegative_integer(ell, 'ell')
    check_positive_integer(digits, 'digits')
    if len(nodes) != k:
        raise FacSeriesValueError("%d nodes are required, %d provided" % (k, len(nodes)))
    trunc = as_truncation(trunc)

    with mpmath.workdps(digits + limits.NUMERIC_GUARD_DIGITS):
        xs = [to_mpf(x) for x in nodes]
        coeffs.check_radius(xs)
        loops = check_loops(k, trunc)

        n = trunc.depth
        weights = [[x ** m for m in range(n + 1)] for x in xs]
        shells = shell_sums(weights, trunc, zero=mpmath.mpf(0))
        value = mpmath.fsum(s * to_mpf(coeffs(m + ell)) for m, s in enumerate(shells) if s)

        degree = trunc.first_omitted_degree(k)
        radii = [float(abs(x)) for x in xs]
        tail = 2 * shell_magnitude([0] * k, radii, [False] * k, degree) \
            * abs(to_mpf(coeffs(degree + ell)))

    with mpmath.workdps(digits):
        return OracleResult(+value, trunc.depth, trunc.mode, +tail, loops)
