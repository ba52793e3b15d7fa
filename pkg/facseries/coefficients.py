#
# Copyright (c), 2020, facseries developers.
# All rights reserved.
# This file is distributed under the terms of the MIT License.
# See the file 'LICENSE' in the root directory of the present
# distribution, or http://opensource.org/licenses/MIT.
#
"""
This module contains the coefficient providers of power series g(z) = sum g_n z^n.
"""
import logging
from fractions import Fraction

import mpmath

from . import limits
from .exceptions import FacSeriesTypeError, FacSeriesValueError, RadiusError, \
    ResourceLimitError
from .helpers import check_nonnegative_integer, to_mpf
from .exact import factorial

logger = logging.getLogger('facseries')


class SeriesCoeffs(object):
    """
    The coefficients of a power series g(z) = sum_{n>=0} g_n z^n, converging
    for |z| < radius.

    :param name: a label for the series.
    :param coeff: a function that maps a nonnegative integer n to g_n, as a \
    Fraction, an int or an `mpmath.mpf`.
    :param radius: the radius of convergence, a positive number or `mpmath.inf`.
    """
    def __init__(self, name, coeff, radius=mpmath.inf):
        if not callable(coeff):
            raise FacSeriesTypeError("coeff must be a callable, not %r." % type(coeff))
        elif not radius > 0:
            raise FacSeriesValueError("the radius of convergence must be positive: %r" % radius)
        self.name = name
        self.coeff = coeff
        self.radius = radius

    def __repr__(self):
        return '%s(name=%r, radius=%r)' % (self.__class__.__name__, self.name, self.radius)

    def __call__(self, n):
        check_nonnegative_integer(n, 'n')
        return self.coeff(n)

    def check_radius(self, nodes):
        """Raises a `RadiusError` if a node is not strictly inside the disk of convergence."""
        for x in nodes:
            if not abs(x) < self.radius:
                raise RadiusError(
                    "node %s is outside the disk of convergence |z| < %s of %r series"
                    % (mpmath.nstr(to_mpf(x), 15), self.radius, self.name),
                    node=x, radius=self.radius
                )

    def tail(self, ell, z, digits):
        """
        Evaluates g_ell(z) = sum_{n>=0} g_(n+ell) z^n. The summation stops when two
        consecutive terms fall below 10 ** -(digits + SERIES_TAIL_DIGITS) and the
        ratio of the last coefficients times |z| is below 1.

        :param ell: the shift of the coefficients.
        :param z: the point, an `mpmath.mpf` inside the disk of convergence.
        :param digits: the number of significant digits required.
        """
        z = to_mpf(z)
        self.check_radius([z])
        eps = mpmath.mpf(10) ** -(digits + limits.SERIES_TAIL_DIGITS)

        total = mpmath.mpf(0)
        power = mpmath.mpf(1)
        previous_coeff = None
        small_terms = 0
        for n in range(limits.MAX_SERIES_TERMS):
            c = to_mpf(self.coeff(n + ell))
            term = c * power
            total += term

            if abs(term) < eps:
                small_terms += 1
                ratio_ok = previous_coeff is None or not previous_coeff \
                    or abs(c / previous_coeff * z) < 1
                if small_terms >= 2 and ratio_ok:
                    logger.debug("%s tail g_%d summed with %d terms", self.name, ell, n + 1)
                    return total
            else:
                small_terms = 0

            previous_coeff = c
            power *= z

        raise ResourceLimitError(
            "the series %r does not converge at z=%s within %d terms"
            % (self.name, mpmath.nstr(z, 15), limits.MAX_SERIES_TERMS),
            loops=limits.MAX_SERIES_TERMS, limit=limits.MAX_SERIES_TERMS
        )


def exp_coeff(n):
    return Fraction(1, factorial(n))


def geometric_coeff(n):
    return 1


EXP_SERIES = SeriesCoeffs('exp', exp_coeff)
GEOMETRIC_SERIES = SeriesCoeffs('geometric', geometric_coeff, radius=1)

SERIES_MAP = {
    'exp': EXP_SERIES,
    'geometric': GEOMETRIC_SERIES,
}


def get_series(name):
    try:
        return SERIES_MAP[name]
    except KeyError:
        raise FacSeriesValueError(
            "unknown series %r, it must be in %r" % (name, tuple(SERIES_MAP))
        ) from None
