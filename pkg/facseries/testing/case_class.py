#
# Copyright (c), 2020, facseries developers.
# All rights reserved.
# This file is distributed under the terms of the MIT License.
# See the file 'LICENSE' in the root directory of the present
# distribution, or http://opensource.org/licenses/MIT.
#
"""
Tests subpackage module: common definitions for unittest scripts of the 'facseries' package.
"""
import unittest
from decimal import Decimal
from fractions import Fraction

import mpmath

from ..exact import ExpLinear
from ..numeval import DecimalValue, explinear_to_mpf
from ..helpers import to_mpf


class FacSeriesTestCase(unittest.TestCase):
    """
    Base class for testing exact and high-precision values. The comparisons are
    done at `digits` decimal digits of working precision.
    """
    digits = 40

    def to_number(self, value):
        """Converts a value of any of the package types to an `mpmath.mpf`."""
        if isinstance(value, ExpLinear):
            return explinear_to_mpf(value, self.digits)
        elif isinstance(value, DecimalValue):
            return to_mpf(value.to_decimal())
        elif isinstance(value, (Fraction, Decimal, str)):
            return to_mpf(value)
        return mpmath.mpf(value)

    def assertExpLinearEqual(self, first, second, msg=None):
        """Asserts the structural equality of two `ExpLinear` values."""
        self.assertIsInstance(first, ExpLinear)
        if not isinstance(second, ExpLinear):
            second = ExpLinear(second)
        if first != second:
            standard_msg = "%s != %s" % (first, second)
            self.fail(self._formatMessage(msg, standard_msg))

    def assertClose(self, first, second, tolerance=1e-12, relative=False, msg=None):
        """
        Asserts that two values differ less than a tolerance. The values can be
        fractions, `ExpLinear` or `DecimalValue` instances, decimals or mpmath numbers.
        """
        with mpmath.workdps(self.digits):
            a, b = self.to_number(first), self.to_number(second)
            delta = abs(a - b)
            if relative:
                delta /= max(abs(a), abs(b)) or 1
            if not delta < tolerance:
                standard_msg = "%s and %s differ by %s, more than %g" % (
                    mpmath.nstr(a, 25), mpmath.nstr(b, 25), mpmath.nstr(delta, 5), tolerance
                )
                self.fail(self._formatMessage(msg, standard_msg))

    def check_canonical(self, value):
        """Checks the canonical form of an `ExpLinear` value."""
        self.assertIsInstance(value, ExpLinear)
        self.assertIsInstance(value.constant, Fraction)
        exponents = value.exponents
        self.assertEqual(list(exponents), sorted(set(exponents)))
        self.assertNotIn(0, exponents)
        for x, c in value.terms:
            self.assertIsInstance(x, Fraction)
            self.assertIsInstance(c, Fraction)
            self.assertNotEqual(c, 0)
