#!/usr/bin/env python
#
# Copyright (c), 2020, facseries developers.
# All rights reserved.
# This file is distributed under the terms of the MIT License.
# See the file 'LICENSE' in the root directory of the present
# distribution, or http://opensource.org/licenses/MIT.
#
"""Tests for the decimal rendering of exact values"""
import unittest
from unittest.mock import patch
from decimal import Decimal
from fractions import Fraction

import mpmath
from hypothesis import given, settings

from facseries import limits
from facseries.exceptions import FacSeriesTypeError, FacSeriesValueError, FacSeriesWarning
from facseries.exact import ExpLinear, ZERO
from facseries.numeval import DecimalValue, exp_digits, render, explinear_to_mpf
from facseries.testing import FacSeriesTestCase, explinear_values

E = ExpLinear.exp(1)


class TestDecimalValue(unittest.TestCase):

    def test_from_rational(self):
        value = DecimalValue.from_rational(Fraction(2, 3), 7)
        self.assertEqual((value.sign, value.digits, value.exponent), (1, '6666667', -1))
        self.assertEqual(str(value), '0.6666667')

        # ties are rounded away from zero
        self.assertEqual(str(DecimalValue.from_rational(Fraction(1, 8), 2)), '0.13')
        self.assertEqual(str(DecimalValue.from_rational(Fraction(-1, 8), 2)), '-0.13')

        # rounding up to the next power of ten
        value = DecimalValue.from_rational(Fraction(9999, 1000), 3)
        self.assertEqual(value, DecimalValue(1, '100', 1))
        self.assertEqual(str(value), '10.0')

    def test_string_forms(self):
        self.assertEqual(str(DecimalValue.from_rational(123456, 3)), '123000')
        self.assertEqual(str(DecimalValue.from_rational(12345678, 3)), '1.23e+7')
        self.assertEqual(str(DecimalValue.from_rational(Fraction(3, 10 ** 7), 2)), '3.0e-7')
        self.assertEqual(str(DecimalValue.from_rational(Fraction(-7, 100), 1)), '-0.07')
        self.assertEqual(DecimalValue(-1, '25', -2).scientific(), '-2.5e-2')
        self.assertEqual(repr(DecimalValue(1, '25', 3)), "DecimalValue(1, '25', 3)")

    def test_zero(self):
        zero = DecimalValue.zero(5)
        self.assertEqual(str(zero), '0')
        self.assertFalse(zero)
        self.assertEqual(DecimalValue(-1, '000', 4), DecimalValue.zero(3))
        self.assertEqual(DecimalValue.from_rational(0, 3).to_rational(), 0)

    def test_invalid_values(self):
        with self.assertRaises(FacSeriesValueError):
            DecimalValue(2, '1')
        with self.assertRaises(FacSeriesValueError):
            DecimalValue(1, '012')
        with self.assertRaises(FacSeriesValueError):
            DecimalValue(1, '1.5')
        with self.assertRaises(FacSeriesValueError):
            DecimalValue.from_rational(Fraction(1, 3), 0)

        value = DecimalValue(1, '5')
        with self.assertRaises(AttributeError):
            value.digits = '6'

    def test_conversions(self):
        value = DecimalValue.from_rational(Fraction(2, 3), 7)
        self.assertEqual(value.to_decimal(), Decimal('0.6666667'))
        self.assertEqual(value.to_rational(), Fraction(6666667, 10 ** 7))
        self.assertEqual(float(value), 0.6666667)
        self.assertEqual(hash(value), hash(DecimalValue(1, '6666667', -1)))

    def test_from_number(self):
        self.assertEqual(str(DecimalValue.from_number(mpmath.mpf('0.5'), 3)), '0.500')
        self.assertEqual(str(DecimalValue.from_number(0.25, 2)), '0.25')
        self.assertEqual(str(DecimalValue.from_number(mpmath.mpf(0), 4)), '0')
        with mpmath.workdps(30):
            value = DecimalValue.from_number(mpmath.mpf(1) / 3, 20)
        self.assertEqual(value.digits, '3' * 20)

        with self.assertRaises(FacSeriesValueError):
            DecimalValue.from_number(mpmath.inf, 5)


class TestExpDigits(FacSeriesTestCase):

    def test_exp_digits(self):
        self.assertEqual(str(exp_digits(1, 21)), '2.71828182845904523536')
        self.assertEqual(str(exp_digits(0, 5)), '1.0000')
        self.assertEqual(str(exp_digits(-1, 10)), '0.3678794412')
        self.assertEqual(str(exp_digits(2, 8)), '7.3890561')
        self.assertEqual(str(exp_digits(-100, 5)), '3.7201e-44')

    def test_exp_digits_against_mpmath(self):
        for x in (Fraction(1, 3), Fraction(-7, 2), Fraction(45), Fraction(-81, 4)):
            with mpmath.workdps(40):
                expected = mpmath.exp(mpmath.mpf(x.numerator) / x.denominator)
            self.assertClose(exp_digits(x, 30), expected, 1e-29, relative=True)

    def test_reciprocal_product(self):
        product = exp_digits(-1, 30).to_rational() * exp_digits(1, 30).to_rational()
        self.assertClose(product, 1, 1e-28)

    def test_invalid_arguments(self):
        with self.assertRaises(FacSeriesValueError):
            exp_digits(101, 5)
        with self.assertRaises(FacSeriesValueError):
            exp_digits(1, 0)
        with self.assertRaises(FacSeriesTypeError):
            exp_digits(0.5, 5)


class TestRender(FacSeriesTestCase):

    def test_render(self):
        self.assertEqual(str(render(E * Fraction(2, 3), 7)), '1.812188')
        self.assertEqual(str(render(1 - E / 3, 7)), '0.09390606')
        self.assertEqual(str(render(E * Fraction(5, 24), 15)), '0.566308714262301')
        self.assertEqual(str(render(1 - E, 4)), '-1.718')
        self.assertEqual(str(render(ExpLinear.exp(-50), 6)), '1.92875e-22')

    def test_render_rationals(self):
        self.assertEqual(str(render(ZERO, 5)), '0')
        self.assertEqual(str(render(Fraction(1, 3), 4)), '0.3333')
        self.assertEqual(str(render(2, 3)), '2.00')

        with self.assertRaises(FacSeriesTypeError):
            render(0.5, 5)
        with self.assertRaises(FacSeriesValueError):
            render(ExpLinear.exp(200), 5)

    def test_cancellation(self):
        # e minus its 30 decimals approximation
        v = E - Fraction('2.718281828459045235360287471353')
        with self.assertLogs('facseries', level='DEBUG') as ctx:
            self.assertEqual(str(render(v, 5)), '-3.3750e-31')
        self.assertGreater(len([msg for msg in ctx.output if 'render pass' in msg]), 1)
        self.assertClose(render(v, 20), v, 1e-18, relative=True)

        # exact cancellation
        v = ExpLinear.exp(Fraction(1, 2)) - ExpLinear.exp(Fraction(1, 2))
        self.assertEqual(str(render(v, 5)), '0')

    def test_render_passes_limit(self):
        v = E - Fraction('2.718281828459045235360287471353')
        with patch.object(limits, 'MAX_RENDER_PASSES', 1):
            with self.assertLogs('facseries', level='WARNING') as ctx:
                with self.assertWarns(FacSeriesWarning) as warn_ctx:
                    render(v, 5)
        self.assertIn("stopped after 1 passes", str(warn_ctx.warning))
        self.assertIn("stopped after 1 passes", ctx.output[0])

    @given(explinear_values())
    @settings(max_examples=100, deadline=None)
    def test_render_precision_consistency(self, v):
        d = 12
        short, extended = render(v, d), render(v, d + 10)

        # the short rendering is the extended one rounded, up to a carry in the last digit
        if short:
            self.assertEqual(len(short.digits), d)
            self.assertEqual(len(extended.digits), d + 10)
            self.assertEqual(short.sign, extended.sign)
            ulp = Fraction(10) ** (short.exponent - d + 1)
            self.assertLessEqual(abs(short.to_rational() - extended.to_rational()), ulp)
            if short.exponent == extended.exponent:
                prefix = extended.digits[:d - 1]
                self.assertTrue(short.digits[:d - 1] == prefix or
                                int(short.digits[:d - 1]) - int(prefix) == 1,
                                msg="%s and %s" % (short, extended))
        else:
            self.assertFalse(extended)

    def test_explinear_to_mpf(self):
        with mpmath.workdps(30):
            self.assertLess(abs(explinear_to_mpf(E) - mpmath.e), mpmath.mpf(10) ** -29)
        value = explinear_to_mpf(1 - E / 3, 50)
        with mpmath.workdps(50):
            self.assertLess(abs(value - (1 - mpmath.e / 3)), mpmath.mpf(10) ** -49)


if __name__ == '__main__':
    from facseries.testing import print_test_header

    print_test_header()
    unittest.main()
