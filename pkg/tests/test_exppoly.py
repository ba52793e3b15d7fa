#!/usr/bin/env python
#
# Copyright (c), 2020, facseries developers.
# All rights reserved.
# This file is distributed under the terms of the MIT License.
# See the file 'LICENSE' in the root directory of the present
# distribution, or http://opensource.org/licenses/MIT.
#
"""Tests for the expressions (P(z)*exp(z) + Q(z)) / z^m"""
import unittest
from fractions import Fraction

import mpmath
from hypothesis import given, settings, strategies as st

from facseries.exceptions import EvaluationError
from facseries.exact import ExpLinear, factorial
from facseries.helpers import to_mpf
from facseries.exppoly import Poly, ZERO_POLY, ONE_POLY, ExpPoly, build_zk_expell, \
    build_zpow_expell, differentiate, nth_derivative, eval_at
from facseries.testing import FacSeriesTestCase, nonzero_rationals


class TestPoly(unittest.TestCase):

    def test_initialization(self):
        p = Poly([1, 0, Fraction(1, 2), 0, 0])
        self.assertEqual(p.coefficients, (1, 0, Fraction(1, 2)))
        self.assertEqual(p.degree, 2)
        self.assertEqual(ZERO_POLY.degree, -1)
        self.assertFalse(ZERO_POLY)
        self.assertTrue(ONE_POLY)
        self.assertEqual(Poly.monomial(3, 2), Poly([0, 0, 0, 2]))
        self.assertEqual(str(Poly([1, -1, Fraction(1, 2)])), '1 + (-1)*z + (1/2)*z^2')
        self.assertEqual(str(ZERO_POLY), '0')

    def test_arithmetic(self):
        p = Poly([1, 2])
        q = Poly([0, -2, 3])
        self.assertEqual(p + q, Poly([1, 0, 3]))
        self.assertEqual(p - p, ZERO_POLY)
        self.assertEqual(-q, Poly([0, 2, -3]))
        self.assertEqual(q.scale(Fraction(1, 3)), Poly([0, Fraction(-2, 3), 1]))
        self.assertEqual(q[7], 0)

    def test_valuation_and_shift(self):
        q = Poly([0, 0, 5, 1])
        self.assertEqual(q.valuation, 2)
        self.assertIsNone(ZERO_POLY.valuation)
        self.assertEqual(q.shift(1), Poly([0, 0, 0, 5, 1]))
        self.assertEqual(q.shift(-2), Poly([5, 1]))
        self.assertEqual(ZERO_POLY.shift(3), ZERO_POLY)

    def test_derivative_and_evaluation(self):
        p = Poly([1, 1, 1, 1])
        self.assertEqual(p.derivative(), Poly([1, 2, 3]))
        self.assertEqual(ONE_POLY.derivative(), ZERO_POLY)
        self.assertEqual(p(Fraction(1, 2)), Fraction(15, 8))
        self.assertEqual(p(2), 15)


class TestExpPoly(FacSeriesTestCase):

    def test_canonical_cancellation(self):
        f = ExpPoly(Poly([0, 1]), Poly([0, 0, 1]), 1)
        self.assertEqual(f.m, 0)
        self.assertEqual(f.p, ONE_POLY)
        self.assertEqual(f.q, Poly([0, 1]))

        # the cancellation is capped by the denominator power
        f = ExpPoly(Poly([0, 0, 1]), ZERO_POLY, 1)
        self.assertEqual((f.p, f.m), (Poly([0, 1]), 0))

        f = ExpPoly(ONE_POLY, Poly([-1]), 1)
        self.assertEqual(f.m, 1)

    def test_immutability_and_hash(self):
        f = ExpPoly.exp()
        with self.assertRaises(AttributeError):
            f.m = 2
        self.assertEqual(hash(f), hash(ExpPoly(ONE_POLY)))
        self.assertEqual(str(f), '( 1*exp(z) + 0 ) / z^0')

    def test_arithmetic(self):
        f = build_zk_expell(1, 1)  # (e^z - 1) / z
        g = ExpPoly.monomial(0)    # 1
        h = f * 2 - g
        self.assertEqual(h, ExpPoly(Poly([2]), Poly([-2, -1]), 1))
        self.assertEqual(f - f, ExpPoly())
        self.assertEqual(-f + f, ExpPoly())
        self.assertEqual(3 * g, ExpPoly.monomial(0, 3))

    def test_build_zk_expell(self):
        self.assertEqual(build_zk_expell(1, 0), ExpPoly.exp())
        f = build_zk_expell(3, 2)  # z^2 * (e^z - 1 - z) / z^2
        self.assertEqual(f, ExpPoly(ONE_POLY, Poly([-1, -1]), 0))

        f = build_zk_expell(2, 3)  # z * (e^z - 1 - z - z^2/2) / z^3
        self.assertEqual(f.m, 2)
        self.assertEqual(f.q, Poly([-1, -1, Fraction(-1, 2)]))

        f = build_zpow_expell(-1, 1)  # (e^z - 1) / z^2
        self.assertEqual((f.p, f.q, f.m), (ONE_POLY, Poly([-1]), 2))

    def test_build_zk_expell_series_values(self):
        # z^(k-1) * exp_ell(z) = sum_n z^(n+k-1) / (n+ell)!
        with mpmath.workdps(40):
            for k, ell, x in [(1, 3, Fraction(1, 2)), (3, 3, Fraction(-2, 3)), (2, 5, 2)]:
                expected = mpmath.fsum(
                    to_mpf(x) ** (n + k - 1) / mpmath.factorial(n + ell)
                    for n in range(80)
                )
                self.assertClose(build_zk_expell(k, ell).evaluate(x), expected, 1e-30)

    def test_differentiate(self):
        self.assertEqual(differentiate(ExpPoly.exp()), ExpPoly.exp())
        self.assertEqual(differentiate(ExpPoly.monomial(3)), ExpPoly.monomial(2, 3))
        self.assertEqual(nth_derivative(ExpPoly.monomial(3), 4), ExpPoly())

        # d/dz (e^z / z) = (z - 1) e^z / z^2
        self.assertEqual(differentiate(ExpPoly(ONE_POLY, ZERO_POLY, 1)),
                         ExpPoly(Poly([-1, 1]), ZERO_POLY, 2))

    @given(st.integers(1, 4), st.integers(0, 4), st.integers(0, 3),
           nonzero_rationals(-2, 2, 8))
    @settings(max_examples=30, deadline=None)
    def test_derivative_against_numeric(self, k, ell, n, x):
        f = build_zk_expell(k, ell)
        with mpmath.workdps(40):
            expected = mpmath.diff(lambda z: f.evaluate(z), to_mpf(x), n)
            self.assertClose(nth_derivative(f, n).evaluate(x), expected, 1e-20, relative=True)

    def test_eval_at(self):
        value = eval_at(build_zk_expell(1, 1), 1)
        self.assertExpLinearEqual(value, ExpLinear(-1, [(1, 1)]))

        value = eval_at(ExpPoly(Poly([1, 1]), Poly([3]), 1), Fraction(1, 2))
        self.assertExpLinearEqual(value, ExpLinear(6, [(Fraction(1, 2), 3)]))

        self.assertExpLinearEqual(eval_at(ExpPoly.exp(), 0), 1)
        self.assertExpLinearEqual(eval_at(ExpPoly(Poly([1, 1]), Poly([-1])), 0), 0)

        with self.assertRaises(EvaluationError) as ctx:
            eval_at(build_zk_expell(1, 2), 0)
        self.assertIn("evaluate-at-zero unsupported", str(ctx.exception))

        with self.assertRaises(EvaluationError):
            build_zk_expell(1, 2).evaluate(0)

    def test_confluent_derivative_formula(self):
        # (1/(2k-1)!) (d/dx)^(2k-1) [x^(k-1) e^x] at 1 = a_k * e
        for k, a in [(1, 1), (2, Fraction(2, 3)), (3, Fraction(31, 120))]:
            order = 2 * k - 1
            value = eval_at(nth_derivative(ExpPoly(Poly.monomial(k - 1)), order), 1)
            self.assertExpLinearEqual(value / factorial(order), ExpLinear.exp(1, a))


if __name__ == '__main__':
    from facseries.testing import print_test_header

    print_test_header()
    unittest.main()
