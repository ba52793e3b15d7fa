#
# Copyright (c), 2020, facseries developers.
# All rights reserved.
# This file is distributed under the terms of the MIT License.
# See the file 'LICENSE' in the root directory of the present
# distribution, or http://opensource.org/licenses/MIT.
#
"""
This module contains the expressions (P(z)*exp(z) + Q(z)) / z^m, with rational
polynomials P and Q, a field closed under differentiation.
"""
from fractions import Fraction

import mpmath

from .exceptions import FacSeriesTypeError, EvaluationError
from .helpers import as_rational, check_nonnegative_integer, check_positive_integer, \
    is_integer, format_rational, to_mpf
from .exact import ExpLinear, factorial


class Poly(object):
    """
    A dense polynomial with rational coefficients, stored in ascending degree order.
    The zero polynomial has no coefficients.

    :param coefficients: an iterable of rational coefficients, index = degree.
    """
    __slots__ = ('coefficients',)

    def __init__(self, coefficients=()):
        coefficients = [as_rational(c) for c in coefficients]
        while coefficients and not coefficients[-1]:
            coefficients.pop()
        object.__setattr__(self, 'coefficients', tuple(coefficients))

    def __setattr__(self, name, value):
        raise AttributeError("%r object is immutable" % self.__class__.__name__)

    @classmethod
    def monomial(cls, degree, coefficient=1):
        return cls([0] * degree + [coefficient])

    def __repr__(self):
        return '%s(%r)' % (self.__class__.__name__, [format_rational(c) for c in self])

    def __str__(self):
        items = []
        for degree, c in enumerate(self.coefficients):
            if not c:
                continue
            elif degree == 0:
                items.append(format_rational(c))
            elif degree == 1:
                items.append('(%s)*z' % format_rational(c))
            else:
                items.append('(%s)*z^%d' % (format_rational(c), degree))
        return ' + '.join(items) if items else '0'

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __getitem__(self, degree):
        try:
            return self.coefficients[degree]
        except IndexError:
            return Fraction(0)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __bool__(self):
        return bool(self.coefficients)

    def __add__(self, other):
        size = max(len(self), len(other))
        return Poly(self[k] + other[k] for k in range(size))

    def __sub__(self, other):
        size = max(len(self), len(other))
        return Poly(self[k] - other[k] for k in range(size))

    def __neg__(self):
        return Poly(-c for c in self)

    def scale(self, alpha):
        return Poly(alpha * c for c in self)

    @property
    def degree(self):
        """The degree of the polynomial, -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def valuation(self):
        """The multiplicity of the root z = 0, `None` for the zero polynomial."""
        for degree, c in enumerate(self.coefficients):
            if c:
                return degree

    def shift(self, n):
        """Multiplies by z^n, or divides by z^-n if n is negative."""
        if n >= 0:
            return Poly([0] * n + list(self.coefficients)) if self else self
        return Poly(self.coefficients[-n:])

    def derivative(self):
        return Poly(k * c for k, c in enumerate(self.coefficients) if k)

    def __call__(self, x):
        """Evaluates the polynomial with Horner's rule, in the arithmetic of x."""
        result = 0
        for c in reversed(self.coefficients):
            result = result * x + c
        return result


ZERO_POLY = Poly()
ONE_POLY = Poly([1])


class ExpPoly(object):
    """
    An expression (P(z)*exp(z) + Q(z)) / z^m. Instances are kept in canonical form:
    while both P and Q are divisible by z and m > 0 a common factor z is cancelled.

    :param p: the polynomial multiplying exp(z).
    :param q: the additive polynomial.
    :param m: the power of z in the denominator, a nonnegative integer.
    """
    __slots__ = ('p', 'q', 'm')

    def __init__(self, p=ZERO_POLY, q=ZERO_POLY, m=0):
        if not isinstance(p, Poly):
            p = Poly(p)
        if not isinstance(q, Poly):
            q = Poly(q)
        check_nonnegative_integer(m, 'm')

        cancel = m
        for poly in (p, q):
            if poly:
                cancel = min(cancel, poly.valuation)
        if cancel:
            p, q, m = p.shift(-cancel), q.shift(-cancel), m - cancel

        object.__setattr__(self, 'p', p)
        object.__setattr__(self, 'q', q)
        object.__setattr__(self, 'm', m)

    def __setattr__(self, name, value):
        raise AttributeError("%r object is immutable" % self.__class__.__name__)

    @classmethod
    def exp(cls):
        """The function exp(z)."""
        return cls(ONE_POLY)

    @classmethod
    def monomial(cls, degree, coefficient=1):
        """The function coefficient * z^degree."""
        return cls(ZERO_POLY, Poly.monomial(degree, coefficient))

    def __repr__(self):
        return '%s(%r, %r, %d)' % (self.__class__.__name__, self.p, self.q, self.m)

    def __str__(self):
        return '( %s*exp(z) + %s ) / z^%d' % (self.p, self.q, self.m)

    def __eq__(self, other):
        if not isinstance(other, ExpPoly):
            return NotImplemented
        return self.m == other.m and self.p == other.p and self.q == other.q

    def __hash__(self):
        return hash((self.p, self.q, self.m))

    def __add__(self, other):
        if not isinstance(other, ExpPoly):
            return NotImplemented
        m = max(self.m, other.m)
        p = self.p.shift(m - self.m) + other.p.shift(m - other.m)
        q = self.q.shift(m - self.m) + other.q.shift(m - other.m)
        return ExpPoly(p, q, m)

    def __neg__(self):
        return ExpPoly(-self.p, -self.q, self.m)

    def __sub__(self, other):
        if not isinstance(other, ExpPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        try:
            alpha = as_rational(other)
        except FacSeriesTypeError:
            return NotImplemented
        return ExpPoly(self.p.scale(alpha), self.q.scale(alpha), self.m)

    __rmul__ = __mul__

    def evaluate(self, x):
        """
        Numeric evaluation at a point, in the working precision of `mpmath`.

        :param x: a number convertible to `mpmath.mpf`.
        """
        x = to_mpf(x)
        if not x and self.m:
            raise EvaluationError("%s has a pole at z = 0" % self)

        value = _horner(self.q, x)
        if self.p:
            value += _horner(self.p, x) * mpmath.exp(x)
        return value / x ** self.m if self.m else value


def _horner(poly, x):
    result = mpmath.mpf(0)
    for c in reversed(poly.coefficients):
        result = result * x + to_mpf(c)
    return result


def build_zk_expell(k, ell):
    """
    Builds the expression z^(k-1) * exp_ell(z), where exp_ell(z) = sum z^n/(n+ell)!
    is the tail-shifted exponential series, from the identity
    z^ell * exp_ell(z) = exp(z) - sum_{n<ell} z^n/n!.

    :param k: a positive integer.
    :param ell: a nonnegative integer.
    """
    check_positive_integer(k, 'k')
    check_nonnegative_integer(ell, 'ell')
    return build_zpow_expell(k - 1, ell)


def build_zpow_expell(power, ell):
    """
    Builds the expression z^power * exp_ell(z) for any integer power. Negative
    powers are carried by the denominator.
    """
    if not is_integer(power):
        raise FacSeriesTypeError("power must be an integer, not %r." % type(power))
    check_nonnegative_integer(ell, 'ell')

    shift = max(power, 0)
    p = Poly.monomial(shift)
    q = Poly([0] * shift + [-Fraction(1, factorial(n)) for n in range(ell)])
    return ExpPoly(p, q, ell + max(-power, 0))


def differentiate(f):
    """
    Returns the derivative of an expression, from the rule
    d/dz[(P e^z + Q)/z^m] = ((zP' + zP - mP) e^z + (zQ' - mQ)) / z^(m+1).
    """
    p, q, m = f.p, f.q, f.m
    p1 = p.derivative().shift(1) + p.shift(1) - p.scale(m)
    q1 = q.derivative().shift(1) - q.scale(m)
    return ExpPoly(p1, q1, m + 1)


def nth_derivative(f, n):
    """Returns the n-th derivative of an expression."""
    check_nonnegative_integer(n, 'n')
    for _ in range(n):
        f = differentiate(f)
    return f


def eval_at(f, x):
    """
    Evaluates an expression exactly at a rational point x. The result has at
    most one exponential term, with exponent x.

    :param f: an `ExpPoly` instance.
    :param x: a rational point, nonzero if the expression has a denominator.
    :rtype: ExpLinear
    """
    x = as_rational(x)
    if not x:
        if f.m:
            raise EvaluationError(
                "evaluate-at-zero unsupported: %s has a z^%d denominator" % (f, f.m)
            )
        return ExpLinear(f.p(x) + f.q(x))

    denominator = x ** f.m
    return ExpLinear(f.q(x) / denominator, [(x, f.p(x) / denominator)])
