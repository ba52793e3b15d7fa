#
# Copyright (c), 2020, facseries developers.
# All rights reserved.
# This file is distributed under the terms of the MIT License.
# See the file 'LICENSE' in the root directory of the present
# distribution, or http://opensource.org/licenses/MIT.
#
"""
This module contains the exact arithmetic core: rationals, factorials, binomials
and the `ExpLinear` values a + b1*e^(x1) + ... + bn*e^(xn).
"""
import threading
from fractions import Fraction

from .exceptions import FacSeriesTypeError, FacSeriesZeroDivisionError
from .helpers import is_integer, as_rational, check_nonnegative_integer, format_rational


def make_rational(p, q=1):
    """
    Makes a canonical rational p/q, reduced and with a positive denominator.

    :param p: the numerator, an integer.
    :param q: the denominator, a nonzero integer.
    :rtype: Fraction
    """
    if not is_integer(p) or not is_integer(q):
        raise FacSeriesTypeError("numerator and denominator must be integers: %r, %r" % (p, q))
    elif q == 0:
        raise FacSeriesZeroDivisionError("zero denominator for rational %d/0" % p)
    return Fraction(p, q)


class FactorialCache(object):
    """
    A growing table of factorials, shared by all threads. Reads never block,
    extensions are serialized by a lock.
    """
    def __init__(self):
        self._values = [1]
        self._lock = threading.Lock()

    def __repr__(self):
        return '%s(size=%d)' % (self.__class__.__name__, len(self._values))

    def __len__(self):
        return len(self._values)

    def __call__(self, n):
        values = self._values
        if n < len(values):
            return values[n]

        with self._lock:
            values = self._values
            if n >= len(values):
                extension = values[:]
                value = extension[-1]
                for k in range(len(extension), n + 1):
                    value *= k
                    extension.append(value)
                self._values = extension
            return self._values[n]


_factorials = FactorialCache()


def factorial(n):
    """Returns n! exactly, memoizing the values up to the largest n seen."""
    check_nonnegative_integer(n, 'n')
    return _factorials(n)


def binomial(n, k):
    """
    Returns the binomial coefficient C(n, k), computed with the multiplicative
    formula. Returns 0 if k > n.
    """
    check_nonnegative_integer(n, 'n')
    check_nonnegative_integer(k, 'k')
    if k > n:
        return 0

    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        result = result * (n - k + i) // i
    return result


class ExpLinear(object):
    """
    An exact value a + b1*e^(x1) + ... + bn*e^(xn) with rational constant a,
    coefficients bi and exponents xi. Instances are immutable and always stored
    in canonical form: exponents strictly increasing, no zero coefficients and
    no exponent 0 (e^0 is folded into the constant). So two instances are equal
    if and only if they represent the same number.

    :param constant: the rational constant part.
    :param terms: an iterable of couples (exponent, coefficient) or a mapping \
    from exponents to coefficients. Repeated exponents are merged.
    """
    __slots__ = ('constant', 'terms')

    def __init__(self, constant=0, terms=()):
        constant = as_rational(constant)
        if isinstance(terms, dict):
            terms = terms.items()

        merged = {}
        for exponent, coefficient in terms:
            exponent = as_rational(exponent)
            coefficient = as_rational(coefficient)
            if exponent == 0:
                constant += coefficient
            else:
                merged[exponent] = merged.get(exponent, 0) + coefficient

        object.__setattr__(self, 'constant', constant)
        object.__setattr__(self, 'terms', tuple(
            (x, merged[x]) for x in sorted(merged) if merged[x]
        ))

    def __setattr__(self, name, value):
        raise AttributeError("%r object is immutable" % self.__class__.__name__)

    @classmethod
    def exp(cls, x=1, coefficient=1):
        """Creates the value coefficient * e^x."""
        return cls(0, [(x, coefficient)])

    def __repr__(self):
        return '%s(%r, %r)' % (self.__class__.__name__, self.constant, self.terms)

    def __str__(self):
        parts = []
        if self.constant or not self.terms:
            parts.append(format_rational(self.constant))

        for exponent, coefficient in self.terms:
            power = 'e' if exponent == 1 else 'e^(%s)' % format_rational(exponent)
            if abs(coefficient) == 1:
                item = power
            elif coefficient.denominator == 1:
                item = '%d*%s' % (abs(coefficient.numerator), power)
            else:
                item = '(%s)*%s' % (format_rational(abs(coefficient)), power)

            if not parts:
                parts.append(item if coefficient > 0 else '-' + item)
            else:
                parts.append(('+ ' if coefficient > 0 else '- ') + item)
        return ' '.join(parts)

    def __eq__(self, other):
        if isinstance(other, ExpLinear):
            return self.constant == other.constant and self.terms == other.terms
        elif isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return not self.terms and self.constant == other
        return NotImplemented

    def __hash__(self):
        return hash((self.constant, self.terms))

    def __bool__(self):
        return bool(self.constant) or bool(self.terms)

    def __neg__(self):
        return explin_axpy(-1, self, ZERO)

    def __add__(self, other):
        if not isinstance(other, ExpLinear):
            try:
                other = ExpLinear(other)
            except FacSeriesTypeError:
                return NotImplemented
        return explin_axpy(1, self, other)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, ExpLinear):
            try:
                other = ExpLinear(other)
            except FacSeriesTypeError:
                return NotImplemented
        return explin_axpy(-1, other, self)

    def __rsub__(self, other):
        try:
            other = ExpLinear(other)
        except FacSeriesTypeError:
            return NotImplemented
        return explin_axpy(-1, self, other)

    def __mul__(self, other):
        try:
            return explin_axpy(other, self, ZERO)
        except FacSeriesTypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = as_rational(other)
        except FacSeriesTypeError:
            return NotImplemented
        if not other:
            raise FacSeriesZeroDivisionError("division of %r by zero" % self)
        return explin_axpy(1 / other, self, ZERO)

    @property
    def exponents(self):
        return tuple(x for x, _ in self.terms)

    def coefficient(self, exponent):
        """Returns the coefficient of e^exponent, the constant for exponent 0."""
        exponent = as_rational(exponent)
        if exponent == 0:
            return self.constant
        for x, c in self.terms:
            if x == exponent:
                return c
        return Fraction(0)

    @property
    def e_coefficient(self):
        """The coefficient of e = e^1."""
        return self.coefficient(1)

    def is_rational(self):
        return not self.terms

    def is_rational_multiple_of_e(self):
        return not self.constant and self.exponents == (1,)


ZERO = ExpLinear()
E = ExpLinear.exp(1)


def explin_axpy(alpha, v, w):
    """
    Computes alpha * v + w in canonical form. Terms with equal exponents are merged
    and terms with zero coefficient are dropped.

    :param alpha: a rational scalar.
    :param v: an `ExpLinear` instance.
    :param w: an `ExpLinear` instance.
    """
    alpha = as_rational(alpha)
    if not isinstance(v, ExpLinear) or not isinstance(w, ExpLinear):
        raise FacSeriesTypeError("ExpLinear operands required: %r, %r" % (v, w))
    elif not alpha:
        return w

    terms = dict(w.terms)
    for exponent, coefficient in v.terms:
        terms[exponent] = terms.get(exponent, 0) + alpha * coefficient
    return ExpLinear(alpha * v.constant + w.constant, terms)

