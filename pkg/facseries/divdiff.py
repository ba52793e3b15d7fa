#
# Copyright (c), 2020, facseries developers.
# All rights reserved.
# This file is distributed under the terms of the MIT License.
# See the file 'LICENSE' in the root directory of the present
# distribution, or http://opensource.org/licenses/MIT.
#
"""
This module contains the divided differences: the exact recursion on expressions,
the numeric Newton tableau, the confluent limit and the property checks based on
the monomial identity and on the simplex integral representation.
"""
import logging
from fractions import Fraction

import mpmath
import numpy

from . import limits
from .exceptions import FacSeriesTypeError, FacSeriesValueError, NodeError, PrecisionError
from .helpers import as_rational, check_nonnegative_integer, check_positive_integer, \
    format_rational, to_mpf
from .exact import ExpLinear, explin_axpy, factorial
from .exppoly import ExpPoly, nth_derivative, eval_at

logger = logging.getLogger('facseries')


class NodeSet(object):
    """
    An ordered set of pairwise distinct nonzero rational nodes x1, ..., xk.

    :param nodes: an iterable of exact values (ints, fractions or 'p/q' strings).
    """
    __slots__ = ('nodes',)

    def __init__(self, nodes):
        values = []
        for x in nodes:
            x = as_rational(x)
            if not x:
                raise NodeError("node 0 is not admitted: nodes must be nonzero", node=x)
            elif x in values:
                raise NodeError(
                    "node %s is repeated: nodes must be pairwise distinct, use "
                    "confluent_divdiff() for coalescing nodes" % format_rational(x), node=x
                )
            values.append(x)

        if not values:
            raise FacSeriesValueError("a node set requires at least one node")
        object.__setattr__(self, 'nodes', tuple(values))

    def __setattr__(self, name, value):
        raise AttributeError("%r object is immutable" % self.__class__.__name__)

    def __repr__(self):
        return '%s([%s])' % (self.__class__.__name__,
                             ', '.join(format_rational(x) for x in self.nodes))

    def __len__(self):
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def __getitem__(self, i):
        return self.nodes[i]

    def __eq__(self, other):
        if not isinstance(other, NodeSet):
            return NotImplemented
        return self.nodes == other.nodes

    def __hash__(self):
        return hash(self.nodes)

    def product(self):
        """The product x1 * ... * xk."""
        result = Fraction(1)
        for x in self.nodes:
            result *= x
        return result


def as_nodeset(nodes):
    return nodes if isinstance(nodes, NodeSet) else NodeSet(nodes)


def divdiff_exact(f, nodes):
    """
    Computes exactly the divided difference [x1, ..., xk; f] with the recursion
    [x0, ..., xk; f] = ([x1, ..., xk; f] - [x0, ..., x(k-1); f]) / (xk - x0).

    :param f: an `ExpPoly` instance.
    :param nodes: a `NodeSet` or an iterable of distinct nonzero rationals.
    :rtype: ExpLinear
    """
    if not isinstance(f, ExpPoly):
        raise FacSeriesTypeError("an ExpPoly instance is required, not %r." % type(f))

    nodes = as_nodeset(nodes)
    table = [eval_at(f, x) for x in nodes]
    for level in range(1, len(nodes)):
        for i in range(len(table) - 1):
            step = 1 / (nodes[i + level] - nodes[i])
            table[i] = explin_axpy(step, table[i + 1], explin_axpy(-step, table[i], ExpLinear()))
        table.pop()
    return table[0]


def divdiff_numeric(fvals, nodes, digits=30):
    """
    Computes numerically the divided difference of the values `fvals` at the given
    nodes with the Newton tableau. The tableau is computed with NUMERIC_GUARD_DIGITS
    more digits than requested.

    :param fvals: the function values, a sequence of numbers.
    :param nodes: the nodes, a sequence of pairwise distinct numbers.
    :param digits: the number of significant digits required.
    :rtype: mpmath.mpf
    """
    if len(fvals) != len(nodes):
        raise FacSeriesValueError("%d values for %d nodes" % (len(fvals), len(nodes)))
    elif not nodes:
        raise FacSeriesValueError("at least one node is required")
    check_positive_integer(digits, 'digits')

    with mpmath.workdps(digits + limits.NUMERIC_GUARD_DIGITS):
        xs = [to_mpf(x) for x in nodes]
        table = [to_mpf(y) for y in fvals]

        for i, j in ((i, j) for i in range(len(xs)) for j in range(i)):
            if xs[i] == xs[j]:
                raise PrecisionError(
                    "nodes %d and %d coincide at %d digits of working precision"
                    % (j, i, mpmath.mp.dps)
                )

        for level in range(1, len(xs)):
            for i in range(len(table) - 1):
                table[i] = (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
            table.pop()
        result = table[0]

    logger.debug("numeric divided difference on %d nodes at %d digits", len(xs), digits)
    with mpmath.workdps(digits):
        return +result


def confluent_divdiff(f, k, j, x):
    """
    Computes the confluent limit (1/(k+j-1)!) * f^(k+j-1)(x), that is the limit of
    a j-th order mixed partial derivative of the divided difference of f over k
    nodes when all the nodes coalesce to x. For j = 0 is the value of [x, ..., x; f].

    :param f: an `ExpPoly` instance, the full integrand.
    :param k: the number of nodes, a positive integer.
    :param j: the order of the partial derivative, a nonnegative integer.
    :param x: the point of coalescence, a nonzero rational.
    :rtype: ExpLinear
    """
    check_positive_integer(k, 'k')
    check_nonnegative_integer(j, 'j')
    order = k + j - 1
    logger.debug("confluent divided difference: derivative of order %d of %s", order, f)
    return eval_at(nth_derivative(f, order), x) / factorial(order)


def popoviciu_h(nodes, r):
    """
    Computes the complete homogeneous symmetric polynomial of degree r in the nodes,
    with the recurrence h_r(x1..xn) = h_r(x1..x(n-1)) + xn * h_(r-1)(x1..xn).
    """
    check_nonnegative_integer(r, 'r')
    h = [Fraction(1)] + [Fraction(0)] * r
    for x in nodes:
        x = as_rational(x)
        for degree in range(1, r + 1):
            h[degree] += x * h[degree - 1]
    return h[r]


def simplex_quadrature_check(f, nodes, points=None):
    """
    Approximates [x1, ..., xk; f] by the integral of f^(k-1) on the simplex
    1 >= t1 >= ... >= t(k-1) >= 0 at x1 + (x2-x1)*t1 + ... + (xk-x(k-1))*t(k-1),
    with a tensor Gauss-Legendre rule on the cube mapped by t_i = t_(i-1) * u_i.

    :param f: an `ExpPoly` instance, or a callable `f(z, order)` returning the \
    derivative of the given order at the points of a numpy array.
    :param nodes: from 2 to 4 nodes, a sequence of numbers (repetitions admitted).
    :param points: the number of points per axis, `QUADRATURE_POINTS` for default.
    :rtype: float
    """
    k = len(nodes)
    if not 2 <= k <= 4:
        raise FacSeriesValueError("the simplex quadrature supports 2 to 4 nodes, not %d" % k)

    if isinstance(f, ExpPoly):
        integrand = _vectorize(nth_derivative(f, k - 1))
    elif callable(f):
        def integrand(z):
            return f(z, k - 1)
    else:
        raise FacSeriesTypeError("an ExpPoly instance or a callable is required.")

    xs = [float(as_rational(x)) if isinstance(x, (int, Fraction, str)) else float(x)
          for x in nodes]
    u, w = numpy.polynomial.legendre.leggauss(points or limits.QUADRATURE_POINTS)
    u, w = (u + 1.0) / 2.0, w / 2.0

    grids = numpy.meshgrid(*([u] * (k - 1)), indexing='ij')
    weights = numpy.meshgrid(*([w] * (k - 1)), indexing='ij')

    t = numpy.ones_like(grids[0])
    jacobian = numpy.ones_like(grids[0])
    z = numpy.full_like(grids[0], xs[0])
    for axis in range(k - 1):
        if axis:
            jacobian = jacobian * t
        t = t * grids[axis]
        jacobian = jacobian * weights[axis]
        z = z + (xs[axis + 1] - xs[axis]) * t
    return float(numpy.sum(jacobian * integrand(z)))


def _vectorize(f):
    p = [float(c) for c in f.p]
    q = [float(c) for c in f.q]
    m = f.m

    def integrand(z):
        value = numpy.polynomial.polynomial.polyval(z, q) if q else 0.0
        if p:
            value = value + numpy.polynomial.polynomial.polyval(z, p) * numpy.exp(z)
        return value / z ** m if m else value
    return integrand
