#
# Copyright (c), 2020, facseries developers.
# All rights reserved.
# This file is distributed under the terms of the MIT License.
# See the file 'LICENSE' in the root directory of the present
# distribution, or http://opensource.org/licenses/MIT.
#


class FacSeriesException(Exception):
    """The base exception that let you catch all the errors generated by the library."""


class FacSeriesTypeError(FacSeriesException, TypeError):
    pass


class FacSeriesValueError(FacSeriesException, ValueError):
    pass


class FacSeriesZeroDivisionError(FacSeriesException, ZeroDivisionError):
    pass


class NodeError(FacSeriesValueError):
    """
    Raised when a node of a divided difference is not admitted (zero or repeated).

    :param message: the error message.
    :param node: the offending node value.
    """
    def __init__(self, message, node=None):
        super(NodeError, self).__init__(message)
        self.message = message
        self.node = node


class RadiusError(FacSeriesValueError):
    """Raised when a node lies on or outside the disk of convergence of a power series."""

    def __init__(self, message, node=None, radius=None):
        super(RadiusError, self).__init__(message)
        self.message = message
        self.node = node
        self.radius = radius


class PrecisionError(FacSeriesValueError):
    """Raised when nodes coincide at the working precision of a numeric computation."""


class EvaluationError(FacSeriesValueError):
    """Raised when an expression is evaluated at one of its poles."""


class ResourceLimitError(FacSeriesException, RuntimeError):
    """
    Raised when a computation would exceed a limit defined in :mod:`facseries.limits`.

    :param message: the error message.
    :param loops: the estimated number of inner loop iterations.
    :param limit: the limit that has been exceeded.
    """
    def __init__(self, message, loops=None, limit=None):
        super(ResourceLimitError, self).__init__(message)
        self.message = message
        self.loops = loops
        self.limit = limit


class FacSeriesWarning(Warning):
    """Base warning class for the facseries package."""
