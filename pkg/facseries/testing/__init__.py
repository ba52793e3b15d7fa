#
# Copyright (c), 2020, facseries developers.
# All rights reserved.
# This file is distributed under the terms of the MIT License.
# See the file 'LICENSE' in the root directory of the present
# distribution, or http://opensource.org/licenses/MIT.
#
"""
Subpackage with unittest extensions for facseries.

Includes a base test case class with assertions on exact and high-precision values
and the hypothesis strategies used by the randomized property tests.
"""
import platform

import facseries

from .case_class import FacSeriesTestCase
from .strategies import rationals, nonzero_rationals, node_sets, unit_interval_nodes, \
    explinear_values


def print_test_header():
    """Print a header that displays Python version and platform used for test session."""
    header1 = "Test %r" % facseries
    header2 = "with Python {} on platform {}".format(platform.python_version(), platform.platform())
    print('{0}\n{1}\n{2}\n{0}'.format("*" * max(len(header1), len(header2)), header1, header2))


__all__ = ['FacSeriesTestCase', 'rationals', 'nonzero_rationals', 'node_sets',
           'unit_interval_nodes', 'explinear_values', 'print_test_header']
