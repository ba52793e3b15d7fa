#
# Copyright (c), 2020, facseries developers.
# All rights reserved.
# This file is distributed under the terms of the MIT License.
# See the file 'LICENSE' in the root directory of the present
# distribution, or http://opensource.org/licenses/MIT.
#
"""Package limits and precision settings. Values can be changed after import."""

GUARD_DIGITS = 15
"""
Extra decimal digits carried by the decimal rendering of exact values.
"""

NUMERIC_GUARD_DIGITS = 20
"""
Extra decimal digits carried by the numeric divided differences and by the
summation of coefficient series, beyond the requested output precision.
"""

SERIES_TAIL_DIGITS = 10
"""
A coefficient series is summed until two consecutive terms fall below
10 ** -(digits + SERIES_TAIL_DIGITS).
"""

CANCELLATION_THRESHOLD = 5
"""
Digits of cancellation, detected by a rendering pass, that trigger a re-run
at a higher precision.
"""

MAX_RENDER_PASSES = 6
"""
Maximum number of precision escalations done by a rendering.
"""

MAX_EXP_ARGUMENT = 100
"""
Maximum absolute value of the argument of `exp_digits`.
"""

MAX_ORACLE_LOOPS = 10 ** 9
"""
Maximum number of inner loop iterations of a truncated summation. A `ResourceLimitError`
is raised if this limit is exceeded.
"""

MAX_SERIES_TERMS = 100000
"""
Maximum number of terms summed for evaluating a coefficient series at a point.
"""

QUADRATURE_POINTS = 32
"""
Number of Gauss-Legendre points per axis of the simplex quadrature.
"""

MAX_TABLE_K = 12
"""
Maximum number of rows of the S(k, j) table built by the command line interface.
"""

DEFAULT_DIGITS = 15
DEFAULT_DEPTH = 60
DEFAULT_TOLERANCE = 1e-12
