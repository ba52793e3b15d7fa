# -*- coding: utf-8 -*-
#
# Copyright (c), 2020, facseries developers.
# All rights reserved.
# This file is distributed under the terms of the MIT License.
# See the file 'LICENSE' in the root directory of the present
# distribution, or http://opensource.org/licenses/MIT.
#
from . import limits
from .exceptions import FacSeriesException, FacSeriesTypeError, FacSeriesValueError, \
    FacSeriesZeroDivisionError, NodeError, RadiusError, PrecisionError, EvaluationError, \
    ResourceLimitError, FacSeriesWarning
from .exact import make_rational, factorial, binomial, ExpLinear, explin_axpy
from .exppoly import Poly, ExpPoly, build_zk_expell, build_zpow_expell, \
    differentiate, nth_derivative, eval_at
from .coefficients import SeriesCoeffs, EXP_SERIES, GEOMETRIC_SERIES, get_series
from .divdiff import NodeSet, divdiff_exact, divdiff_numeric, confluent_divdiff, \
    popoviciu_h, simplex_quadrature_check
from .numeval import DecimalValue, exp_digits, render, explinear_to_mpf
from .series import s_kj_theorem, s_kj_binomial, s_kj_reduced, s_k0, a_k, a_k_derivative, \
    f_kl, s_k_of_x, s_k_diagonal, g_kl_numeric, g_kl_confluent, FactorialSeriesTable
from .oracle import TruncationSpec, OracleResult, oracle_skj, oracle_sk_of_x, oracle_gkl

__version__ = '1.0.0'
__author__ = "facseries developers"
__copyright__ = "Copyright 2020, facseries developers"
__license__ = "MIT"
__status__ = "Production/Stable"


__all__ = [
    'limits', 'FacSeriesException', 'FacSeriesTypeError', 'FacSeriesValueError',
    'FacSeriesZeroDivisionError', 'NodeError', 'RadiusError', 'PrecisionError',
    'EvaluationError', 'ResourceLimitError', 'FacSeriesWarning', 'make_rational',
    'factorial', 'binomial', 'ExpLinear', 'explin_axpy', 'Poly', 'ExpPoly',
    'build_zk_expell', 'build_zpow_expell', 'differentiate', 'nth_derivative', 'eval_at',
    'SeriesCoeffs', 'EXP_SERIES', 'GEOMETRIC_SERIES', 'get_series', 'NodeSet',
    'divdiff_exact', 'divdiff_numeric', 'confluent_divdiff', 'popoviciu_h',
    'simplex_quadrature_check', 'DecimalValue', 'exp_digits', 'render', 'explinear_to_mpf',
    's_kj_theorem', 's_kj_binomial', 's_kj_reduced', 's_k0', 'a_k', 'a_k_derivative',
    'f_kl', 's_k_of_x', 's_k_diagonal', 'g_kl_numeric', 'g_kl_confluent',
    'FactorialSeriesTable', 'TruncationSpec', 'OracleResult', 'oracle_skj',
    'oracle_sk_of_x', 'oracle_gkl',
]
