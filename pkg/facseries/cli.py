#
# Copyright (c), 2020, facseries developers.
# All rights reserved.
# This file is distributed under the terms of the MIT License.
# See the file 'LICENSE' in the root directory of the present
# distribution, or http://opensource.org/licenses/MIT.
#
"""Command Line Interface"""
import sys
import os
import argparse
import json
import logging

import mpmath

from . import limits
from .exceptions import FacSeriesException, ResourceLimitError
from .helpers import parse_nodes, format_rational, to_mpf
from .coefficients import SERIES_MAP, get_series
from .divdiff import NodeSet
from .series import EXPONENT_READINGS, s_kj_theorem, s_kj_binomial, s_kj_reduced, s_k0, \
    a_k, s_k_of_x, g_kl_numeric, FactorialSeriesTable
from .oracle import TRUNCATION_MODES, TruncationSpec, oracle_skj, oracle_sk_of_x, oracle_gkl
from .numeval import DecimalValue, render, explinear_to_mpf

PROGRAM_NAME = os.path.basename(sys.argv[0])

EXIT_SUCCESS = 0
EXIT_USAGE = 1
EXIT_FAIL = 2
EXIT_RESOURCE = 3

logger = logging.getLogger('facseries')


class ArgumentParser(argparse.ArgumentParser):
    """An argument parser that exits with status 1 on usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, '%s: error: %s\n' % (self.prog, message))


class OutputRecord(object):
    """
    The result of a command.

    :param command: the name of the command.
    :param params: a dictionary with the parameters of the query.
    :param exact: the exact value as a string, `None` for numeric-only commands.
    :param decimal: the decimal rendering as a string.
    :param oracle: an optional dictionary with the truncated sum comparison.
    :param rows: an optional dictionary with the rows of the tables.
    """
    def __init__(self, command, params, exact=None, decimal=None, oracle=None, rows=None):
        self.command = command
        self.params = params
        self.exact = exact
        self.decimal = decimal
        self.oracle = oracle
        self.rows = rows
        self.text = None

    def __repr__(self):
        return '%s(command=%r, params=%r)' % (self.__class__.__name__, self.command, self.params)

    @property
    def status(self):
        return self.oracle['status'] if self.oracle else None

    @property
    def exit_code(self):
        return EXIT_FAIL if self.status == 'FAIL' else EXIT_SUCCESS

    def as_dict(self):
        obj = {
            'command': self.command,
            'params': self.params,
            'exact': self.exact,
            'decimal': self.decimal,
            'oracle': self.oracle,
        }
        if self.rows is not None:
            obj['rows'] = self.rows
        return obj

    def to_text(self):
        if self.text is not None:
            return self.text

        lines = ['%s %s' % (self.command, ' '.join(
            '%s=%s' % (k, v) for k, v in self.params.items() if v is not None
        ))]
        if self.exact is not None:
            lines.append('exact:   %s' % self.exact)
        if self.decimal is not None:
            lines.append('decimal: %s' % self.decimal)
        if self.oracle:
            lines.append('oracle:  %s (depth=%d, mode=%s, tail=%s)' % (
                self.oracle['partial'], self.oracle['depth'],
                self.oracle['mode'], self.oracle['tail']
            ))
            lines.append('delta:   %s (tolerance=%s)' % (
                self.oracle['delta'], self.oracle['tolerance']
            ))
            lines.append('result:  %s' % self.oracle['status'])
        return '\n'.join(lines)


###
# Argument types
def positive_int(value):
    try:
        number = int(value)
    except ValueError:
        number = 0
    if number < 1:
        raise argparse.ArgumentTypeError("%r is not a positive integer." % value)
    return number


def nonnegative_int(value):
    try:
        number = int(value)
    except ValueError:
        number = -1
    if number < 0:
        raise argparse.ArgumentTypeError("%r is not a nonnegative integer." % value)
    return number


def exact_nodes(value):
    try:
        return parse_nodes(value)
    except FacSeriesException as err:
        raise argparse.ArgumentTypeError(str(err))


def numeric_nodes(value):
    try:
        parse_nodes(value, exact=False)
    except FacSeriesException as err:
        raise argparse.ArgumentTypeError(str(err))
    # kept as literals, parsed again at the working precision of the command
    return [s.strip() for s in value.split(',')]


def get_loglevel(verbosity):
    if verbosity <= 0:
        return logging.ERROR
    elif verbosity == 1:
        return logging.WARNING
    elif verbosity == 2:
        return logging.INFO
    else:
        return logging.DEBUG


###
# Commands
def compare(closed, partial, trunc, tolerance, tail):
    """Builds the oracle block comparing two mpmath values."""
    delta = abs(closed - partial)
    return {
        'partial': mpmath.nstr(partial, 20),
        'depth': trunc.depth,
        'mode': trunc.mode,
        'tail': mpmath.nstr(tail, 3),
        'delta': mpmath.nstr(delta, 3),
        'tolerance': tolerance,
        'status': 'PASS' if delta < tolerance + tail else 'FAIL',
    }


def cmd_skj(args):
    if args.j == 0:
        value = s_k0(args.k)
        checks = [s_kj_theorem(args.k, 0)] if args.check else []
    else:
        value = s_kj_binomial(args.k, args.j)
        checks = [s_kj_theorem(args.k, args.j), s_kj_reduced(args.k, args.j)] \
            if args.check else []

    record = OutputRecord('skj', {'k': args.k, 'j': args.j, 'digits': args.digits},
                          exact=str(value), decimal=str(render(value, args.digits)))
    if any(v != value for v in checks):
        record.oracle = {'status': 'FAIL', 'closed_forms': [str(v) for v in checks]}
        record.text = '%s\nclosed forms disagree: %s' % (
            OutputRecord.to_text(record), ', '.join(str(v) for v in checks)
        )
    return record


def cmd_ak(args):
    value = a_k(args.k)
    return OutputRecord('ak', {'k': args.k, 'digits': args.digits},
                        exact=format_rational(value), decimal=str(render(value, args.digits)))


def check_distinct(nodes):
    for i, x in enumerate(nodes):
        if x in nodes[:i]:
            raise argparse.ArgumentTypeError(
                "node %s is repeated: S_k at coincident nodes is a confluent limit, use "
                "'skj --k K --j 0' for all the nodes at 1 or s_k_diagonal() for equal nodes"
                % format_rational(x)
            )


def cmd_skx(args):
    if len(args.x) != args.k:
        raise argparse.ArgumentTypeError("--x requires %d nodes, %d provided"
                                         % (args.k, len(args.x)))
    check_distinct(args.x)
    value = s_k_of_x(args.k, NodeSet(args.x))

    params = {'k': args.k, 'x': ','.join(format_rational(x) for x in args.x),
              'digits': args.digits}
    return OutputRecord('skx', params, exact=str(value),
                        decimal=str(render(value, args.digits)))


def cmd_table(args):
    table = FactorialSeriesTable(args.max_k)
    rows = {
        's_kj': [{'k': k, 'cells': cells} for k, cells in table.iter_rows()],
        'a_k': [{'k': k, 'exact': format_rational(value), 'decimal': str(decimal)}
                for k, value, decimal in table.iter_a_rows(args.digits)],
    }
    record = OutputRecord('table', {'max_k': args.max_k, 'digits': args.digits}, rows=rows)
    record.text = table.to_text(args.digits)
    return record


def cmd_verify(args):
    trunc = TruncationSpec(args.depth, args.mode)
    if args.x is not None:
        if len(args.x) != args.k:
            raise argparse.ArgumentTypeError("--x requires %d nodes, %d provided"
                                             % (args.k, len(args.x)))
        check_distinct(args.x)
        value = s_k_of_x(args.k, NodeSet(args.x))
        result = oracle_sk_of_x(args.k, args.x, trunc)
        params = {'k': args.k, 'x': ','.join(format_rational(x) for x in args.x)}
    else:
        value = s_kj_theorem(args.k, args.j)
        result = oracle_skj(args.k, args.j, trunc)
        params = {'k': args.k, 'j': args.j}
    params.update(depth=args.depth, mode=args.mode, digits=args.digits)

    with mpmath.workdps(args.digits + limits.GUARD_DIGITS):
        closed = explinear_to_mpf(value, args.digits + limits.GUARD_DIGITS)
        oracle = compare(closed, to_mpf(result.value), trunc, args.tolerance, result.tail)

    logger.info("verify: %d loops, delta %s", result.loops, oracle['delta'])
    return OutputRecord('verify', params, exact=str(value),
                        decimal=str(render(value, args.digits)), oracle=oracle)


def cmd_gkl(args):
    coeffs = get_series(args.series)
    digits = args.digits + limits.GUARD_DIGITS
    value = g_kl_numeric(coeffs, args.k, args.l, args.x, digits, args.exponent)

    params = {'series': args.series, 'k': args.k, 'l': args.l, 'x': ','.join(args.x),
              'digits': args.digits, 'exponent': args.exponent}
    record = OutputRecord('gkl', params, decimal=str(DecimalValue.from_number(value, args.digits)))

    if args.verify:
        trunc = TruncationSpec(args.depth, args.mode)
        result = oracle_gkl(coeffs, args.k, args.l, args.x, trunc, digits)
        with mpmath.workdps(digits):
            record.oracle = compare(value, result.value, trunc, args.tolerance, result.tail)
        params.update(depth=args.depth, mode=args.mode)
    return record


###
# Parser
def get_parser():
    parser = ArgumentParser(prog=PROGRAM_NAME, add_help=True,
                            description="exact values of multiple factorial series.")
    parser.usage = "%(prog)s [OPTION]... COMMAND [ARGS]...\n" \
                   "Try '%(prog)s --help' for more information."
    parser.add_argument('-v', dest='verbosity', action='count', default=0,
                        help="increase output verbosity.")
    parser.add_argument('--json', action='store_true', default=False,
                        help="print a JSON record instead of text.")

    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND', prog=PROGRAM_NAME)
    subparsers.required = True

    digits_help = "significant digits of the decimal output (default is %d)." \
        % limits.DEFAULT_DIGITS

    skj = subparsers.add_parser('skj', help="the series S_{k,j}.")
    skj.add_argument('--k', type=positive_int, required=True, help="number of indices.")
    skj.add_argument('--j', type=nonnegative_int, required=True,
                     help="number of weighted indices, from 0 to k.")
    skj.add_argument('--digits', type=positive_int, default=limits.DEFAULT_DIGITS,
                     help=digits_help)
    skj.add_argument('--check', action='store_true', default=False,
                     help="cross-check the value with the derivative closed forms.")
    skj.set_defaults(func=cmd_skj)

    ak = subparsers.add_parser('ak', help="the rational a_k = S_{k,k}/e.")
    ak.add_argument('--k', type=positive_int, required=True, help="number of indices.")
    ak.add_argument('--digits', type=positive_int, default=limits.DEFAULT_DIGITS,
                    help=digits_help)
    ak.set_defaults(func=cmd_ak)

    skx = subparsers.add_parser('skx', help="the series S_k(x1, ..., xk).")
    skx.add_argument('--k', type=positive_int, required=True, help="number of indices.")
    skx.add_argument('--x', type=exact_nodes, required=True, metavar='X1,...,XK',
                     help="distinct nonzero nodes, as integers or fractions 'p/q'.")
    skx.add_argument('--digits', type=positive_int, default=limits.DEFAULT_DIGITS,
                     help=digits_help)
    skx.set_defaults(func=cmd_skx)

    table = subparsers.add_parser('table', help="the tables of S_{k,j} and a_k.")
    table.add_argument('--max-k', type=positive_int, required=True,
                       help="last row of the tables, at most %d." % limits.MAX_TABLE_K)
    table.add_argument('--digits', type=positive_int, default=6,
                       help="significant digits of the a_k decimals (default is 6).")
    table.set_defaults(func=cmd_table)

    verify = subparsers.add_parser('verify', help="compare a closed form with a truncated sum.")
    verify.add_argument('--k', type=positive_int, required=True, help="number of indices.")
    group = verify.add_mutually_exclusive_group(required=True)
    group.add_argument('--j', type=nonnegative_int, help="verify S_{k,j}.")
    group.add_argument('--x', type=exact_nodes, metavar='X1,...,XK',
                       help="verify S_k(x1, ..., xk).")
    verify.add_argument('--depth', type=positive_int, default=limits.DEFAULT_DEPTH,
                        help="truncation depth (default is %d)." % limits.DEFAULT_DEPTH)
    verify.add_argument('--mode', choices=TRUNCATION_MODES, default='per-index',
                        help="truncation mode (default is per-index).")
    verify.add_argument('--tolerance', type=float, default=limits.DEFAULT_TOLERANCE,
                        help="accepted difference (default is %g)." % limits.DEFAULT_TOLERANCE)
    verify.add_argument('--digits', type=positive_int, default=limits.DEFAULT_DIGITS,
                        help=digits_help)
    verify.set_defaults(func=cmd_verify)

    gkl = subparsers.add_parser('gkl', help="the series G_{k,l} for built-in coefficients.")
    gkl.add_argument('--series', choices=tuple(SERIES_MAP), required=True,
                     help="the coefficients g_n.")
    gkl.add_argument('--k', type=positive_int, required=True, help="number of indices.")
    gkl.add_argument('--l', type=nonnegative_int, required=True, help="coefficient shift.")
    gkl.add_argument('--x', type=numeric_nodes, required=True, metavar='X1,...,XK',
                     help="distinct nodes, decimal literals are accepted.")
    gkl.add_argument('--digits', type=positive_int, default=limits.DEFAULT_DIGITS,
                     help=digits_help)
    gkl.add_argument('--verify', action='store_true', default=False,
                     help="compare with the truncated sum.")
    gkl.add_argument('--depth', type=positive_int, default=limits.DEFAULT_DEPTH,
                     help="truncation depth (default is %d)." % limits.DEFAULT_DEPTH)
    gkl.add_argument('--mode', choices=TRUNCATION_MODES, default='per-index',
                     help="truncation mode (default is per-index).")
    gkl.add_argument('--tolerance', type=float, default=limits.DEFAULT_TOLERANCE,
                     help="accepted difference (default is %g)." % limits.DEFAULT_TOLERANCE)
    gkl.add_argument('--exponent', choices=EXPONENT_READINGS, default='k-1',
                     help="power of z in the integrand (default is k-1).")
    gkl.set_defaults(func=cmd_gkl)

    return parser


def main():
    parser = get_parser()
    args = parser.parse_args()
    logger.setLevel(get_loglevel(args.verbosity))

    try:
        record = args.func(args)
    except ResourceLimitError as err:
        print("%s: resource limit: %s" % (PROGRAM_NAME, err), file=sys.stderr)
        sys.exit(EXIT_RESOURCE)
    except (FacSeriesException, argparse.ArgumentTypeError) as err:
        parser.error(str(err))
    else:
        if args.json:
            print(json.dumps(record.as_dict()))
        else:
            print(record.to_text())
        sys.exit(record.exit_code)


if __name__ == '__main__':
    main()
