#!/usr/bin/env python
#
# Copyright (c), 2020, facseries developers.
# All rights reserved.
# This file is distributed under the terms of the MIT License.
# See the file 'LICENSE' in the root directory of the present
# distribution, or http://opensource.org/licenses/MIT.
#
if __name__ == '__main__':
    import unittest
    import os

    from facseries.testing import print_test_header

    def load_tests(loader, tests, pattern):
        tests_dir = os.path.dirname(__file__)
        if pattern is not None:
            tests.addTests(loader.discover(start_dir=tests_dir, pattern=pattern))
            return tests

        tests.addTests(loader.discover(start_dir=tests_dir, pattern="test_helpers.py"))
        tests.addTests(loader.discover(start_dir=tests_dir, pattern="test_exact.py"))
        tests.addTests(loader.discover(start_dir=tests_dir, pattern="test_exppoly.py"))
        tests.addTests(loader.discover(start_dir=tests_dir, pattern="test_divdiff.py"))
        tests.addTests(loader.discover(start_dir=tests_dir, pattern="test_numeval.py"))
        tests.addTests(loader.discover(start_dir=tests_dir, pattern="test_series.py"))
        tests.addTests(loader.discover(start_dir=tests_dir, pattern="test_oracle.py"))
        tests.addTests(loader.discover(start_dir=tests_dir, pattern="test_cli.py"))
        tests.addTests(loader.discover(start_dir=tests_dir, pattern="test_package.py"))
        return tests

    print_test_header()
    unittest.main()
