#! /usr/bin/env python
#
# Copyright (c) 2020, facseries developers.
# All rights reserved.
# This file is distributed under the terms of the MIT License.
# See the file 'LICENSE' in the root directory of the present
# distribution, or http://opensource.org/licenses/MIT.
#
from setuptools import setup, find_packages

with open("README.rst") as readme:
    long_description = readme.read()


setup(
    name='facseries',
    version='1.0.0',
    packages=find_packages(include=['facseries', 'facseries.*']),
    include_package_data=True,
    entry_points={
        'console_scripts': [
            'facseries=facseries.cli:main',
        ]
    },
    python_requires='>=3.8',
    install_requires=['mpmath>=1.1.0', 'numpy>=1.17'],
    extras_require={
        'dev': ['tox', 'coverage', 'flake8', 'hypothesis>=5.0', 'Sphinx', 'sphinx_rtd_theme']
    },
    author='facseries developers',
    license='MIT',
    license_file='LICENSE',
    description='Exact closed forms of multiple factorial series via divided differences',
    long_description=long_description,
    classifiers=[
        'Development Status :: 5 - Production/Stable',
        'Intended Audience :: Developers',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3 :: Only',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: Implementation :: CPython',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Software Development :: Libraries',
    ]
)
