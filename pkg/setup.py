# pylint: disable=g-bad-file-header
# Copyright 2026 The gsmppm Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or  implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ============================================================================
"""Install script for setuptools."""

import importlib.util

import setuptools


def _version() -> str:
  spec = importlib.util.spec_from_file_location('_metadata',
                                                'gsmppm/_metadata.py')
  module = importlib.util.module_from_spec(spec)
  spec.loader.exec_module(module)
  return module.__version__


testing_require = [
    'mock',
    'pytest-xdist',
    'pytype',
]

setuptools.setup(
    name='gsmppm',
    description=('Constellation and protograph LDPC code design for coded '
                 'GSMPPM over lognormal free-space optical channels.'),
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    author='The gsmppm Authors',
    license='Apache License, Version 2.0',
    version=_version(),
    keywords='free-space-optics ldpc protograph exit-chart modulation python',
    packages=setuptools.find_packages(),
    package_data={'gsmppm.codes': ['data/*.txt']},
    install_requires=[
        'absl-py',
        'immutabledict',
        'numpy',
        'pandas',
        'plotnine',
        'scipy',
        'termcolor',
        'tqdm',
    ],
    extras_require={
        'testing': testing_require,
    },
    entry_points={
        'console_scripts': ['gsmppm=gsmppm.cli:entry_point'],
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: POSIX :: Linux',
        'Operating System :: MacOS :: MacOS X',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Topic :: Scientific/Engineering :: Information Analysis',
    ],
)
