# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, wallscope developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


import sys
if sys.version_info < (3, 8):
    sys.exit('wallscope requires Python 3.8+')
import pathlib
import re
from setuptools import setup




# Extract the version from version.py without importing the package
version_path = pathlib.Path(__file__).parent / 'wallscope' / 'version.py'
version = re.search(r"^__version__ = '([^']+)'$", version_path.read_text(encoding='utf8'), re.MULTILINE).group(1)

readme_path = pathlib.Path(__file__).parent / 'README.md'
long_description = readme_path.read_text(encoding='utf8')


setup(name='wallscope',
      version=version,
      py_modules=[],
      packages=[
          'wallscope',
      ],
      package_data = {
          'wallscope': ['data/*.bespon']
      },
      description='Exact numerical wall-crossing for Chern characters on projective 3-space',
      long_description=long_description,
      long_description_content_type='text/markdown',
      author='wallscope developers',
      license='BSD',
      keywords=['Bridgeland stability', 'tilt stability', 'wall-crossing', 'Chern character',
                'Hilbert scheme', 'stable pairs'],
      python_requires='>=3.8',
      install_requires=[
          'bespon>=0.6',
      ],
      extras_require={
          'test': ['pytest'],
      },
      # https://pypi.python.org/pypi?:action=list_classifiers
      classifiers=[
          'Development Status :: 3 - Alpha',
          'Environment :: Console',
          'Intended Audience :: Education',
          'Intended Audience :: Science/Research',
          'License :: OSI Approved :: BSD License',
          'Operating System :: OS Independent',
          'Programming Language :: Python :: 3.8',
          'Programming Language :: Python :: 3.9',
          'Programming Language :: Python :: 3.10',
          'Programming Language :: Python :: 3.11',
          'Topic :: Scientific/Engineering :: Mathematics',
      ],
      entry_points = {
          'console_scripts': ['wallscope = wallscope.cmdline:main'],
      },
)
