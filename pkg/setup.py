#! /usr/bin/env python
"""Sparse additive kernel regression with a doubly-penalized estimator."""

import os
import codecs

from setuptools import setup, find_packages


version_file = os.path.join("spamkern", "_version.py")
with open(version_file) as f:
    exec(f.read())

with open("requirements.txt") as f:
    requirements = f.read().splitlines()

DISTNAME = "spamkern"
DESCRIPTION = "Sparse additive kernel regression with a doubly-penalized " \
              "estimator, rate calculators and lower-bound constructions."
with codecs.open("README.rst", encoding="utf-8-sig") as f:
    LONG_DESCRIPTION = f.read()
LONG_DESCRIPTION_TYPE = "text/x-rst"
LICENSE = "GNU AGPLv3"
VERSION = __version__  # noqa
CLASSIFIERS = ["Intended Audience :: Science/Research",
               "Intended Audience :: Developers",
               "License :: OSI Approved",
               "Programming Language :: Python",
               "Topic :: Scientific/Engineering",
               "Operating System :: POSIX",
               "Operating System :: Unix",
               "Operating System :: MacOS",
               "Programming Language :: Python :: 3.8",
               "Programming Language :: Python :: 3.9",
               "Programming Language :: Python :: 3.10"]
KEYWORDS = "sparse additive models, reproducing kernel Hilbert spaces, " \
           "group lasso, minimax rates, high-dimensional regression"
INSTALL_REQUIRES = requirements
EXTRAS_REQUIRE = {"tests": ["pytest",
                            "pytest-cov",
                            "flake8",
                            "hypothesis"]}

setup(name=DISTNAME,
      description=DESCRIPTION,
      license=LICENSE,
      version=VERSION,
      long_description=LONG_DESCRIPTION,
      long_description_content_type=LONG_DESCRIPTION_TYPE,
      zip_safe=False,
      classifiers=CLASSIFIERS,
      packages=find_packages(exclude=["examples", "examples.*"]),
      keywords=KEYWORDS,
      python_requires=">=3.8",
      install_requires=INSTALL_REQUIRES,
      extras_require=EXTRAS_REQUIRE,
      entry_points={"console_scripts":
                    ["spamkern=spamkern.cli.__main__:main"]})
