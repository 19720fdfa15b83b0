"""Build script: compiles the assignment kernel if Cython + a C compiler exist.

The package works without the extension (a NumPy fallback is selected at
import time), so any build failure here downgrades to a pure install
instead of aborting.
"""

import os

from setuptools import setup

ext_modules = []
include_dirs = []

if os.environ.get("CFEDIT_SKIP_EXT") != "1":
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "cfedit.assignment._sapcore",
                    ["src/cfedit/assignment/_sapcore.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "language_level": 3,
                "boundscheck": False,
                "wraparound": False,
                "initializedcheck": False,
                "cdivision": True,
            },
        )
        include_dirs = [numpy.get_include()]
    except ImportError:
        pass

setup(ext_modules=ext_modules, include_dirs=include_dirs)
