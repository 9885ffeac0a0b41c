"""Build script: compiles the optional fast kernels when Cython is available.

The package is fully functional without the extension (pure-Python kernels are
selected at import time), so a failed or skipped build is not an error.
"""

import os

from setuptools import Extension, setup

PYX = os.path.join("src", "resonantk", "_speedups.pyx")

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None and os.path.exists(PYX):
    extensions = cythonize(
        [Extension("resonantk._speedups", [PYX])],
        compiler_directives={"language_level": "3"},
    )
else:
    extensions = []

setup(ext_modules=extensions)
