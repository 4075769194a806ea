"""Build script: compiles the optional Cython raycast kernel.

The package works without the extension (a pure-Python kernel is selected
at import time), so compilation failures are downgraded to a warning.
Set HETSCAN_PURE_PYTHON=1 to skip the extension entirely.
"""

import os
import sys

from setuptools import setup

ext_modules = []
if os.environ.get("HETSCAN_PURE_PYTHON") != "1":
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "hetscan.sensing._raycast_cy",
                    ["src/hetscan/sensing/_raycast_cy.pyx"],
                    include_dirs=[numpy.get_include()],
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError as exc:
        print(f"hetscan: skipping Cython kernel ({exc}); pure-Python fallback will be used", file=sys.stderr)
        ext_modules = []

setup(ext_modules=ext_modules)
