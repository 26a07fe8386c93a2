"""Build the optional compiled kernel extension.

The package works without it (pure-Python fallback); pass DOOB_NO_EXT=1 to
skip the extension entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("DOOB_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "doobcodes._kernels",
                    ["src/doobcodes/_kernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
