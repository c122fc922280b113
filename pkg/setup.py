"""Build script: compiles the hot-loop kernels when Cython and a C compiler
are available.  Set ABSORB_NO_EXT=1 to force the pure-Python backend."""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("ABSORB_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "absorb._ckernels",
                    ["src/absorb/_ckernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
