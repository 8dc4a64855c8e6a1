"""Build script: compiles the optional fast kernel extension.

The package works without the extension (a pure-Python backend is selected at
import time), so a failed compile downgrades to a warning instead of aborting
the install.  Set FPDIV_NO_EXT=1 to skip the extension entirely.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


COMPILE_ARGS = [
    "-O3",
    "-march=native",
    # explicit fma() calls only; implicit contraction would change results
    "-ffp-contract=off",
    "-fno-math-errno",
]


class optional_build_ext(build_ext):
    """Build the extension if possible, warn and continue otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler or toolchain missing
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            "WARNING: fpdiv._core failed to build (%s); "
            "falling back to the pure-Python backend" % (exc,),
            file=sys.stderr,
        )


def extensions():
    if os.environ.get("FPDIV_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        print(
            "WARNING: Cython not available; building without fpdiv._core",
            file=sys.stderr,
        )
        return []
    ext = Extension(
        "fpdiv._core",
        ["src/fpdiv/_core.pyx"],
        extra_compile_args=COMPILE_ARGS,
        libraries=["m"],
    )
    return cythonize(
        [ext],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
