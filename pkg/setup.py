"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a pure-Python fallback is selected
at import time), so any build failure here downgrades to a warning instead
of aborting the install. Set FPGFT_NO_EXTENSION=1 to skip the build
entirely.
"""

import os
import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


def _extensions():
    if os.environ.get("FPGFT_NO_EXTENSION"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        warnings.warn("Cython not available; building without compiled kernels")
        return []
    ext = Extension(
        "fpgft._kernels_cy",
        ["src/fpgft/_kernels_cy.pyx"],
        # no FMA contraction: keeps the compiled kernels numerically aligned
        # with the pure-Python fallback
        extra_compile_args=["-O2", "-ffp-contract=off"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


class optional_build_ext(build_ext):
    """build_ext that warns instead of failing when a compiler is missing."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing or misconfigured
            warnings.warn(f"compiled kernels skipped: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"compiled kernels skipped ({ext.name}): {exc}")


setup(ext_modules=_extensions(), cmdclass={"build_ext": optional_build_ext})
