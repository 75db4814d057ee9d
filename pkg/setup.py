"""Build script: compiles the optional Monte Carlo kernel.

The package is fully functional without the extension (a bit-identical NumPy
fallback is selected at import time), so a failed compile only costs speed.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Skip the accelerator instead of failing the whole install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            warnings.warn(f"compiled kernel unavailable, using the pure fallback: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"skipping {ext.name}, using the pure fallback: {exc}")


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("pickupsticks._kernel_cy", ["src/pickupsticks/_kernel_cy.pyx"])],
        language_level="3",
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
