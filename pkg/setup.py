"""Build script: compiles the optional native kernel when Cython and a C
compiler are available; the package falls back to the pure-Python kernels
otherwise."""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "drskit._kernels._native",
                ["src/drskit/_kernels/_native.pyx"],
            )
        ],
        language_level="3",
    )
except ImportError:
    print("Cython not found; installing without the native kernel", file=sys.stderr)


class OptionalBuildExt(build_ext):
    """Treat native-kernel compilation as best-effort."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain, ...
            print(f"native kernel build skipped: {exc}", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"native kernel build failed ({ext.name}): {exc}", file=sys.stderr)


setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
