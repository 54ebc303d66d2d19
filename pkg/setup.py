"""Build script: compiles the optional fast kernels when Cython and a C
compiler are available, otherwise installs the pure-Python package (the
kernel selector falls back to the numpy implementation at import time)."""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/maxvis/_kernels/_core.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print("maxvis: Cython not found, skipping compiled kernels", file=sys.stderr)


if ext_modules:
    # Tolerate a missing/broken C toolchain: the package works without the
    # extension, so a failed build_ext must not fail the install.
    from setuptools.command.build_ext import build_ext as _build_ext

    class optional_build_ext(_build_ext):
        def run(self):
            try:
                super().run()
            except Exception as exc:  # CompileError, DistutilsPlatformError, ...
                print("maxvis: compiled kernels unavailable (%s)" % exc, file=sys.stderr)

        def build_extension(self, ext):
            try:
                super().build_extension(ext)
            except Exception as exc:
                print("maxvis: failed to build %s (%s)" % (ext.name, exc), file=sys.stderr)

    setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
else:
    setup()
