"""Build hook: compile the optional fast kernels.

The package is pure Python plus one optional Cython extension
(`bridgevar._speedups`).  If Cython or a C compiler is missing the build
falls through silently and the pure-Python kernels in
`bridgevar._kernels` are used at import time instead.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/bridgevar/_speedups.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - depends on toolchain
    print("bridgevar: skipping compiled kernels (%s)" % exc)

setup(ext_modules=ext_modules)
