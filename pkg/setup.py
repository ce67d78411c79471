from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("zgring._speedups", ["src/zgring/_speedups.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # The package works without the compiled kernels (pure-Python fallback).
    ext_modules = []

setup(ext_modules=ext_modules)
