from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("k3invol._speedups", ["src/k3invol/_speedups.pyx"])],
        language_level=3,
    )
except ImportError:
    # The package works without the compiled kernel (pure fallback).
    ext_modules = []

setup(ext_modules=ext_modules)
