"""Build script for the optional compiled permutation kernels.

Project metadata lives in pyproject.toml.  If Cython or a C compiler is
missing the package still installs and runs on the pure-Python kernels.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pragma: no cover - build without Cython
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("e6verify._kernels", ["src/e6verify/_kernels.pyx"], extra_compile_args=["-O3"])],
        compiler_directives={"language_level": 3},
    )

setup(ext_modules=ext_modules)
