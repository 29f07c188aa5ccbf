"""Build script for the optional compiled kernels.

Metadata lives in pyproject.toml; this file only declares the Cython
extension.  If Cython or a C++ compiler is missing the package still
installs and falls back to the pure-Python kernels.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    extensions = cythonize(
        [
            Extension(
                "poset_ramsey._ckernels",
                ["src/poset_ramsey/_ckernels.pyx"],
                language="c++",
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
