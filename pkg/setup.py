"""Build script for the optional compiled kernel module.

The package works without the extension (a pure-Python fallback is selected
at import time); building it just makes the hot loops much faster.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    extensions = cythonize(
        [
            Extension(
                "halinpack._kernels._native",
                ["src/halinpack/_kernels/_native.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
    )
else:
    extensions = []

setup(ext_modules=extensions)
