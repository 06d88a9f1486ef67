"""Build script: compiles the optional Cython kernel when the toolchain allows.

The package is fully functional without the extension; `screwinv._kernel`
falls back to the pure-Python implementation at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "screwinv._kernel._speedups",
                sources=["src/screwinv/_kernel/_speedups.pyx"],
                optional=True,
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)
