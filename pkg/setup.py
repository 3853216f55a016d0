"""Build script for the optional compiled scanning kernel.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so the build is marked optional:
a missing compiler degrades installs instead of failing them.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "smellscan._kernels",
                ["src/smellscan/_kernels.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
