import os

import numpy
from setuptools import Extension, setup

PYX = os.path.join("src", "ftlocus", "_kernels.pyx")

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None and os.path.exists(PYX):
    ext_modules = cythonize(
        [
            Extension(
                "ftlocus._kernels",
                [PYX],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
else:
    # The package runs fine on the pure kernels; the extension is a speedup.
    ext_modules = []

setup(ext_modules=ext_modules)
