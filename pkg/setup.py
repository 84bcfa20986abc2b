"""Build script for the compiled kernel backend.

The package works without the extension (helmbem.backends falls back to the
NumPy implementation), so a failed build here only costs speed.
"""

import numpy as np
from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "helmbem.backends._fastkern",
        ["src/helmbem/backends/_fastkern.pyx"],
        include_dirs=[np.get_include()],
        # no -ffast-math: the Bessel evaluators rely on compensated
        # subtractions that it would optimize away
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
]

setup(ext_modules=cythonize(extensions, language_level="3"))
