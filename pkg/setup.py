import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "netalg._kernel",
                ["src/netalg/_kernel.pyx"],
                extra_compile_args=["-O3"],
                include_dirs=[numpy.get_include()],
            )
        ],
        language_level=3,
    )
except ImportError:
    # Pure-python fallback is selected at import time when the extension
    # is missing, so a cython-less build is still a working install.
    ext_modules = []

setup(ext_modules=ext_modules)
