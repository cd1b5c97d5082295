import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "vnu._core",
                ["src/vnu/_core.pyx"],
                extra_compile_args=["-O3"],
                include_dirs=[numpy.get_include()],
            )
        ],
        language_level=3,
    )
except Exception:
    # pure-python fallback is selected at import time when the
    # compiled kernel is unavailable
    ext_modules = []

setup(ext_modules=ext_modules)
