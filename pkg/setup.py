"""Optional compiled kernel build.

The package is fully functional without the extension; ffheights.kernels
falls back to the pure-Python implementation when the compiled module is
missing or fails to build.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "ffheights._kernels",
                ["src/ffheights/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except Exception:  # pragma: no cover - Cython unavailable
    ext_modules = []

setup(ext_modules=ext_modules)
