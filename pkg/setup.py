"""Builds the optional Cython kernels; the package falls back to numpy without them."""

import platform

from setuptools import Extension, setup

# hardware popcount; without it the builtin becomes a bit-twiddling loop
ARCH_FLAGS = ["-mpopcnt"] if platform.machine() in ("x86_64", "AMD64") else []

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "f4rcodes._ext.kernels",
                ["src/f4rcodes/_ext/kernels.pyx"],
                extra_compile_args=["-O3", *ARCH_FLAGS],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
