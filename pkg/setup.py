import os

from setuptools import Extension, setup

# The compiled kernel is optional: set SPECTILE_PURE=1 (or lack Cython / a C
# compiler) and the package falls back to the numpy implementation at import.
ext_modules = []
if os.environ.get("SPECTILE_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "spectile.kernels._fast",
                    ["src/spectile/kernels/_fast.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
