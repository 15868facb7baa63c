import os

from setuptools import setup

ext_modules = []
if os.environ.get("STEERMUB_NO_EXT", "") in ("", "0"):
    try:
        import numpy  # noqa: F401  (build-time check only)
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "steermub._kernels",
                    ["src/steermub/_kernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # pure-Python fallback is selected at import time
        ext_modules = []

setup(ext_modules=ext_modules)
