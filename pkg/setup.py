"""Build script: compiles the optional extension core.

The package works without the extension (a numpy fallback is selected at
import time); set FRACPOLY_NO_EXT=1 to skip the compilation attempt.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("FRACPOLY_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "fracpoly._core",
                    ["src/fracpoly/_core.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except Exception as exc:  # pragma: no cover - build-env dependent
        print(f"fracpoly: skipping extension build ({exc}); pure-python kernels will be used")

setup(ext_modules=ext_modules)
