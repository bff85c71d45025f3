"""Build script: compiles the optional elimination kernel.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so a failed Cython build is not
fatal for `pip install`.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("fmchow._speedups", ["src/fmchow/_speedups.pyx"])],
        language_level="3",
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"fmchow: skipping compiled kernel ({exc}); pure-Python lane will be used")

setup(ext_modules=ext_modules)
