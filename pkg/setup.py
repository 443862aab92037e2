import os

from setuptools import Extension, setup

# The compiled kernel is an optional speedup; the package falls back to the
# pure-Python implementation when the extension is absent or PRCODES_PURE=1.
ext_modules = []
if os.environ.get("PRCODES_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("prcodes._kernel", ["src/prcodes/_kernel.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
