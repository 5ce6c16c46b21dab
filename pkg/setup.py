import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("FATCOB_NO_EXT"):
    try:
        from Cython.Build import cythonize
        ext_modules = cythonize(
            [Extension("fatcob._canon_fast", ["src/fatcob/_canon_fast.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # no Cython around: ship the pure-Python kernel only
        ext_modules = []

setup(ext_modules=ext_modules)
