"""Build script: compiles the optional Cython kernel for the brute-force oracle.

The package works without the extension (a pure-Python twin is selected at
import time), so any failure here just means the slow path is used.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("affineclasses.oracle._speedups",
                   ["src/affineclasses/oracle/_speedups.pyx"])],
        language_level=3,
    )
except Exception as e:
    print("cython extension skipped: %s" % e)

setup(ext_modules=ext_modules)
