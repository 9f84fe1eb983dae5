"""Build the optional compiled kernels; the package works without them."""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("BAXTERLAB_NO_EXT", "") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext = Extension("baxterlab._ckernels", ["src/baxterlab/_ckernels.pyx"], optional=True)
        ext_modules = cythonize([ext], language_level=3, quiet=True)
    except ImportError:  # no Cython: pure-Python kernels only
        ext_modules = []

setup(ext_modules=ext_modules)
