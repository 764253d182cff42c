"""Optional Cython extension build.

The package is pure Python and fully functional without the extension;
``ncsurf.kernels`` falls back to ``ncsurf._kernels_py`` when the compiled
module is absent.  Building the accelerator in place:

    python setup.py build_ext --inplace

requires Cython and a C compiler.  The extension is marked optional, so an
install where compilation fails still succeeds (pure-Python fallback).
"""

import os

from setuptools import setup

ext_modules = []
if os.path.exists("src/ncsurf/_kernels_cy.pyx"):
    try:
        from Cython.Build import cythonize
        from setuptools.extension import Extension

        ext = Extension(
            "ncsurf._kernels_cy",
            ["src/ncsurf/_kernels_cy.pyx"],
            optional=True,
        )
        ext_modules = cythonize(ext, compiler_directives={"language_level": "3"})
    except ImportError:
        pass

setup(ext_modules=ext_modules)
