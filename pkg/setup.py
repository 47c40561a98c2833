"""Build shim for the optional compiled kernel.

The extension is skipped (leaving the pure-Python kernel in charge) when
Cython is unavailable or APCYCLE_NO_EXT is set.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("APCYCLE_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("apcycle._ckernels", ["src/apcycle/_ckernels.pyx"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
