"""Build script: compiles the optional DFS kernel extension.

The package works without the extension (a pure-Python kernel with the
same interface is selected at import time), so a failed compile is not
fatal to installation from source without Cython.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("hexsaw._dfs", ["src/hexsaw/_dfs.pyx"])],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
