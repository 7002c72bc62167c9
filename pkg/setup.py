"""Build script for the optional Cython engine.

The extension is marked optional: if Cython or a C++ compiler is missing the
package installs with the pure-Python engine only.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "sheafcheck._fastengine",
                ["src/sheafcheck/_fastengine.pyx"],
                language="c++",
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
