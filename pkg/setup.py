"""Build hook for the optional compiled kernels.

The Cython module is marked optional: if Cython or a C compiler is missing,
installation continues and ``qvoa`` runs on its pure-Python kernels.
"""
import os

from setuptools import Extension, setup


def extensions():
    if os.environ.get("QVOA_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "qvoa._kernels",
        ["src/qvoa/_kernels.pyx"],
        extra_compile_args=["-O3"],
        optional=True,
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions())
