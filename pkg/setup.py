"""Builds the optional Cython row-reduction kernel.

Without Cython or a C compiler the package installs pure Python and
``lefschetz.linalg`` falls back automatically.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension
except ImportError:
    pass
else:
    ext_modules = cythonize(
        [Extension("lefschetz._kernels", ["src/lefschetz/_kernels.pyx"], extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
