"""Build hook for the optional compiled rank kernel.

The package is pure Python except for cointerval._kernels_c, a small
Cython module doing dense elimination over prime fields.  The extension
is marked optional: if Cython or a C compiler is missing the install
still succeeds and the package falls back to the pure implementation.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "cointerval._kernels_c",
                ["src/cointerval/_kernels_c.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
