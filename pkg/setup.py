"""Build hooks for the optional compiled kernels.

The package works without the extension; kernels/__init__.py falls back to
the numpy implementation when the compiled module is missing.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "textlevel.kernels._speedups",
                ["src/textlevel/kernels/_speedups.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    # No Cython available: install as pure Python.
    pass

setup(ext_modules=ext_modules)
