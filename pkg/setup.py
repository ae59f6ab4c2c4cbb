import numpy as np
from setuptools import Extension, setup
from Cython.Build import cythonize

# The compiled kernels are an optional speedup: linarr._kernels falls back to
# numpy/pure-Python implementations when the extension is absent.
ext = Extension(
    "linarr._kernels._speed",
    ["src/linarr/_kernels/_speed.pyx"],
    include_dirs=[np.get_include()],
    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    optional=True,
)

setup(ext_modules=cythonize([ext], language_level=3))
