from Cython.Build import cythonize
from setuptools import Extension, setup

setup(
    ext_modules=cythonize(
        [Extension("kmodulus._kernels", ["src/kmodulus/_kernels.pyx"])],
        language_level=3,
    ),
)
