import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("HESSK3_NO_EXT", "") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext = Extension(
            "hessk3.poly._kernels",
            ["src/hessk3/poly/_kernels.pyx"],
            language="c++",
            extra_compile_args=["-O2", "-std=c++17"],
        )
        ext_modules = cythonize([ext], language_level=3)

setup(ext_modules=ext_modules)
