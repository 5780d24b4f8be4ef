from setuptools import Extension, setup

# The compiled kernels are an optional speedup: the package falls back to
# weylchar._kernels.pure at import time if the extension is absent.
try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("weylchar._kernels._speedups", ["src/weylchar/_kernels/_speedups.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
