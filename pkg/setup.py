from setuptools import Extension, setup

# The compiled kernels are optional: without Cython (or a C compiler) the
# package falls back to the pure-Python kernels at import time.
try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("ghcomplex._speedups", ["src/ghcomplex/_speedups.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
