from setuptools import setup

# The compiled kernels are optional: if Cython (or a C compiler) is missing,
# the package falls back to the pure-Python kernel implementations at import.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/gencayley/_kernels.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
