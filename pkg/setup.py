from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # Without Cython the package runs on the pure-Python kernels.
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("rigidity._kernels", ["src/rigidity/_kernels.pyx"], extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
