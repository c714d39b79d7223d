from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "lpnerve.kernels._reduction",
                ["src/lpnerve/kernels/_reduction.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            ),
            Extension(
                "lpnerve.kernels._fwsweep",
                ["src/lpnerve/kernels/_fwsweep.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            ),
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
