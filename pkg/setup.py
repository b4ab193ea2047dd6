"""Build the optional compiled search kernel.

Without Cython, or when compilation fails, the package installs with the
pure-Python kernel only.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "unilyndon._csearch",
                ["src/unilyndon/_csearch.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
