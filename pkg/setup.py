from setuptools import Extension, setup

# The compiled kernel is optional: the package falls back to the pure-Python
# implementation in wordcones.kernels._pycore when the extension is missing.
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "wordcones.kernels._core",
                ["src/wordcones/kernels/_core.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
