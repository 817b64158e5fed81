from setuptools import Extension, setup

# The compiled scan kernel is optional: the package falls back to the pure
# Python implementation in quadrocubic.scan when the extension is missing.
try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("quadrocubic._scan", ["src/quadrocubic/_scan.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
