import os

from setuptools import Extension, setup

# The compiled straightening kernel is optional: the package falls back to
# the pure-Python kernel when the extension is absent (see uqson.pbw._kernel).
ext_modules = []
if not os.environ.get("UQSON_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("uqson.pbw._straighten_cy", ["src/uqson/pbw/_straighten_cy.pyx"])],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
