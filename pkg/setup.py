"""Build hook: compile the optional Cython kernel when possible.

The package is fully functional without it (hoplift.kernel falls back to
the pure-Python twin), so any build failure here downgrades to a warning.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("hoplift._speedups", ["src/hoplift/_speedups.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover
    import warnings

    warnings.warn(f"building without compiled kernel: {exc}")

setup(ext_modules=ext_modules)
