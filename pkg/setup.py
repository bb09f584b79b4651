"""Build script: compile the optional Cython kernel when a toolchain is present.

The package is pure Python by contract; ``tame3._kernel`` is a drop-in
replacement for ``tame3._kernel_py`` compiled for speed.  If Cython or a C
compiler is unavailable the build silently falls back to the pure-Python
kernel — installation must never fail because of the accelerator.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/tame3/_kernel.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - exercised only without Cython
    print(f"tame3: building without the compiled kernel ({exc!r})")

setup(ext_modules=ext_modules)
