"""Build script: compiles the optional Cython kernel module.

The package works without the compiled extension (a pure-Python fallback is
selected at import time), so any build failure here only costs speed.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Best-effort build: fall back to pure Python if compilation fails."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001 - any toolchain failure
            print(f"warning: skipping compiled kernels ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print(f"warning: could not compile {ext.name} ({exc})")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("warning: Cython not available, building without compiled kernels")
        return []
    return cythonize(
        [
            Extension(
                "pbci.kernels._native",
                ["src/pbci/kernels/_native.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": optional_build_ext},
)
