from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # The compiled scan kernel is optional; the package falls back to the
    # pure-Python twin in selfpower._scan_py when the extension is absent.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "selfpower._scan",
                ["src/selfpower/_scan.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
