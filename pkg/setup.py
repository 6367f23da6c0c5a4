from setuptools import setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; the kernel falls back at import
    ext_modules = []
else:
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("knotpairs.coset._ccore", ["src/knotpairs/coset/_ccore.pyx"], extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
