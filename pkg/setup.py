from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("qatwist._ext.statesum", ["src/qatwist/_ext/statesum.pyx"]),
         Extension("qatwist._ext.canon", ["src/qatwist/_ext/canon.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
