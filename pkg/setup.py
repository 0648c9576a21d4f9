import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("KDISTANT_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("kdistant._ckernels", ["src/kdistant/_ckernels.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
