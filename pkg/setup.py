"""Build the optional compiled kernels.

Without Cython (or a C compiler) the package installs as pure Python and
``flagko.kernels`` falls back to ``flagko._kernels_py``.  Set
``FLAGKO_NO_EXT=1`` to skip the extension on purpose.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("FLAGKO_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("flagko._kernels", ["src/flagko/_kernels.pyx"], extra_compile_args=["-O2"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
