"""Build script for the optional compiled kernel extension.

The package is fully functional without the extension (a numpy fallback is
selected at import time); building it just makes the Monte Carlo campaigns
much faster.  Set TRINEQ_NO_EXT=1 to skip the extension entirely.

Core metadata lives in pyproject.toml; it is mirrored here so that
pre-PEP-621 toolchains (setuptools < 61) still produce a working install.
"""

import os

from setuptools import find_packages, setup

ext_modules = []
if not os.environ.get("TRINEQ_NO_EXT"):
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "trineq._fastkernels",
                    ["src/trineq/_fastkernels.pyx"],
                    include_dirs=[numpy.get_include()],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(
    name="trineq",
    version="0.1.0",
    description=(
        "Triangle-inequality toolkit for l1 coherence and entanglement "
        "concurrence of rank-2 quantum states"
    ),
    python_requires=">=3.10",
    install_requires=["numpy>=1.24"],
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    entry_points={"console_scripts": ["trineq = trineq.cli:main"]},
    ext_modules=ext_modules,
)
