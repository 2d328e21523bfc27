from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "linfpt._linfpt",
    sources=[
        "src/series.cpp",
        "src/distribution.cpp",
        "src/random_source.cpp",
        "src/sampler.cpp",
        "src/validation.cpp",
        "src/bindings.cpp",
    ],
    include_dirs=["include"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
