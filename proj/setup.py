import glob
import os

from pybind11.setup_helpers import ParallelCompile, Pybind11Extension, build_ext
from setuptools import setup

ParallelCompile("NPY_NUM_BUILD_JOBS").install()


def eigen_include():
    for candidate in (
        os.environ.get("EIGEN_INCLUDE_DIR"),
        "/usr/include/eigen3",
        "/usr/local/include/eigen3",
        "/opt/homebrew/include/eigen3",
    ):
        if candidate and os.path.isdir(candidate):
            return candidate
    raise RuntimeError("Eigen headers not found; set EIGEN_INCLUDE_DIR")


ext = Pybind11Extension(
    "hsvr._hsvr",
    sorted(glob.glob("src/*.cpp")) + ["python/hsvr_py.cpp"],
    include_dirs=["include", "vendor", eigen_include()],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
