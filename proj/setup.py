import os
import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name, sourcedir=""):
        super().__init__(name, sources=[])
        self.sourcedir = os.fspath(Path(sourcedir).resolve())


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        ext_fullpath = Path.cwd() / self.get_ext_fullpath(ext.name)
        extdir = ext_fullpath.parent.resolve()
        extdir.mkdir(parents=True, exist_ok=True)
        build_temp = Path(self.build_temp) / ext.name
        build_temp.mkdir(parents=True, exist_ok=True)

        cmake_args = [
            "-DCMAKE_BUILD_TYPE=Release",
            "-DKPM_BUILD_TESTS=OFF",
            "-DKPM_BUILD_PYTHON=ON",
            f"-DPython3_EXECUTABLE={sys.executable}",
        ]
        subprocess.run(["cmake", ext.sourcedir, *cmake_args], cwd=build_temp, check=True)
        subprocess.run(["cmake", "--build", ".", "--target", "_kpm", "-j"],
                       cwd=build_temp, check=True)

        staged = list((build_temp / "python" / "kpm").glob("_kpm*.so"))
        if not staged:
            raise RuntimeError("compiled extension not found in the CMake staging dir")
        shutil.copy2(staged[0], ext_fullpath)


setup(
    packages=["kpm"],
    package_dir={"kpm": "python/kpm"},
    ext_modules=[CMakeExtension("kpm._kpm")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
