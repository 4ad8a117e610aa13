import os
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
        extdir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        cfg = "Debug" if int(os.environ.get("DEBUG", "0")) else "Release"
        configure_args = [
            f"-DL2BOOST_PY_OUTDIR={extdir}",
            f"-DPython3_EXECUTABLE={sys.executable}",
            f"-DCMAKE_BUILD_TYPE={cfg}",
        ]
        build_temp = Path(self.build_temp) / ext.name
        build_temp.mkdir(parents=True, exist_ok=True)
        subprocess.run(["cmake", ext.sourcedir, *configure_args],
                       cwd=build_temp, check=True)
        subprocess.run(["cmake", "--build", ".", "--target", "_core",
                        f"-j{os.cpu_count() or 2}"],
                       cwd=build_temp, check=True)


setup(
    packages=["l2boost"],
    package_dir={"": "python"},
    ext_modules=[CMakeExtension("l2boost._core")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
