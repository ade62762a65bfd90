"""CMake-driven build of the netflippa extension module.

Install with `pip install . --no-build-isolation` (the build needs cmake and
a C++20 compiler on PATH).
"""

import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp) / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)

        out_dir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        out_dir.mkdir(parents=True, exist_ok=True)

        configure = [
            "cmake",
            str(source_dir),
            "-DCMAKE_BUILD_TYPE=Release",
            "-DNETFLIPPA_BUILD_TESTS=OFF",
            "-DNETFLIPPA_BUILD_CLI=OFF",
            f"-DPython3_EXECUTABLE={sys.executable}",
        ]
        subprocess.run(configure, cwd=build_dir, check=True)
        subprocess.run(
            ["cmake", "--build", ".", "--target", "netflippa_pymodule", "-j"],
            cwd=build_dir,
            check=True,
        )

        built = list((build_dir / "python" / "netflippa").glob("_core*"))
        if not built:
            raise RuntimeError("cmake build produced no _core module")
        self.copy_file(str(built[0]), str(out_dir / built[0].name))


setup(
    packages=["netflippa"],
    package_dir={"netflippa": "python/netflippa"},
    ext_modules=[CMakeExtension("netflippa._core")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
