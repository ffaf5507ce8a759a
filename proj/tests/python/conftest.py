import os
import sys

# make the freshly built extension and the source package importable
build_dir = os.environ.get("GSP4SERRE_BUILD_DIR")
if build_dir:
    sys.path.insert(0, build_dir)
src = os.environ.get("GSP4SERRE_SRC")
if src:
    sys.path.insert(0, os.path.join(src, "python"))
