from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("pynilmet")
except PackageNotFoundError:  # running from a source tree that is not installed
    __version__ = "0.0.0"

version_info = tuple(int(part) for part in __version__.split(".")[:3])
