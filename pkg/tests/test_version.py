import pynilmet.version
import toml


def test_project_version() -> None:
    pyproject = toml.load("pyproject.toml")
    pynilmet_pyproject_version = pyproject["tool"]["poetry"]["version"]
    assert pynilmet.version.__version__ == pynilmet_pyproject_version


def test_version_info() -> None:
    assert ".".join(map(str, pynilmet.version.version_info)) == (
        pynilmet.version.__version__
    )
