import logging
import re
from collections.abc import Iterator

import click
import pytest
from confz import DataSource
from pynilmet.config import OperationMode
from pynilmet.utils.logging import (
    LOGGING_CONFIG,
    DefaultFormatter,
    default_log_level,
    set_log_level,
    setup_logging,
)
from pytest import LogCaptureFixture


@pytest.fixture
def package_logger() -> Iterator[logging.Logger]:
    logger = logging.getLogger("pynilmet")
    handlers, level, propagate = list(logger.handlers), logger.level, logger.propagate
    yield logger
    logger.handlers = handlers
    logger.setLevel(level)
    logger.propagate = propagate


@pytest.mark.parametrize(
    "environment, expected",
    [
        ("development", logging.DEBUG),
        ("testing", logging.INFO),
        ("production", logging.INFO),
    ],
)
def test_default_log_level(environment: str, expected: int) -> None:
    with OperationMode.change_config_sources(
        DataSource(data={"environment": environment})
    ):
        assert default_log_level() == expected


def test_setup_logging_writes_to_stderr(
    package_logger: logging.Logger, capsys: pytest.CaptureFixture[str]
) -> None:
    assert LOGGING_CONFIG["handlers"]["default"]["stream"] == "ext://sys.stderr"
    setup_logging()
    assert not package_logger.propagate
    (handler,) = package_logger.handlers
    assert isinstance(handler.formatter, DefaultFormatter)

    package_logger.setLevel(logging.WARNING)
    logging.getLogger("pynilmet.flow.bracket_flow").warning("step %d", 3)
    captured = capsys.readouterr()
    assert captured.out == ""
    assert re.search(
        r"\| WARNING  \| pynilmet\.flow\.bracket_flow:test_setup_logging_writes_to_"
        r"stderr:\d+ - step 3$",
        captured.err.strip(),
    )


def test_set_log_level(caplog: LogCaptureFixture):
    logger = logging.getLogger("pynilmet.algebra.bracket")
    set_log_level(logging.WARNING)

    logger.info("This is an info message")
    logger.warning("This is a warning message")

    assert "This is an info message" not in caplog.text
    assert "This is a warning message" in caplog.text
    assert logging.getLogger("pynilmet").level == logging.WARNING


def make_record(level: int) -> logging.LogRecord:
    return logging.LogRecord(
        "pynilmet.flow.bracket_flow",
        level,
        __file__,
        42,
        "step %d",
        (3,),
        None,
        func="flow_run",
    )


def test_configured_format() -> None:
    config = LOGGING_CONFIG["formatters"]["default"]
    formatter = DefaultFormatter(
        fmt=config["fmt"], datefmt=config["datefmt"], use_colors=False
    )
    assert re.fullmatch(
        r"\d{4}-\d\d-\d\d \d\d:\d\d:\d\d\.\d{3} \| INFO     \| "
        r"pynilmet\.flow\.bracket_flow:flow_run:42 - step 3",
        formatter.format(make_record(logging.INFO)),
    )


@pytest.mark.parametrize(
    "level, expected",
    [
        (logging.DEBUG, "DEBUG    | step 3"),
        (logging.WARNING, "WARNING  | step 3"),
        (logging.CRITICAL, "CRITICAL | step 3"),
    ],
)
def test_formatter_pads_level_names(level: int, expected: str) -> None:
    formatter = DefaultFormatter(fmt="%(levelprefix)s | %(message)s", use_colors=False)
    assert formatter.format(make_record(level)) == expected


@pytest.mark.parametrize(
    "level, colour",
    [(logging.DEBUG, "cyan"), (logging.INFO, "green"), (logging.ERROR, "red")],
)
def test_formatter_colours_level_names(level: int, colour: str) -> None:
    formatter = DefaultFormatter(fmt="%(levelprefix)s|", use_colors=True)
    text = formatter.format(make_record(level))
    name = logging.getLevelName(level)
    assert text == click.style(name, fg=colour) + " " * (8 - len(name)) + "|"
    assert click.unstyle(text) == f"{name:<8}|"
