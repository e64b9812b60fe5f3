import logging
import logging.config
import sys
from copy import copy
from typing import Literal

import click

import pynilmet.config

logger = logging.getLogger(__name__)

LEVEL_COLOURS: dict[int, str] = {
    logging.DEBUG: "cyan",
    logging.INFO: "green",
    logging.WARNING: "yellow",
    logging.ERROR: "red",
    logging.CRITICAL: "bright_red",
}
_LEVEL_WIDTH = 8


def default_log_level() -> int:
    """DEBUG in the development environment, INFO otherwise."""
    if pynilmet.config.OperationMode().environment == "development":
        return logging.DEBUG
    return logging.INFO


LOGGING_CONFIG = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "default": {
            "()": "pynilmet.utils.logging.DefaultFormatter",
            "fmt": "%(asctime)s.%(msecs)03d | %(levelprefix)s | "
            "%(name)s:%(funcName)s:%(lineno)d - %(message)s",
            "datefmt": "%Y-%m-%d %H:%M:%S",
        },
    },
    "handlers": {
        "default": {
            "formatter": "default",
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
        },
    },
    "loggers": {
        "pynilmet": {
            "handlers": ["default"],
            "level": default_log_level(),
            "propagate": False,
        },
    },
}


class DefaultFormatter(logging.Formatter):
    """Adds a `levelprefix` field: the level name padded to eight characters, coloured
    with `click.style` when `use_colors` is set.

    Without an explicit `use_colors`, colours are used when stderr is a terminal.
    """

    def __init__(
        self,
        fmt: str | None = None,
        datefmt: str | None = None,
        style: Literal["%", "{", "$"] = "%",
        use_colors: bool | None = None,
    ):
        super().__init__(fmt=fmt, datefmt=datefmt, style=style)
        self.use_colors = sys.stderr.isatty() if use_colors is None else use_colors

    def level_prefix(self, record: logging.LogRecord) -> str:
        padding = " " * (_LEVEL_WIDTH - len(record.levelname))
        colour = LEVEL_COLOURS.get(record.levelno)
        if not self.use_colors or colour is None:
            return record.levelname + padding
        return click.style(record.levelname, fg=colour) + padding

    def formatMessage(self, record: logging.LogRecord) -> str:  # noqa: N802
        recordcopy = copy(record)
        recordcopy.__dict__["levelprefix"] = self.level_prefix(record)
        return super().formatMessage(recordcopy)


def setup_logging() -> None:
    """
    Configures the logging settings of the package.

    Log records of the `pynilmet` loggers are written to stderr, so that reports on
    stdout stay machine readable. In a development environment the log level is set
    to DEBUG, in other environments it is set to INFO.
    """

    logger.debug("Configuring pynilmet logging.")

    logging.config.dictConfig(LOGGING_CONFIG)


def set_log_level(level: int) -> None:
    """Sets the level of the package logger, e.g. from the `--verbose` CLI flag."""

    logging.getLogger("pynilmet").setLevel(level)
