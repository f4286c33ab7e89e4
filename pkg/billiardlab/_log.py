from __future__ import annotations
import logging
import os
import sys

_root_logger = logging.getLogger("billiardlab")

LEVEL_ENV = "BILLIARDLAB_LOG_LEVEL"
FILE_ENV = "BILLIARDLAB_LOG_FILE"
_FORMAT = "%(asctime)s %(name)s %(levelname)s – %(message)s"


def _make_handler(log_file: str | None) -> logging.Handler:
    handler: logging.Handler = logging.FileHandler(log_file) if log_file else logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(_FORMAT))
    return handler


def setup_logging():
    """
    Give the ``billiardlab`` logger a single handler.

    Records go to stderr, or to ``BILLIARDLAB_LOG_FILE`` when set, at
    ``BILLIARDLAB_LOG_LEVEL`` (``WARNING`` if unset or unknown). Solver
    diagnostics such as window sizes and Bessel row extensions sit at DEBUG.
    """
    level_name = os.getenv(LEVEL_ENV, os.getenv("BILLIARDLAB_LOG", "WARNING")).upper()

    for handler in _root_logger.handlers[:]:
        _root_logger.removeHandler(handler)
    _root_logger.addHandler(_make_handler(os.getenv(FILE_ENV)))
    _root_logger.setLevel(getattr(logging, level_name, logging.WARNING))
    # caplog needs propagation
    _root_logger.propagate = True


def reinitialize_logging():
    """Drop the current handler and rebuild it from the environment."""
    setup_logging()


def set_log_level(level: int | str):
    """
    Change the threshold of every billiardlab logger at once.
    Unknown names keep the current level.
    """
    try:
        if isinstance(level, str):
            level = level.upper()
        _root_logger.setLevel(level)
    except ValueError:
        _root_logger.warning(f"Invalid log level: {level}")


def get_logger(name: str) -> logging.Logger:
    """Logger for a billiardlab module: ``get_logger(__name__)`` in ``billiardlab.geometry.circle`` yields ``billiardlab.geometry.circle``."""
    if not _root_logger.handlers:
        setup_logging()
    if name.startswith("billiardlab."):
        name = name[len("billiardlab."):]
    return _root_logger.getChild(name)


setup_logging()
