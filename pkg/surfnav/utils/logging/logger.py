"""
Logging utility for the surfnav system.

Console records go to stderr and stdout carries only command results.
Timestamped records go to ``run.log``.
"""
import logging
import sys
from pathlib import Path
from typing import Optional

from surfnav.config.settings import CONSOLE_LOG_FORMAT, LOG_FORMAT, LOG_LEVEL


def _level(level: Optional[str]) -> int:
    return getattr(logging, (level or LOG_LEVEL).upper())


def setup_logger(name: str, level: Optional[str] = None) -> logging.Logger:
    """
    Set up a surfnav logger with a single stderr handler.

    Args:
        name: Name of the logger
        level: Optional log level (defaults to LOG_LEVEL from settings)

    Returns:
        Configured logger
    """
    logger = logging.getLogger(name)
    logger.setLevel(_level(level))

    if not any(getattr(h, "_surfnav_console", False) for h in logger.handlers):
        console = logging.StreamHandler(sys.stderr)
        console.setLevel(_level(level))
        console.setFormatter(logging.Formatter(CONSOLE_LOG_FORMAT))
        console._surfnav_console = True
        logger.addHandler(console)
        logger.propagate = False

    return logger


def get_logger(name: str, level: Optional[str] = None) -> logging.Logger:
    """Logger for a module; call as ``get_logger(__name__)``."""
    return setup_logger(name, level)


def attach_run_log(output_dir: Path, level: Optional[str] = None) -> logging.Handler:
    """
    Mirror every surfnav logger into ``run.log`` inside an output directory.

    Timestamps appear only in this file; primary outputs carry none.

    Args:
        output_dir: Directory receiving the log file
        level: Optional log level (defaults to LOG_LEVEL from settings)

    Returns:
        The attached file handler (callers detach it when done)
    """
    output_dir.mkdir(parents=True, exist_ok=True)
    handler = logging.FileHandler(output_dir / "run.log", mode="a", encoding="utf-8")
    handler.setLevel(_level(level))
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handler._surfnav_run_log = True

    for name, existing in logging.root.manager.loggerDict.items():
        if name.startswith(("surfnav", "app")) and isinstance(existing, logging.Logger):
            existing.addHandler(handler)
    return handler


def detach_run_log(handler: logging.Handler) -> None:
    """Remove a handler installed by attach_run_log and close it."""
    for existing in list(logging.root.manager.loggerDict.values()):
        if isinstance(existing, logging.Logger) and handler in existing.handlers:
            existing.removeHandler(handler)
    handler.close()


def detach_run_logs() -> None:
    """Remove and close every handler installed by attach_run_log."""
    installed = set()
    for existing in list(logging.root.manager.loggerDict.values()):
        if isinstance(existing, logging.Logger):
            installed.update(h for h in existing.handlers if getattr(h, "_surfnav_run_log", False))
    for handler in installed:
        detach_run_log(handler)
