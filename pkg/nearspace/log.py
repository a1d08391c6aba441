import logging
import os
from typing import Optional

from rich.console import Console
from rich.logging import RichHandler

LOG_LEVEL_ENV = "NEARSPACE_LOG_LEVEL"

# diagnostics only; reports go to stdout
console = Console(stderr=True)


def configure_logging(level: Optional[str] = None) -> logging.Logger:
    """Route the nearspace loggers through a rich handler on stderr"""
    level_name = (level or os.environ.get(LOG_LEVEL_ENV) or "WARNING").upper()
    if level_name not in logging.getLevelNamesMapping():
        raise ValueError(f"Unknown log level {level_name}")

    logger = logging.getLogger("nearspace")
    logger.setLevel(level_name)
    logger.handlers.clear()

    handler = RichHandler(console=console, show_path=False, markup=False)
    handler.setFormatter(logging.Formatter("%(message)s"))
    logger.addHandler(handler)
    logger.propagate = False
    return logger
