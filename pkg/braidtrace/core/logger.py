import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import List, Optional

from braidtrace.core.config import settings

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(filename)s:%(lineno)d - %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
MAX_LOG_BYTES = 10 * 1024 * 1024
LOG_BACKUPS = 5


def _file_handler(log_file: str) -> logging.Handler:
    path = Path(log_file)
    path.parent.mkdir(parents=True, exist_ok=True)
    return RotatingFileHandler(path, maxBytes=MAX_LOG_BYTES, backupCount=LOG_BACKUPS)


def setup_logger(name: str = "braidtrace", level: str = "WARNING", log_file: Optional[str] = None) -> logging.Logger:
    """Logger on stderr plus an optional rotating log file; handlers are installed once per name"""
    log = logging.getLogger(name)
    log.setLevel(level.upper())
    if log.handlers:
        return log

    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(_file_handler(log_file))
    formatter = logging.Formatter(fmt=LOG_FORMAT, datefmt=DATE_FORMAT)
    for handler in handlers:
        handler.setFormatter(formatter)
        log.addHandler(handler)
    return log


def set_level(level: str) -> None:
    """Change the level of the shared logger"""
    logger.setLevel(level.upper())


logger = setup_logger(level=settings.LOG_LEVEL, log_file=settings.LOG_FILE)
