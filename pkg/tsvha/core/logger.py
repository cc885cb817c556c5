import logging
import sys
from logging.handlers import RotatingFileHandler

from tsvha.core.config import settings


def setup_logger() -> logging.Logger:
    logger = logging.getLogger("tsvha")
    logger.setLevel(settings.LOG_LEVEL)
    logger.propagate = False

    formatter = logging.Formatter(settings.LOG_FORMAT)

    if not logger.handlers:
        stream_handler = logging.StreamHandler(sys.stderr)
        stream_handler.setFormatter(formatter)
        logger.addHandler(stream_handler)

        if settings.LOG_FILE is not None:
            settings.LOG_FILE.parent.mkdir(parents=True, exist_ok=True)
            file_handler = RotatingFileHandler(
                settings.LOG_FILE,
                maxBytes=1024 * 1024,
                backupCount=5,
                encoding='utf-8'
            )
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)

    return logger


def set_log_level(level: str) -> None:
    """실행 중 로그 레벨 변경 (CLI --verbose)"""
    settings.LOG_LEVEL = level
    logger.setLevel(level)


logger = setup_logger()
