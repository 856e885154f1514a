import logging
import sys
import colorlog
from pythonjsonlogger import jsonlogger
from app.core.config import settings


def setup_logging():
    # stderr only: the CLI keeps stdout for the report path
    log_handler = logging.StreamHandler(sys.stderr)

    if settings.ENVIRONMENT == "production":
        formatter = jsonlogger.JsonFormatter(
            "%(asctime)s %(levelname)s %(name)s %(message)s"
        )
    else:
        # More readable format for development
        formatter = colorlog.ColoredFormatter(
            "%(log_color)s%(asctime)s - %(name)s - %(levelname)s%(reset)s - %(message)s"
        )

    log_handler.setFormatter(formatter)

    root_logger = logging.getLogger()
    root_logger.setLevel(settings.effective_log_level)
    root_logger.addHandler(log_handler)

    # Silence noisy libraries
    logging.getLogger("mpmath").setLevel(logging.WARNING)

    return logging.getLogger("overshoot")


logger = setup_logging()
