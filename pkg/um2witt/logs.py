"""Logger for um2witt."""

import logging

logger = logging.getLogger(__name__)
console_handler = logging.StreamHandler()
logger.addHandler(console_handler)
formatter = logging.Formatter(
    "{levelname} - {message}",
    style="{",
)
console_handler.setFormatter(formatter)


def set_debug_level(debug_level: int):
    """Set logger verbosity from a debug level (0...3)."""
    if debug_level <= 0:
        logger.setLevel("ERROR")
    elif debug_level == 1:
        logger.setLevel("WARNING")
    elif debug_level == 2:
        logger.setLevel("INFO")
    else:
        logger.setLevel("DEBUG")
