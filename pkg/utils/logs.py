# utils/logs.py
import logging

import coloredlogs

LOG_FORMAT = "%(asctime)s %(name)s %(levelname)s %(message)s"


def setup_logging(verbose: bool = False):
    """Colored logs on stderr; stdout is reserved for emitted records."""
    level = logging.DEBUG if verbose else logging.WARNING
    coloredlogs.install(level=level, fmt=LOG_FORMAT)
    logging.getLogger("bqho").setLevel(level)
