import logging

import sys

app_logger = logging.getLogger(__name__)

LOG_FORMAT = '[ ][APP][%(asctime)s][%(levelname)s] %(message)s'
DATE_FORMAT = '%d/%m/%y-%H:%M:%S'


def setLevel(level: str = 'WARNING'):
    app_logger.setLevel(getattr(logging, level))


if not app_logger.handlers:
    app_logger.propagate = False
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT, DATE_FORMAT))

    setLevel()
    app_logger.addHandler(handler)
