import logging

import sys

core_logger = logging.getLogger(__name__)

LOG_FORMAT = '[ ][CORE][%(asctime)s][%(levelname)s] %(message)s'
DATE_FORMAT = '%d/%m/%y-%H:%M:%S'


def level_from_flags(verbose: bool = False, debug: bool = False) -> str:
    if debug:
        return 'DEBUG'
    if verbose:
        return 'INFO'
    return 'WARNING'


def setLevel(level: str = 'WARNING'):
    core_logger.setLevel(getattr(logging, level))


if not core_logger.handlers:
    core_logger.propagate = False
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT, DATE_FORMAT))

    setLevel()
    core_logger.addHandler(handler)
