import os

from alphalomax.src.core import core_logger
from alphalomax.src.core.core_settings import CoreSettings
from alphalomax.src.core.methods.method_launcher import MethodLauncher

alphalomax_core_dir = os.path.dirname(os.path.realpath(__file__))

data_test_dir = '{}/tests/fixtures'.format(alphalomax_core_dir)


class AlphaLomax(object):
    def __init__(self, config: dict):
        core_logger.setLevel(config.get('logger', {}).get('level', 'WARNING'))

        self.settings = CoreSettings.from_config(config)
        self.method = MethodLauncher(self.settings)
