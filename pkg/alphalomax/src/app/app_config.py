import os

import yaml

from alphalomax.src.app import app_logger
from alphalomax.src.core import core_logger
from alphalomax.src.core.exceptions.ParameterException import ParameterException


class AppConfig():
    def __init__(self, environment: str = 'core', load_defaults: bool = True, verbose: bool = None,
                 debug: bool = None):

        self._current_dir = os.path.dirname(os.path.realpath(__file__))
        self.config_parameters = {'environment': environment, 'load_defaults': load_defaults}

        self.config = self._load_config(verbose, debug)

        self._set_app_logger_config(self.config['app'])
        self.logger_config = self._get_core_logger_config(self.config['app'])
        self.core_config = self._build_core_config()

    def _build_core_config(self):
        core_config = {key: value for key, value in self.config.items() if key != 'app'}
        core_config['logger'] = self.logger_config

        return core_config

    def get_alphalomax_core_config(self):
        return self.core_config

    @staticmethod
    def _level(app_config: dict) -> str:
        return core_logger.level_from_flags(app_config['verbose'], app_config['debug'])

    @staticmethod
    def _set_app_logger_config(app_config: dict):
        app_logger.setLevel(AppConfig._level(app_config))

    @staticmethod
    def _get_core_logger_config(app_config):
        return {'level': AppConfig._level(app_config)}

    @staticmethod
    def _load_yaml(yaml_name):
        try:
            with open(yaml_name, 'r') as stream:
                return yaml.safe_load(stream) or {}
        except (OSError, yaml.YAMLError) as e:
            raise ParameterException('Can not load configuration {}'.format(os.path.basename(yaml_name)), str(e))

    def _merge_configs(self, config_base, new_config):
        config = {**config_base, **new_config}
        for key in config_base:
            if isinstance(config_base[key], dict) and key in new_config:
                config[key] = self._merge_configs(config_base[key], new_config[key])

        return config

    def _load_config(self, verbose: bool, debug: bool) -> dict:
        config = {}
        if self.config_parameters['load_defaults']:
            config = self._load_yaml('{}/config/{}.yml'.format(self._current_dir, 'base_config'))
        if self.config_parameters['environment']:
            custom_config = self._load_yaml(
                '{}/config/{}.yml'.format(self._current_dir, self.config_parameters['environment']))
            config = self._merge_configs(config, custom_config)

        if verbose is not None:
            config['app']['verbose'] = verbose
        if debug is not None:
            config['app']['debug'] = debug

        return config
