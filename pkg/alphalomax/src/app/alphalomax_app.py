from alphalomax.src.app import app_config
from alphalomax.src.core.AlphaLomax import AlphaLomax


def create_app(verbose: bool = None, environment: str = 'core', debug: bool = None) -> AlphaLomax:
    config = app_config.AppConfig(environment=environment, verbose=verbose, debug=debug)
    return AlphaLomax(config.get_alphalomax_core_config())
