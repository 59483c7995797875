from dataclasses import dataclass, field

from alphalomax.src.core.exceptions.ParameterException import ParameterException
from alphalomax.src.core.methods.fitting_method import OptimizerConfig
from alphalomax.src.core.methods.quadrature_method import QuadratureConfig
from alphalomax.src.core.special_functions.fox_h import ContourConfig
from alphalomax.src.core.special_functions.hypergeometric import SeriesConfig
from alphalomax.src.core.utils.random_streams import DEFAULT_CHUNK_SIZE


@dataclass(frozen=True)
class MonteCarloDefaults:
    seed: int = 1
    n_samples: int = 10 ** 6
    n_streams: int = 1
    chunk_size: int = DEFAULT_CHUNK_SIZE


@dataclass(frozen=True)
class CoreSettings:
    contour: ContourConfig = field(default_factory=ContourConfig)
    series: SeriesConfig = field(default_factory=SeriesConfig)
    quadrature: QuadratureConfig = field(default_factory=QuadratureConfig)
    optimizer: OptimizerConfig = field(default_factory=OptimizerConfig)
    montecarlo: MonteCarloDefaults = field(default_factory=MonteCarloDefaults)
    snr_db_sweep: str = '0:2:40'
    gamma_sweep: str = '0:0.05:6'

    @classmethod
    def from_config(cls, config: dict) -> 'CoreSettings':
        """Settings from the core config dict built by AppConfig; missing sections keep defaults."""
        special = config.get('special_functions', {})
        fitting = dict(config.get('fitting', {}))
        if 'alpha_start_grid' in fitting:
            fitting['alpha_start_grid'] = tuple(float(alpha) for alpha in fitting['alpha_start_grid'])
        sweeps = config.get('sweeps', {})

        try:
            return cls(contour=ContourConfig(**special.get('contour', {})),
                       series=SeriesConfig(**special.get('hypergeometric', {})),
                       quadrature=QuadratureConfig(**config.get('quadrature', {})),
                       optimizer=OptimizerConfig(**fitting),
                       montecarlo=MonteCarloDefaults(**config.get('montecarlo', {})),
                       snr_db_sweep=str(sweeps.get('snr_db', cls.snr_db_sweep)),
                       gamma_sweep=str(sweeps.get('gamma', cls.gamma_sweep)))
        except TypeError as e:
            raise ParameterException('Unknown configuration key', str(e))
